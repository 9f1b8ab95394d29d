#ifndef incdfs_types_hpp
#define incdfs_types_hpp

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace incdfs {

/// Dense vertex index. Real vertices are 0..n-1; a DfsTree stores its
/// virtual super root at index n.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// An edge attached to a DFS tree: `hi` is an ancestor of `lo`.
struct Edge {
    VertexId hi = kNoVertex;
    VertexId lo = kNoVertex;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Answer to Q(T(w), u, v): the edge joining the highest vertex of the path
/// to the subtree, or empty when no such edge exists.
using QueryAnswer = std::optional<Edge>;

class InvalidQuery : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidUpdate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ceil(log2(n)) clamped below at 1; the "log n" used by every size parameter.
constexpr std::uint32_t ceil_log2(std::uint64_t n) noexcept {
    std::uint32_t bits = 0;
    while ((std::uint64_t{1} << bits) < n) {
        ++bits;
    }
    return bits == 0 ? 1 : bits;
}

}  // namespace incdfs

#endif /* incdfs_types_hpp */
