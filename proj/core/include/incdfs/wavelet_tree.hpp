#ifndef incdfs_wavelet_tree_hpp
#define incdfs_wavelet_tree_hpp

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "incdfs/build_task.hpp"

namespace incdfs {

/*
 * Levelwise wavelet tree over a sequence of unsigned values. Level l splits
 * every node by bit (depth - 1 - l) of the value, zeros stably before ones,
 * so each node is a contiguous block of its level. Ranks are prefix counts
 * per level; the order of the final level is kept as a permutation back to
 * input positions.
 */
class WaveletTree {
public:
    struct Hit {
        std::size_t index = 0;  // position in the input sequence
        std::uint32_t value = 0;
    };

    WaveletTree() = default;
    explicit WaveletTree(std::vector<std::uint32_t> values);

    static BuildTask build_into(std::vector<std::uint32_t> values, WaveletTree& out);

    std::size_t size() const noexcept { return size_; }
    // Number of bit levels: bit width of the largest value, at least 1.
    std::uint32_t depth() const noexcept { return depth_; }

    std::uint32_t access(std::size_t i) const;
    std::vector<std::uint32_t> reconstruct() const;

    // Smallest value v with lo <= v <= hi among positions [l, r), reported at
    // its leftmost position. `visits` counts internal nodes whose ranks were
    // consulted.
    std::optional<Hit> range_min_value(std::size_t l, std::size_t r, std::uint32_t lo,
                                       std::uint32_t hi, std::uint64_t* visits = nullptr) const;

private:
    std::optional<Hit> descend(std::uint32_t level, std::size_t b, std::size_t e, std::size_t l,
                               std::size_t r, std::uint64_t prefix, std::uint32_t lo,
                               std::uint32_t hi, std::uint64_t& visits) const;

    std::size_t size_ = 0;
    std::uint32_t depth_ = 1;
    std::vector<std::vector<std::uint32_t>> ones_;  // per level, prefix counts of one bits
    std::vector<std::uint32_t> leaf_origin_;         // final-level position -> input position
};

}  // namespace incdfs

#endif /* incdfs_wavelet_tree_hpp */
