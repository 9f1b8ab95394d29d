#ifndef incdfs_fractional_cascading_hpp
#define incdfs_fractional_cascading_hpp

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "incdfs/build_task.hpp"

namespace incdfs {

/*
 * Fractional cascading over a chain of sorted arrays A_0 -> A_1 -> ... ->
 * A_{k-1}. Augmented list M_i holds A_i merged with every second element of
 * M_{i+1}; each entry bridges to the first position >= its key in A_i and in
 * M_{i+1}. One binary search in M_0 followed by at most one comparison per
 * further list yields the successor of a key in every array.
 *
 * Every augmented list ends in a sentinel entry whose key is kInfinity.
 */
class CascadeFamily {
public:
    using Key = std::int64_t;
    static constexpr Key kInfinity = std::numeric_limits<Key>::max();

    struct Entry {
        Key key = kInfinity;
        std::uint32_t orig = 0;  // lower bound of key in the original array
        std::uint32_t down = 0;  // lower bound of key in the next augmented list
    };

    CascadeFamily() = default;
    // Throws std::invalid_argument if an array is not sorted ascending.
    explicit CascadeFamily(std::vector<std::vector<Key>> arrays);

    static BuildTask build_into(std::vector<std::vector<Key>> arrays, CascadeFamily& out);

    std::size_t array_count() const noexcept { return array_begin_.empty() ? 0 : array_begin_.size() - 1; }
    std::span<const Key> array(std::size_t i) const;
    // Augmented list i including its trailing sentinel.
    std::span<const Entry> augmented(std::size_t i) const;
    // Total augmented entries, sentinels excluded.
    std::size_t augmented_size() const noexcept { return entries_.size() - array_count(); }
    std::size_t original_size() const noexcept { return keys_.size(); }

    // out[i] = position of the first element >= x in array i (array size if
    // none). Adds the number of key comparisons made to *comparisons.
    void successor_positions(Key x, std::span<std::uint32_t> out,
                             std::uint64_t* comparisons = nullptr) const;

    std::vector<std::optional<Key>> query_all_successors(Key x,
                                                         std::uint64_t* comparisons = nullptr) const;

private:
    std::vector<Key> keys_;
    std::vector<std::size_t> array_begin_;
    std::vector<Entry> entries_;
    std::vector<std::size_t> list_begin_;
};

inline CascadeFamily build_cascade(std::vector<std::vector<CascadeFamily::Key>> arrays) {
    return CascadeFamily(std::move(arrays));
}

}  // namespace incdfs

#endif /* incdfs_fractional_cascading_hpp */
