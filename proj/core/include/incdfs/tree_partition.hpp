#ifndef incdfs_tree_partition_hpp
#define incdfs_tree_partition_hpp

#include <cstdint>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/dfs_tree.hpp"

namespace incdfs {

/*
 * Marked set M of a rooted forest such that deleting M leaves connected
 * pieces of at most k vertices each, with |M| <= floor(n / (k + 1)).
 * The super root of the DfsTree is never marked and never counted.
 */
struct Partition {
    static constexpr std::uint32_t kRemoved = UINT32_MAX;

    std::uint32_t k = 0;
    std::vector<VertexId> marked;          // ascending vertex id
    std::vector<std::uint32_t> comp_of;    // per real vertex; kRemoved for marked ones
    std::uint32_t component_count = 0;

    bool is_marked(VertexId v) const { return comp_of[v] == kRemoved; }
};

// Throws std::invalid_argument unless 2 <= k <= n.
Partition compute_partition(const DfsTree& t, std::uint32_t k);

BuildTask compute_partition_into(const DfsTree& t, std::uint32_t k, Partition& out);

}  // namespace incdfs

#endif /* incdfs_tree_partition_hpp */
