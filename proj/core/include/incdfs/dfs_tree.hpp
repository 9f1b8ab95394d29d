#ifndef incdfs_dfs_tree_hpp
#define incdfs_dfs_tree_hpp

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/types.hpp"

namespace incdfs {

/*
 * Rooted spanning tree over the real vertices 0..n-1 plus a virtual super
 * root stored at index n. Children are kept in ascending id order, and the
 * preorder visit sequence gives each vertex an interval [first, last] that
 * contains exactly its subtree. The super root sits at position 0.
 */
class DfsTree {
public:
    DfsTree() = default;

    // `parents` has n+1 entries; entry n (the super root) must be kNoVertex
    // and every other entry a vertex id in 0..n. Throws InvalidGraph if the
    // links do not form a single tree rooted at index n.
    static DfsTree from_parents(std::vector<VertexId> parents);

    std::size_t vertex_count() const noexcept { return parent_.empty() ? 0 : parent_.size() - 1; }
    VertexId root() const noexcept { return static_cast<VertexId>(vertex_count()); }

    VertexId parent(VertexId v) const { return parent_[v]; }
    std::uint32_t depth(VertexId v) const { return depth_[v]; }
    std::span<const VertexId> children(VertexId v) const {
        return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
    }

    // Preorder sequence; order()[0] is the super root.
    std::span<const VertexId> order() const noexcept { return order_; }
    std::uint32_t first(VertexId v) const { return first_[v]; }
    std::uint32_t last(VertexId v) const { return last_[v]; }
    std::uint32_t subtree_size(VertexId v) const { return last_[v] - first_[v] + 1; }
    VertexId at(std::uint32_t position) const { return order_[position]; }

    std::span<const VertexId> parents() const noexcept { return parent_; }

    // True iff a == b or a is a proper ancestor of b.
    bool is_ancestor(VertexId a, VertexId b) const {
        return first_[a] <= first_[b] && last_[b] <= last_[a];
    }

private:
    std::vector<VertexId> parent_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> child_begin_;
    std::vector<VertexId> child_list_;
    std::vector<VertexId> order_;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> last_;
};

// Depth-first search tree of `g` hanging from the super root. Components are
// entered in ascending order of their smallest vertex, neighbours explored in
// ascending id.
DfsTree static_dfs(const Graph& g);

inline bool is_ancestor(const DfsTree& t, VertexId a, VertexId b) { return t.is_ancestor(a, b); }

// Vertices of path(u, v) from u down to v. Throws InvalidQuery unless u is an
// ancestor of v.
std::vector<VertexId> path_vertices(const DfsTree& t, VertexId u, VertexId v);

/*
 * Level-ancestor lookup by power-of-two jump tables.
 */
class LevelAncestor {
public:
    LevelAncestor() = default;
    explicit LevelAncestor(const DfsTree& t);

    static BuildTask build_into(const DfsTree& t, LevelAncestor& out);

    // Ancestor of v exactly `hops` edges above it; throws std::out_of_range
    // when hops exceeds depth(v).
    VertexId ancestor(VertexId v, std::uint32_t hops) const;

    std::size_t levels() const noexcept { return jump_.size(); }

private:
    std::vector<std::vector<VertexId>> jump_;
    std::vector<std::uint32_t> depth_;
};

inline VertexId level_ancestor(const LevelAncestor& la, VertexId v, std::uint32_t hops) {
    return la.ancestor(v, hops);
}

}  // namespace incdfs

#endif /* incdfs_dfs_tree_hpp */
