#ifndef incdfs_hybrid_engine_hpp
#define incdfs_hybrid_engine_hpp

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/dfs_tree.hpp"
#include "incdfs/fractional_cascading.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/query_engine.hpp"
#include "incdfs/range_engine.hpp"
#include "incdfs/tree_partition.hpp"

namespace incdfs {

/*
 * For each vertex v and each of its nearest `hops` real ancestors u (u at i
 * hops above v, 1 <= i <= row_length(v)), the answer Q(T(v), u, par(v)).
 *
 * Built in two passes. First every edge (a, b) with a above b marks the pairs
 * (a, v) for v on the path from b up to the vertex just below a, limited to
 * `hops` vertices: a is adjacent to T(v) through b. Then each row is filled
 * top-down from its nearest ancestor: entry i is the marked edge of u_i if
 * any, else entry i - 1.
 */
class ShortPathTable {
public:
    ShortPathTable() = default;
    ShortPathTable(const Graph& g, const DfsTree& t, const LevelAncestor& la, std::uint32_t hops);

    static BuildTask build_into(const Graph& g, const DfsTree& t, const LevelAncestor& la,
                                std::uint32_t hops, ShortPathTable& out);

    std::uint32_t hops() const noexcept { return hops_; }
    std::uint32_t row_length(VertexId v) const {
        return static_cast<std::uint32_t>(row_begin_[v + 1] - row_begin_[v]);
    }
    std::size_t entry_count() const noexcept { return entries_.size(); }

    // Answer for the ancestor `i` hops above v; throws InvalidQuery unless
    // 1 <= i <= row_length(v).
    QueryAnswer lookup(VertexId v, std::uint32_t i) const;

private:
    std::uint32_t hops_ = 0;
    std::vector<std::size_t> row_begin_;
    std::vector<Edge> entries_;
};

// Table with hops = 2 * ceil_log2(n).
ShortPathTable build_short_path_table(const Graph& g, const DfsTree& t);

/*
 * Marked set M of the tree partition with k = max(2, K), K = ceil_log2(n),
 * keeping only vertices whose subtree has at least K vertices. Every vertex
 * with a marked proper ancestor belongs to the group of the nearest one;
 * group members are stored in preorder, so a subtree without marked vertices
 * occupies a contiguous block of its group.
 *
 * Each group owns a cascade family over its members' neighbour lists, keyed
 * by the depth of the neighbour and sorted ascending.
 */
class MarkedIndex {
public:
    MarkedIndex() = default;
    MarkedIndex(const Graph& g, const DfsTree& t);

    static BuildTask build_into(const Graph& g, const DfsTree& t, MarkedIndex& out);

    std::uint32_t size_threshold() const noexcept { return threshold_; }
    const Partition& partition() const noexcept { return partition_; }
    // Filtered marked set, ascending id.
    const std::vector<VertexId>& marked() const noexcept { return marked_; }
    bool is_marked(VertexId v) const { return group_index_[v] != kNoGroup; }

    // Nearest marked proper ancestor, or kNoVertex.
    VertexId anchor(VertexId v) const { return anchor_[v]; }

    std::span<const VertexId> group(VertexId s) const;
    const CascadeFamily& cascade(VertexId s) const;
    std::uint32_t position_in_group(VertexId v) const { return position_[v]; }

    // Neighbours of v ordered by ascending depth; aligned with v's cascade array.
    std::span<const VertexId> neighbors_by_depth(VertexId v) const {
        return {by_depth_.data() + by_depth_begin_[v], by_depth_.data() + by_depth_begin_[v + 1]};
    }

private:
    static constexpr std::uint32_t kNoGroup = UINT32_MAX;

    struct Group {
        std::vector<VertexId> members;
        CascadeFamily cascade;
    };

    std::uint32_t threshold_ = 1;
    Partition partition_;
    std::vector<VertexId> marked_;
    std::vector<std::uint32_t> group_index_;
    std::vector<VertexId> anchor_;
    std::vector<std::uint32_t> position_;
    std::vector<std::size_t> by_depth_begin_;
    std::vector<VertexId> by_depth_;
    std::vector<Group> groups_;
};

inline MarkedIndex build_marked_index(const Graph& g, const DfsTree& t) { return MarkedIndex(g, t); }

/*
 * Batched engine. For a path (u, ..., v) and a hanging root x:
 *   - depth(x) - depth(u) within the short-path row of x: one table read;
 *   - otherwise let s be the nearest marked vertex at or above par(x);
 *     |T(x)| < K: one cascade search per distinct s with key depth(u), then
 *     the minimum over y in T(x) of y's first neighbour at depth >= depth(u),
 *     kept only if it lies above x;
 *     |T(x)| >= K: a range-index query.
 * Single queries use the table when it covers the pair, else the range index.
 */
class HybridEngine final : public QueryEngine {
public:
    HybridEngine(const Graph& g, const DfsTree& t) : QueryEngine(g, t) {}
    EngineKind kind() const noexcept override { return EngineKind::hybrid; }

    std::uint32_t log_n() const noexcept { return log_n_; }
    const ShortPathTable& short_paths() const noexcept { return table_; }
    const MarkedIndex& marked_index() const noexcept { return marked_; }
    const RangeIndex& range_index() const noexcept { return range_; }

    static BuildTask build(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out);
    static std::uint64_t build_bound(std::uint64_t n, std::uint64_t m);

protected:
    QueryAnswer answer(VertexId w, VertexId x, EngineStats& stats) const override;
    void answer_path(std::span<const VertexId> path, std::span<const VertexId> hanging,
                     std::span<QueryAnswer> out, EngineStats& stats) const override;

private:
    QueryAnswer range_answer(VertexId w, VertexId x, EngineStats& stats) const;

    std::uint32_t log_n_ = 1;
    LevelAncestor levels_;
    ShortPathTable table_;
    MarkedIndex marked_;
    RangeIndex range_;
};

}  // namespace incdfs

#endif /* incdfs_hybrid_engine_hpp */
