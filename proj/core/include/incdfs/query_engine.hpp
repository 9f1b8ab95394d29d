#ifndef incdfs_query_engine_hpp
#define incdfs_query_engine_hpp

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/types.hpp"

namespace incdfs {

enum class EngineKind { brute, dense, range, hybrid };

std::string_view to_string(EngineKind kind) noexcept;
std::optional<EngineKind> parse_engine_kind(std::string_view name) noexcept;

// Instrumented work of engine queries. Counters are accumulated by the
// caller that owns the object; engines never keep shared counters.
struct EngineStats {
    std::uint64_t work = 0;             // every elementary engine step below, summed
    std::uint64_t queries = 0;          // subtrees answered
    std::uint64_t table_lookups = 0;    // short-path table reads
    std::uint64_t cascade_queries = 0;  // fractional-cascading searches
    std::uint64_t cascade_work = 0;     // comparisons and bridge steps inside them
    std::uint64_t queries_3b = 0;       // large subtrees sent to the range index
    std::uint64_t range_visits = 0;     // wavelet nodes visited by range queries
    std::vector<VertexId> range_roots;  // subtree roots answered by the range index

    EngineStats& operator+=(const EngineStats& other);
};

/*
 * Answers Q(T(w), u, v) over a fixed graph and one of its DFS trees: the edge
 * from the highest vertex of path(u, v) into the hanging subtree T(w).
 *
 * Ties at the same path vertex resolve to the subtree endpoint that comes
 * first in the tree's preorder, for every engine.
 *
 * An engine keeps references to the graph and tree it was built over; both
 * must outlive it.
 */
class QueryEngine {
public:
    QueryEngine(const Graph& g, const DfsTree& t) : graph_(&g), tree_(&t) {}
    virtual ~QueryEngine() = default;
    QueryEngine(const QueryEngine&) = delete;
    QueryEngine& operator=(const QueryEngine&) = delete;

    virtual EngineKind kind() const noexcept = 0;

    const Graph& graph() const noexcept { return *graph_; }
    const DfsTree& tree() const noexcept { return *tree_; }

    // Q(T(w), x, par(w)) for a real vertex x that is a proper ancestor of w.
    QueryAnswer query(VertexId w, VertexId x, EngineStats* stats = nullptr) const;

    // Q(T(h), path.front(), path.back()) for every h in `hanging`, written to
    // `out`. `path` lists a downward tree path of real vertices; each h must
    // hang from it (parent on the path, h itself off it).
    void batched_path_query(std::span<const VertexId> path, std::span<const VertexId> hanging,
                            std::span<QueryAnswer> out, EngineStats& stats) const;

    std::vector<QueryAnswer> batched_path_query(std::span<const VertexId> path,
                                                std::span<const VertexId> hanging,
                                                EngineStats& stats) const;

protected:
    virtual QueryAnswer answer(VertexId w, VertexId x, EngineStats& stats) const = 0;

    // Point engines answer a path by looping over single queries.
    virtual void answer_path(std::span<const VertexId> path, std::span<const VertexId> hanging,
                             std::span<QueryAnswer> out, EngineStats& stats) const;

private:
    const Graph* graph_;
    const DfsTree* tree_;
};

std::unique_ptr<QueryEngine> make_engine(EngineKind kind, const Graph& g, const DfsTree& t);

// Resumable construction of an engine; `out` is set when the task completes.
BuildTask make_engine_task(EngineKind kind, const Graph& g, const DfsTree& t,
                           std::unique_ptr<QueryEngine>& out);

// Dense when n^2 <= m * ceil_log2(n), hybrid otherwise.
EngineKind preferred_engine(std::uint64_t n, std::uint64_t m) noexcept;

// Upper bound on the work units make_engine_task reports for a graph with n
// vertices and m edges.
std::uint64_t engine_build_bound(EngineKind kind, std::uint64_t n, std::uint64_t m);

}  // namespace incdfs

#endif /* incdfs_query_engine_hpp */
