#ifndef incdfs_dense_engine_hpp
#define incdfs_dense_engine_hpp

#include <cstdint>
#include <memory>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/query_engine.hpp"

namespace incdfs {

/*
 * Answers of Q(T(w), u, par(w)) for every vertex w and every real proper
 * ancestor u, stored per w and indexed by depth(u) - 1.
 *
 * Construction keeps, for each vertex u, the array next_u[p] = smallest DFS
 * position >= p holding a lower neighbour of u. Walking u upward from par(w),
 * u is adjacent to T(w) iff next_u[first(w)] <= last(w), and the vertex at
 * that position is the witness.
 */
class DenseTable {
public:
    DenseTable() = default;
    DenseTable(const Graph& g, const DfsTree& t);

    static BuildTask build_into(const Graph& g, const DfsTree& t, DenseTable& out);

    // Throws InvalidQuery unless u is a real proper ancestor of w.
    QueryAnswer lookup(VertexId w, VertexId u) const;

    std::size_t entry_count() const noexcept { return answers_.size(); }

private:
    const DfsTree* tree_ = nullptr;
    std::vector<std::size_t> row_begin_;
    std::vector<Edge> answers_;  // Edge{} (kNoVertex) encodes an empty answer
};

inline DenseTable build_dense(const Graph& g, const DfsTree& t) { return DenseTable(g, t); }

inline QueryAnswer dense_query(const DenseTable& tab, VertexId w, VertexId u) {
    return tab.lookup(w, u);
}

class DenseEngine final : public QueryEngine {
public:
    DenseEngine(const Graph& g, const DfsTree& t) : QueryEngine(g, t) {}
    EngineKind kind() const noexcept override { return EngineKind::dense; }

    const DenseTable& table() const noexcept { return table_; }

    static BuildTask build(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out);
    static std::uint64_t build_bound(std::uint64_t n, std::uint64_t m);

protected:
    QueryAnswer answer(VertexId w, VertexId x, EngineStats& stats) const override;

private:
    DenseTable table_;
};

}  // namespace incdfs

#endif /* incdfs_dense_engine_hpp */
