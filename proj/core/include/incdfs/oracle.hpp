#ifndef incdfs_oracle_hpp
#define incdfs_oracle_hpp

#include <optional>
#include <span>
#include <string>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/query_engine.hpp"
#include "incdfs/update.hpp"

// Brute-force references used as ground truth by the tests. Everything here
// is deliberately simple and O(m) per call.
namespace incdfs::oracle {

// Q(T(w), u, v) by scanning every edge of g. Requires u to be an ancestor of
// v, par(w) on path(u, v) and w off it; throws InvalidQuery otherwise.
QueryAnswer brute_query(const Graph& g, const DfsTree& t, VertexId w, VertexId u, VertexId v);

struct Violation {
    enum class Kind { shape, missing_tree_edge, cross_edge };
    Kind kind = Kind::shape;
    VertexId a = kNoVertex;
    VertexId b = kNoVertex;
    std::string message;
};

// Checks a parent array (n+1 entries, super root last) against g: it must be
// a tree under the super root, every link to a real parent must be an edge,
// and every edge must join an ancestor-descendant pair.
std::optional<Violation> find_dfs_violation(const Graph& g, std::span<const VertexId> parents);

bool validate_dfs_tree(const Graph& g, const DfsTree& t);
bool validate_dfs_tree(const Graph& g, std::span<const VertexId> parents);

// Straight transcription of the batch-insertion traversal with brute_query
// for every hanging subtree; recursion follows the tree shape, so use it on
// small inputs only.
DfsTree reference_batch_insert(const Graph& g, const DfsTree& t, const UpdateBatch& batch);

}  // namespace incdfs::oracle

namespace incdfs {

// Point engine backed by brute_query.
class BruteEngine final : public QueryEngine {
public:
    BruteEngine(const Graph& g, const DfsTree& t) : QueryEngine(g, t) {}
    EngineKind kind() const noexcept override { return EngineKind::brute; }

protected:
    QueryAnswer answer(VertexId w, VertexId x, EngineStats& stats) const override;
};

}  // namespace incdfs

#endif /* incdfs_oracle_hpp */
