#ifndef incdfs_graph_hpp
#define incdfs_graph_hpp

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "incdfs/build_task.hpp"
#include "incdfs/types.hpp"

namespace incdfs {

/*
 * Undirected multigraph over dense vertex ids, growable by insertion.
 * Self-loops are rejected; parallel edges are kept. Edges are also recorded
 * in insertion order, so any prefix of the insertion history is itself a
 * well-formed graph (the maintainer snapshots graphs this way).
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    Graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    VertexId add_vertex();
    // Throws InvalidGraph on a self-loop or an out-of-range endpoint.
    void add_edge(VertexId u, VertexId v);

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::span<const std::pair<VertexId, VertexId>> edges() const noexcept { return edges_; }

    bool has_edge(VertexId u, VertexId v) const;

    // Rebuilds `out` as the graph of the first `vertex_count` vertices and
    // first `edge_count` edges of `source`, yielding one unit per copied
    // vertex or edge. `source` may grow while the task is suspended.
    static BuildTask copy_prefix(const Graph& source, std::size_t vertex_count,
                                 std::size_t edge_count, Graph& out);

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

}  // namespace incdfs

#endif /* incdfs_graph_hpp */
