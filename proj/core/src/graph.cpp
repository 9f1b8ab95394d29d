#include "incdfs/graph.hpp"

#include <algorithm>
#include <string>

namespace incdfs {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
    : adjacency_(vertex_count) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        add_edge(u, v);
    }
}

VertexId Graph::add_vertex() {
    adjacency_.emplace_back();
    return static_cast<VertexId>(adjacency_.size() - 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u >= vertex_count() || v >= vertex_count()) {
        throw InvalidGraph("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") references a vertex outside 0.." +
                           std::to_string(vertex_count()) + ")");
    }
    if (u == v) {
        throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    edges_.emplace_back(u, v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
        return false;
    }
    const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
}

BuildTask Graph::copy_prefix(const Graph& source, std::size_t vertex_count,
                             std::size_t edge_count, Graph& out) {
    constexpr std::size_t kChunk = 64;
    out.adjacency_.clear();
    out.adjacency_.reserve(vertex_count);
    out.edges_.clear();
    out.edges_.reserve(edge_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        out.adjacency_.emplace_back();
        if ((v + 1) % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield vertex_count % kChunk;
    for (std::size_t i = 0; i < edge_count; ++i) {
        auto [u, v] = source.edges_[i];
        out.adjacency_[u].push_back(v);
        out.adjacency_[v].push_back(u);
        out.edges_.emplace_back(u, v);
        if ((i + 1) % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield edge_count % kChunk;
}

}  // namespace incdfs
