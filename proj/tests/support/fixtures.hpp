#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "incdfs/dfs_tree.hpp"
#include "incdfs/graph.hpp"
#include "incdfs/update.hpp"

namespace incdfs::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// G(n, p) without parallel edges.
inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    Graph g(n);
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (coin(rng, p)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

// Parent array of a random rooted forest under the super root (index n).
// `spread` near 0 gives long paths, near 1 bushy trees.
inline std::vector<VertexId> random_forest_parents(Rng& rng, std::size_t n, double spread = 0.5,
                                                   double new_root = 0.02) {
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) {
        perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexId> parents(n + 1, kNoVertex);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || coin(rng, new_root)) {
            parents[perm[i]] = static_cast<VertexId>(n);
        } else if (coin(rng, spread)) {
            parents[perm[i]] = perm[uniform(rng, 0, i - 1)];
        } else {
            parents[perm[i]] = perm[i - 1];
        }
    }
    return parents;
}

inline DfsTree random_tree(Rng& rng, std::size_t n, double spread = 0.5) {
    return DfsTree::from_parents(random_forest_parents(rng, n, spread));
}

// Graph whose static DFS is the given tree shape plus random back edges.
inline Graph graph_over_tree(Rng& rng, const DfsTree& t, double back_edge_p) {
    const std::size_t n = t.vertex_count();
    Graph g(n);
    for (VertexId v = 0; v < n; ++v) {
        if (t.parent(v) != t.root()) {
            g.add_edge(t.parent(v), v);
        }
        for (VertexId a = t.parent(v); a != t.root(); a = t.parent(a)) {
            if (a != t.parent(v) && coin(rng, back_edge_p)) {
                g.add_edge(a, v);
            }
        }
    }
    return g;
}

inline UpdateBatch random_batch(Rng& rng, std::size_t base, std::size_t size,
                                double vertex_share = 0.15) {
    UpdateBatch batch;
    std::size_t current = base;
    for (std::size_t i = 0; i < size; ++i) {
        if (current < 2 || coin(rng, vertex_share)) {
            batch.push(Update::vertex());
            ++current;
            continue;
        }
        auto a = static_cast<VertexId>(uniform(rng, 0, current - 1));
        auto b = static_cast<VertexId>(uniform(rng, 0, current - 2));
        if (b >= a) {
            ++b;
        }
        batch.push(Update::edge(a, b));
    }
    return batch;
}

// Same distribution as random_batch, kept in stream order.
inline std::vector<Update> random_stream(Rng& rng, std::size_t base, std::size_t size,
                                         double vertex_share = 0.15) {
    std::vector<Update> out;
    std::size_t current = base;
    for (std::size_t i = 0; i < size; ++i) {
        if (current < 2 || coin(rng, vertex_share)) {
            out.push_back(Update::vertex());
            ++current;
            continue;
        }
        auto a = static_cast<VertexId>(uniform(rng, 0, current - 1));
        auto b = static_cast<VertexId>(uniform(rng, 0, current - 2));
        if (b >= a) {
            ++b;
        }
        out.push_back(Update::edge(a, b));
    }
    return out;
}

inline Graph apply_batch(const Graph& g, const UpdateBatch& batch) {
    Graph out(g.vertex_count() + batch.new_vertices, g.edges());
    for (auto [a, b] : batch.new_edges) {
        out.add_edge(a, b);
    }
    return out;
}

// Every (w, u) with u a real proper ancestor of w.
inline std::vector<std::pair<VertexId, VertexId>> all_query_pairs(const DfsTree& t) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId w = 0; w < t.vertex_count(); ++w) {
        for (VertexId u = t.parent(w); u != t.root(); u = t.parent(u)) {
            out.emplace_back(w, u);
        }
    }
    return out;
}

inline std::uint32_t answer_depth(const DfsTree& t, const QueryAnswer& a) {
    return a ? t.depth(a->hi) : UINT32_MAX;
}

}  // namespace incdfs::testing
