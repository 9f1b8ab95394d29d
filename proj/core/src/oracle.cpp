#include "incdfs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <vector>

namespace incdfs::oracle {

QueryAnswer brute_query(const Graph& g, const DfsTree& t, VertexId w, VertexId u, VertexId v) {
    const auto n = static_cast<VertexId>(t.vertex_count());
    if (g.vertex_count() != n) {
        throw InvalidQuery("brute_query: tree does not span the graph");
    }
    if (w >= n || u >= n || v >= n || !t.is_ancestor(u, v)) {
        throw InvalidQuery("brute_query: path endpoints are not an ancestor pair");
    }
    const VertexId hang = t.parent(w);
    if (hang == t.root() || !t.is_ancestor(u, hang) || !t.is_ancestor(hang, v) ||
        t.is_ancestor(w, v)) {
        throw InvalidQuery("brute_query: subtree does not hang from the path");
    }

    auto on_path = [&](VertexId x) { return t.is_ancestor(u, x) && t.is_ancestor(x, v); };
    QueryAnswer best;
    auto consider = [&](VertexId x, VertexId y) {
        if (!t.is_ancestor(w, y) || !on_path(x)) {
            return;
        }
        if (!best || std::tuple(t.depth(x), t.first(y)) <
                         std::tuple(t.depth(best->hi), t.first(best->lo))) {
            best = Edge{x, y};
        }
    };
    for (auto [a, b] : g.edges()) {
        consider(a, b);
        consider(b, a);
    }
    return best;
}

std::optional<Violation> find_dfs_violation(const Graph& g, std::span<const VertexId> parents) {
    const std::size_t n = g.vertex_count();
    if (parents.size() != n + 1) {
        return Violation{Violation::Kind::shape, kNoVertex, kNoVertex,
                         "tree has " + std::to_string(parents.empty() ? 0 : parents.size() - 1) +
                             " vertices, graph has " + std::to_string(n)};
    }
    DfsTree t;
    try {
        t = DfsTree::from_parents(std::vector<VertexId>(parents.begin(), parents.end()));
    } catch (const InvalidGraph& e) {
        return Violation{Violation::Kind::shape, kNoVertex, kNoVertex, e.what()};
    }
    for (std::size_t v = 0; v < n; ++v) {
        VertexId p = parents[v];
        if (p != t.root() && !g.has_edge(static_cast<VertexId>(v), p)) {
            return Violation{Violation::Kind::missing_tree_edge, p, static_cast<VertexId>(v),
                             "tree edge (" + std::to_string(p) + ", " + std::to_string(v) +
                                 ") is not in the graph"};
        }
    }
    for (auto [a, b] : g.edges()) {
        if (!t.is_ancestor(a, b) && !t.is_ancestor(b, a)) {
            return Violation{Violation::Kind::cross_edge, a, b,
                             "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") joins two unrelated vertices"};
        }
    }
    return std::nullopt;
}

bool validate_dfs_tree(const Graph& g, std::span<const VertexId> parents) {
    return !find_dfs_violation(g, parents).has_value();
}

bool validate_dfs_tree(const Graph& g, const DfsTree& t) {
    return validate_dfs_tree(g, t.parents());
}

DfsTree reference_batch_insert(const Graph& g, const DfsTree& t, const UpdateBatch& batch) {
    const std::size_t base = g.vertex_count();
    check_batch(base, batch);
    const std::size_t total = base + batch.new_vertices;
    const auto old_root = t.root();
    const auto new_root = static_cast<VertexId>(total);

    auto tree_parent = [&](VertexId x) -> VertexId {
        if (x >= base || t.parent(x) == old_root) {
            return new_root;
        }
        return t.parent(x);
    };

    std::vector<bool> visited(total + 1, false);
    std::vector<VertexId> parent(total + 1, kNoVertex);
    std::vector<std::vector<VertexId>> answers(total);
    std::vector<std::vector<VertexId>> inserted(total);
    for (auto [a, b] : batch.new_edges) {
        inserted[a].push_back(b);
        inserted[b].push_back(a);
    }
    visited[new_root] = true;

    std::function<void(VertexId)> dfs = [&](VertexId v) {
        VertexId u = v;
        while (!visited[tree_parent(u)]) {
            u = tree_parent(u);
        }
        std::vector<VertexId> path;
        for (VertexId x = v;; x = tree_parent(x)) {
            path.push_back(x);
            if (x == u) {
                break;
            }
        }
        std::reverse(path.begin(), path.end());
        for (VertexId x : path) {
            visited[x] = true;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            parent[path[i]] = path[i + 1];
        }
        if (u < base) {
            for (std::size_t i = 0; i < path.size(); ++i) {
                for (VertexId x : t.children(path[i])) {
                    if (i + 1 < path.size() && x == path[i + 1]) {
                        continue;
                    }
                    if (auto e = brute_query(g, t, x, u, v)) {
                        answers[e->hi].push_back(e->lo);
                    }
                }
            }
        }
        for (VertexId w : path) {
            for (const auto* list : {&answers[w], &inserted[w]}) {
                for (VertexId x : *list) {
                    if (!visited[x]) {
                        parent[x] = w;
                        dfs(x);
                    }
                }
            }
        }
    };

    std::vector<VertexId> roots(t.children(old_root).begin(), t.children(old_root).end());
    for (std::size_t x = base; x < total; ++x) {
        roots.push_back(static_cast<VertexId>(x));
    }
    for (VertexId x : roots) {
        if (!visited[x]) {
            parent[x] = new_root;
            dfs(x);
        }
    }
    return DfsTree::from_parents(std::move(parent));
}

}  // namespace incdfs::oracle

namespace incdfs {

QueryAnswer BruteEngine::answer(VertexId w, VertexId x, EngineStats& stats) const {
    stats.work += graph().edge_count();
    return oracle::brute_query(graph(), tree(), w, x, tree().parent(w));
}

}  // namespace incdfs
