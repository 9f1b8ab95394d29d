#include "incdfs/dfs_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace incdfs {

DfsTree DfsTree::from_parents(std::vector<VertexId> parents) {
    if (parents.empty()) {
        throw InvalidGraph("parent array must contain the super root");
    }
    const std::size_t n = parents.size() - 1;
    const auto root = static_cast<VertexId>(n);
    if (parents[n] != kNoVertex) {
        throw InvalidGraph("super root must not have a parent");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (parents[v] > root || parents[v] == v) {
            throw InvalidGraph("vertex " + std::to_string(v) + " has invalid parent");
        }
    }

    DfsTree t;
    t.child_begin_.assign(n + 2, 0);
    for (std::size_t v = 0; v < n; ++v) {
        ++t.child_begin_[parents[v] + 1];
    }
    for (std::size_t i = 1; i < t.child_begin_.size(); ++i) {
        t.child_begin_[i] += t.child_begin_[i - 1];
    }
    t.child_list_.resize(n);
    {
        std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
        for (std::size_t v = 0; v < n; ++v) {
            t.child_list_[fill[parents[v]]++] = static_cast<VertexId>(v);
        }
    }

    t.parent_ = std::move(parents);
    t.depth_.assign(n + 1, 0);
    t.first_.assign(n + 1, 0);
    t.last_.assign(n + 1, 0);
    t.order_.reserve(n + 1);

    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        t.first_[v] = static_cast<std::uint32_t>(t.order_.size());
        t.order_.push_back(v);
        if (v != root) {
            t.depth_[v] = t.depth_[t.parent_[v]] + 1;
        }
        auto kids = t.children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    if (t.order_.size() != n + 1) {
        throw InvalidGraph("parent links contain a cycle");
    }

    std::vector<std::uint32_t> size(n + 1, 1);
    for (std::size_t i = n; i > 0; --i) {
        VertexId v = t.order_[i];
        size[t.parent_[v]] += size[v];
    }
    for (std::size_t v = 0; v <= n; ++v) {
        t.last_[v] = t.first_[v] + size[v] - 1;
    }
    return t;
}

DfsTree static_dfs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto root = static_cast<VertexId>(n);

    std::vector<std::vector<VertexId>> sorted(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto nb = g.neighbors(static_cast<VertexId>(v));
        sorted[v].assign(nb.begin(), nb.end());
        std::sort(sorted[v].begin(), sorted[v].end());
    }

    std::vector<VertexId> parent(n + 1, kNoVertex);
    std::vector<bool> visited(n, false);
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (visited[s]) {
            continue;
        }
        visited[s] = true;
        parent[s] = root;
        stack.emplace_back(static_cast<VertexId>(s), 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == sorted[v].size()) {
                stack.pop_back();
                continue;
            }
            VertexId w = sorted[v][next++];
            if (!visited[w]) {
                visited[w] = true;
                parent[w] = v;
                stack.emplace_back(w, 0);
            }
        }
    }
    return DfsTree::from_parents(std::move(parent));
}

std::vector<VertexId> path_vertices(const DfsTree& t, VertexId u, VertexId v) {
    if (u > t.root() || v > t.root() || !t.is_ancestor(u, v)) {
        throw InvalidQuery("path_vertices: first vertex is not an ancestor of the second");
    }
    std::vector<VertexId> path;
    path.reserve(t.depth(v) - t.depth(u) + 1);
    for (VertexId x = v; x != u; x = t.parent(x)) {
        path.push_back(x);
    }
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

LevelAncestor::LevelAncestor(const DfsTree& t) { build_into(t, *this).finish(); }

BuildTask LevelAncestor::build_into(const DfsTree& t, LevelAncestor& out) {
    constexpr std::size_t kChunk = 64;
    const std::size_t count = t.vertex_count() + 1;
    std::uint32_t max_depth = 0;
    out.depth_.assign(count, 0);
    out.jump_.clear();
    for (std::size_t v = 0; v < count; ++v) {
        out.depth_[v] = t.depth(static_cast<VertexId>(v));
        max_depth = std::max(max_depth, out.depth_[v]);
        if ((v + 1) % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield count % kChunk;

    const auto levels = static_cast<std::size_t>(std::bit_width(max_depth));
    out.jump_.resize(std::max<std::size_t>(levels, 1));
    auto& base = out.jump_[0];
    base.resize(count);
    for (std::size_t v = 0; v < count; ++v) {
        VertexId p = t.parent(static_cast<VertexId>(v));
        base[v] = p == kNoVertex ? static_cast<VertexId>(v) : p;
        if ((v + 1) % kChunk == 0) {
            co_yield kChunk;
        }
    }
    co_yield count % kChunk;
    for (std::size_t j = 1; j < out.jump_.size(); ++j) {
        const auto& prev = out.jump_[j - 1];
        auto& cur = out.jump_[j];
        cur.resize(count);
        for (std::size_t v = 0; v < count; ++v) {
            cur[v] = prev[prev[v]];
            if ((v + 1) % kChunk == 0) {
                co_yield kChunk;
            }
        }
        co_yield count % kChunk;
    }
}

VertexId LevelAncestor::ancestor(VertexId v, std::uint32_t hops) const {
    if (v >= depth_.size()) {
        throw std::out_of_range("level_ancestor: vertex out of range");
    }
    if (hops > depth_[v]) {
        throw std::out_of_range("level_ancestor: " + std::to_string(hops) + " hops exceed depth " +
                                std::to_string(depth_[v]));
    }
    for (std::size_t j = 0; hops != 0; ++j, hops >>= 1) {
        if (hops & 1U) {
            v = jump_[j][v];
        }
    }
    return v;
}

}  // namespace incdfs
