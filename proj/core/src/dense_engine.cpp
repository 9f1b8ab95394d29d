#include "incdfs/dense_engine.hpp"

#include <string>

namespace incdfs {

namespace {

constexpr std::uint64_t kChunk = 64;

}  // namespace

DenseTable::DenseTable(const Graph& g, const DfsTree& t) { build_into(g, t, *this).finish(); }

BuildTask DenseTable::build_into(const Graph& g, const DfsTree& t, DenseTable& out) {
    const std::size_t n = t.vertex_count();
    const std::size_t width = n + 2;
    const auto none = static_cast<std::uint32_t>(n + 1);
    std::uint64_t pending = 0;
    out.tree_ = &t;

    // next[u * width + p]: smallest position >= p of a neighbour below u.
    std::vector<std::uint32_t> next(n * width, none);
    for (VertexId u = 0; u < n; ++u) {
        std::uint32_t* row = next.data() + std::size_t{u} * width;
        for (VertexId v : g.neighbors(u)) {
            if (t.depth(v) > t.depth(u)) {
                row[t.first(v)] = t.first(v);
            }
        }
        for (std::size_t p = n + 1; p-- > 0;) {
            if (row[p] == none) {
                row[p] = row[p + 1 < width ? p + 1 : p];
            }
        }
        pending += g.neighbors(u).size() + 2 * width;
        if (pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }

    out.row_begin_.assign(n + 1, 0);
    for (VertexId w = 0; w < n; ++w) {
        out.row_begin_[w + 1] = out.row_begin_[w] + (t.depth(w) - 1);
    }
    pending += n;
    out.answers_.assign(out.row_begin_[n], Edge{});
    for (VertexId w = 0; w < n; ++w) {
        Edge* row = out.answers_.data() + out.row_begin_[w];
        Edge below{};
        for (VertexId u = t.parent(w); u != t.root(); u = t.parent(u)) {
            const std::uint32_t pos = next[std::size_t{u} * width + t.first(w)];
            if (pos <= t.last(w)) {
                below = Edge{u, t.at(pos)};
            }
            row[t.depth(u) - 1] = below;
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
    }
    co_yield pending;
}

QueryAnswer DenseTable::lookup(VertexId w, VertexId u) const {
    const auto n = static_cast<VertexId>(row_begin_.empty() ? 0 : row_begin_.size() - 1);
    if (w >= n || u >= n || u == w || !tree_->is_ancestor(u, w)) {
        throw InvalidQuery("dense_query: (" + std::to_string(w) + ", " + std::to_string(u) +
                           ") is not a stored pair");
    }
    const Edge& e = answers_[row_begin_[w] + tree_->depth(u) - 1];
    if (e.hi == kNoVertex) {
        return std::nullopt;
    }
    return e;
}

BuildTask DenseEngine::build(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out) {
    auto engine = std::make_unique<DenseEngine>(g, t);
    for (auto sub = DenseTable::build_into(g, t, engine->table_); !sub.done();) {
        co_yield sub.step();
    }
    out = std::move(engine);
}

std::uint64_t DenseEngine::build_bound(std::uint64_t n, std::uint64_t m) {
    return n * (2 * (n + 2)) + 2 * m + n + n * n + 1;
}

QueryAnswer DenseEngine::answer(VertexId w, VertexId x, EngineStats& stats) const {
    ++stats.table_lookups;
    ++stats.work;
    return table_.lookup(w, x);
}

}  // namespace incdfs
