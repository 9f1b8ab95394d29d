#include "incdfs/range_engine.hpp"

#include <algorithm>
#include <bit>

namespace incdfs {

namespace {

constexpr std::uint64_t kChunk = 64;

void check_point_query(const DfsTree& t, VertexId w, VertexId x) {
    const auto n = static_cast<VertexId>(t.vertex_count());
    if (w >= n || x >= n || x == w || !t.is_ancestor(x, w)) {
        throw InvalidQuery("range_query: x must be a proper ancestor of w");
    }
}

}  // namespace

RangeIndex::RangeIndex(const Graph& g, const DfsTree& t) { build_into(g, t, *this).finish(); }

// Two stable counting passes (by y, then by x) give the (x, y) order.
BuildTask RangeIndex::build_into(const Graph& g, const DfsTree& t, RangeIndex& out) {
    const std::size_t n = t.vertex_count();
    const std::size_t m = g.edge_count();
    const std::size_t coords = n + 1;
    std::uint64_t pending = 0;

    std::vector<Point> raw;
    raw.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        auto [a, b] = g.edges()[i];
        raw.push_back(Point{t.first(a), t.first(b)});
        raw.push_back(Point{t.first(b), t.first(a)});
        if (++pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }

    std::vector<Point> by_y(raw.size());
    for (int pass = 0; pass < 2; ++pass) {
        auto coord = [pass](const Point& p) { return pass == 0 ? p.y : p.x; };
        const auto& src = pass == 0 ? raw : by_y;
        auto& dst = pass == 0 ? by_y : out.points_;
        dst.resize(src.size());
        std::vector<std::uint32_t> begin(coords + 1, 0);
        for (const Point& p : src) {
            ++begin[coord(p) + 1];
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        for (std::size_t c = 0; c < coords; ++c) {
            begin[c + 1] += begin[c];
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        if (pass == 1) {
            out.x_begin_ = begin;
        }
        for (const Point& p : src) {
            dst[begin[coord(p)]++] = p;
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
    }
    std::vector<std::uint32_t> ys(out.points_.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        ys[i] = out.points_[i].y;
        if (++pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }
    co_yield pending + 1;
    for (auto sub = WaveletTree::build_into(std::move(ys), out.wavelet_); !sub.done();) {
        co_yield sub.step();
    }
}

std::optional<RangeIndex::Point> RangeIndex::min_point(std::uint32_t x_lo, std::uint32_t x_hi,
                                                       std::uint32_t y_lo, std::uint32_t y_hi,
                                                       std::uint64_t* visits) const {
    if (x_lo > x_hi || y_lo > y_hi || points_.empty()) {
        return std::nullopt;
    }
    const std::size_t last = x_begin_.size() - 2;
    if (y_lo > last) {
        return std::nullopt;
    }
    if (y_hi > last) {
        y_hi = static_cast<std::uint32_t>(last);
    }
    // Transposed: block of points with x in [y_lo, y_hi], values in [x_lo, x_hi].
    auto hit = wavelet_.range_min_value(x_begin_[y_lo], x_begin_[y_hi + 1], x_lo, x_hi, visits);
    if (!hit) {
        return std::nullopt;
    }
    const Point& p = points_[hit->index];
    return Point{p.y, p.x};
}

QueryAnswer range_query(const RangeIndex& idx, const DfsTree& t, VertexId w, VertexId x,
                        std::uint64_t* visits) {
    check_point_query(t, w, x);
    auto p = idx.min_point(t.first(x), t.first(w) - 1, t.first(w), t.last(w), visits);
    if (!p) {
        return std::nullopt;
    }
    return Edge{t.at(p->x), t.at(p->y)};
}

std::pair<VertexId, VertexId> reduce_query(const DfsTree& t, VertexId w, VertexId x, VertexId y) {
    const auto n = static_cast<VertexId>(t.vertex_count());
    if (w >= n || x >= n || y >= n || !t.is_ancestor(x, y)) {
        throw InvalidQuery("reduce_query: x must be an ancestor of y");
    }
    const VertexId p = t.parent(w);
    if (p == t.root() || !t.is_ancestor(x, p) || !t.is_ancestor(p, y) || t.is_ancestor(w, y)) {
        throw InvalidQuery("reduce_query: T(w) does not hang from path(x, y)");
    }
    return {w, x};
}

BuildTask RangeEngine::build(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out) {
    auto engine = std::make_unique<RangeEngine>(g, t);
    for (auto sub = RangeIndex::build_into(g, t, engine->index_); !sub.done();) {
        co_yield sub.step();
    }
    out = std::move(engine);
}

std::uint64_t RangeEngine::build_bound(std::uint64_t n, std::uint64_t m) {
    const std::uint64_t points = 2 * m;
    const std::uint64_t depth = std::max<std::uint64_t>(1, std::bit_width(n));
    const std::uint64_t sort = 2 * (2 * points + n + 1);
    const std::uint64_t wavelet = points + depth * (2 * points + 1);
    return m + sort + points + 1 + wavelet + 8;
}

QueryAnswer RangeEngine::answer(VertexId w, VertexId x, EngineStats& stats) const {
    std::uint64_t visits = 0;
    auto result = range_query(index_, tree(), w, x, &visits);
    stats.range_visits += visits;
    stats.work += visits + 1;
    return result;
}

}  // namespace incdfs
