#include "incdfs/query_engine.hpp"

#include <stdexcept>
#include <string>

#include "incdfs/dense_engine.hpp"
#include "incdfs/hybrid_engine.hpp"
#include "incdfs/oracle.hpp"
#include "incdfs/range_engine.hpp"

namespace incdfs {

namespace {

BuildTask build_brute(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out) {
    co_yield 1;
    out = std::make_unique<BruteEngine>(g, t);
}

}  // namespace

std::string_view to_string(EngineKind kind) noexcept {
    switch (kind) {
        case EngineKind::brute:
            return "brute";
        case EngineKind::dense:
            return "dense";
        case EngineKind::range:
            return "range";
        case EngineKind::hybrid:
            return "hybrid";
    }
    return "unknown";
}

std::optional<EngineKind> parse_engine_kind(std::string_view name) noexcept {
    for (auto kind : {EngineKind::brute, EngineKind::dense, EngineKind::range, EngineKind::hybrid}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

EngineStats& EngineStats::operator+=(const EngineStats& other) {
    work += other.work;
    queries += other.queries;
    table_lookups += other.table_lookups;
    cascade_queries += other.cascade_queries;
    cascade_work += other.cascade_work;
    queries_3b += other.queries_3b;
    range_visits += other.range_visits;
    range_roots.insert(range_roots.end(), other.range_roots.begin(), other.range_roots.end());
    return *this;
}

QueryAnswer QueryEngine::query(VertexId w, VertexId x, EngineStats* stats) const {
    const auto n = static_cast<VertexId>(tree_->vertex_count());
    if (w >= n || x >= n || w == x || !tree_->is_ancestor(x, w)) {
        throw InvalidQuery("query: " + std::to_string(x) + " is not a proper ancestor of " +
                           std::to_string(w));
    }
    EngineStats local;
    EngineStats& s = stats ? *stats : local;
    ++s.queries;
    return answer(w, x, s);
}

void QueryEngine::batched_path_query(std::span<const VertexId> path,
                                     std::span<const VertexId> hanging, std::span<QueryAnswer> out,
                                     EngineStats& stats) const {
    const DfsTree& t = *tree_;
    const auto n = static_cast<VertexId>(t.vertex_count());
    if (path.empty()) {
        throw InvalidQuery("batched_path_query: empty path");
    }
    if (out.size() != hanging.size()) {
        throw std::invalid_argument("batched_path_query: output size differs from input size");
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= n || (i > 0 && t.parent(path[i]) != path[i - 1])) {
            throw InvalidQuery("batched_path_query: not a downward tree path at position " +
                               std::to_string(i));
        }
    }
    const VertexId u = path.front();
    const VertexId v = path.back();
    for (VertexId h : hanging) {
        const VertexId p = h < n ? t.parent(h) : kNoVertex;
        if (p == kNoVertex || p == t.root() || !t.is_ancestor(u, p) || !t.is_ancestor(p, v) ||
            t.is_ancestor(h, v)) {
            throw InvalidQuery("batched_path_query: " + std::to_string(h) +
                               " does not hang from the path");
        }
    }
    stats.queries += hanging.size();
    answer_path(path, hanging, out, stats);
}

std::vector<QueryAnswer> QueryEngine::batched_path_query(std::span<const VertexId> path,
                                                         std::span<const VertexId> hanging,
                                                         EngineStats& stats) const {
    std::vector<QueryAnswer> out(hanging.size());
    batched_path_query(path, hanging, out, stats);
    return out;
}

void QueryEngine::answer_path(std::span<const VertexId> path, std::span<const VertexId> hanging,
                              std::span<QueryAnswer> out, EngineStats& stats) const {
    for (std::size_t i = 0; i < hanging.size(); ++i) {
        out[i] = answer(hanging[i], path.front(), stats);
    }
}

BuildTask make_engine_task(EngineKind kind, const Graph& g, const DfsTree& t,
                           std::unique_ptr<QueryEngine>& out) {
    if (g.vertex_count() != t.vertex_count()) {
        throw InvalidGraph("engine: tree does not span the graph");
    }
    switch (kind) {
        case EngineKind::dense:
            return DenseEngine::build(g, t, out);
        case EngineKind::range:
            return RangeEngine::build(g, t, out);
        case EngineKind::hybrid:
            return HybridEngine::build(g, t, out);
        case EngineKind::brute:
            break;
    }
    return build_brute(g, t, out);
}

std::unique_ptr<QueryEngine> make_engine(EngineKind kind, const Graph& g, const DfsTree& t) {
    std::unique_ptr<QueryEngine> out;
    make_engine_task(kind, g, t, out).finish();
    return out;
}

EngineKind preferred_engine(std::uint64_t n, std::uint64_t m) noexcept {
    return n * n <= m * ceil_log2(n) ? EngineKind::dense : EngineKind::hybrid;
}

std::uint64_t engine_build_bound(EngineKind kind, std::uint64_t n, std::uint64_t m) {
    switch (kind) {
        case EngineKind::dense:
            return DenseEngine::build_bound(n, m);
        case EngineKind::range:
            return RangeEngine::build_bound(n, m);
        case EngineKind::hybrid:
            return HybridEngine::build_bound(n, m);
        case EngineKind::brute:
            break;
    }
    return 1;
}

}  // namespace incdfs
