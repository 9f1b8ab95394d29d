#include "incdfs/hybrid_engine.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace incdfs {

namespace {

constexpr std::uint64_t kChunk = 64;

}  // namespace

// ---------------------------------------------------------------------------
// ShortPathTable

ShortPathTable::ShortPathTable(const Graph& g, const DfsTree& t, const LevelAncestor& la,
                               std::uint32_t hops) {
    build_into(g, t, la, hops, *this).finish();
}

BuildTask ShortPathTable::build_into(const Graph& g, const DfsTree& t, const LevelAncestor& la,
                                     std::uint32_t hops, ShortPathTable& out) {
    const std::size_t n = t.vertex_count();
    std::uint64_t pending = 0;
    out.hops_ = hops;
    out.row_begin_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        const std::uint32_t len = std::min(hops, t.depth(v) - 1);
        out.row_begin_[v + 1] = out.row_begin_[v] + len;
        if (++pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }
    out.entries_.assign(out.row_begin_[n], Edge{});

    // Entry (v, i) sits at row_begin_[v] + i - 1.
    for (auto [a, b] : g.edges()) {
        if (t.depth(a) > t.depth(b)) {
            std::swap(a, b);
        }
        const std::uint32_t span = t.depth(b) - t.depth(a);
        const std::uint32_t h = std::min(hops, span);
        VertexId v = la.ancestor(b, span - h);
        for (std::uint32_t i = h; i >= 1; --i) {
            Edge& slot = out.entries_[out.row_begin_[v] + i - 1];
            if (slot.hi == kNoVertex || t.first(b) < t.first(slot.lo)) {
                slot = Edge{a, b};
            }
            v = t.parent(v);
        }
        pending += h + 1;
        if (pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        Edge* row = out.entries_.data() + out.row_begin_[v];
        const std::uint32_t len = out.row_length(v);
        for (std::uint32_t i = 1; i < len; ++i) {
            if (row[i].hi == kNoVertex) {
                row[i] = row[i - 1];
            }
        }
        pending += len + 1;
        if (pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }
    co_yield pending;
}

QueryAnswer ShortPathTable::lookup(VertexId v, std::uint32_t i) const {
    if (v + 1 >= row_begin_.size() || i == 0 || i > row_length(v)) {
        throw InvalidQuery("short-path table: no entry " + std::to_string(i) + " hops above " +
                           std::to_string(v));
    }
    const Edge& e = entries_[row_begin_[v] + i - 1];
    if (e.hi == kNoVertex) {
        return std::nullopt;
    }
    return e;
}

ShortPathTable build_short_path_table(const Graph& g, const DfsTree& t) {
    LevelAncestor la(t);
    return ShortPathTable(g, t, la, 2 * ceil_log2(t.vertex_count()));
}

// ---------------------------------------------------------------------------
// MarkedIndex

MarkedIndex::MarkedIndex(const Graph& g, const DfsTree& t) { build_into(g, t, *this).finish(); }

BuildTask MarkedIndex::build_into(const Graph& g, const DfsTree& t, MarkedIndex& out) {
    const std::size_t n = t.vertex_count();
    const VertexId root = t.root();
    std::uint64_t pending = 0;

    out.threshold_ = ceil_log2(n);
    const std::uint32_t k = std::max<std::uint32_t>(2, out.threshold_);
    out.partition_ = Partition{};
    out.partition_.comp_of.assign(n, 0);
    if (n >= k) {
        for (auto sub = compute_partition_into(t, k, out.partition_); !sub.done();) {
            co_yield sub.step();
        }
    } else {
        out.partition_.k = k;
        out.partition_.component_count = n == 0 ? 0 : 1;
    }

    out.marked_.clear();
    out.groups_.clear();
    out.group_index_.assign(n, kNoGroup);
    for (VertexId v : out.partition_.marked) {
        if (t.subtree_size(v) >= out.threshold_) {
            out.group_index_[v] = static_cast<std::uint32_t>(out.marked_.size());
            out.marked_.push_back(v);
        }
        if (++pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }
    out.groups_.resize(out.marked_.size());

    out.anchor_.assign(n, kNoVertex);
    out.position_.assign(n, 0);
    for (std::uint32_t i = 1; i <= n; ++i) {
        const VertexId v = t.at(i);
        const VertexId p = t.parent(v);
        if (p != root) {
            out.anchor_[v] = out.group_index_[p] != kNoGroup ? p : out.anchor_[p];
        }
        if (out.anchor_[v] != kNoVertex) {
            auto& members = out.groups_[out.group_index_[out.anchor_[v]]].members;
            out.position_[v] = static_cast<std::uint32_t>(members.size());
            members.push_back(v);
        }
        if (++pending >= kChunk) {
            co_yield pending;
            pending = 0;
        }
    }

    // Neighbour lists in ascending depth: bucket vertices by depth, then
    // append each vertex to the lists of its neighbours in that order.
    std::vector<std::uint32_t> depth_begin(n + 2, 0);
    for (VertexId v = 0; v < n; ++v) {
        ++depth_begin[t.depth(v) + 1];
    }
    co_yield pending + n;
    for (std::size_t d = 0; d + 1 < depth_begin.size(); ++d) {
        depth_begin[d + 1] += depth_begin[d];
    }
    co_yield n + 1;
    std::vector<VertexId> by_level(n);
    for (VertexId v = 0; v < n; ++v) {
        by_level[depth_begin[t.depth(v)]++] = v;
    }
    co_yield n + 1;
    pending = 0;

    out.by_depth_begin_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
        out.by_depth_begin_[v + 1] = out.by_depth_begin_[v] + g.neighbors(v).size();
    }
    std::vector<std::size_t> fill(out.by_depth_begin_.begin(), out.by_depth_begin_.end() - 1);
    out.by_depth_.assign(out.by_depth_begin_[n], kNoVertex);
    pending += n;
    for (VertexId a : by_level) {
        for (VertexId b : g.neighbors(a)) {
            out.by_depth_[fill[b]++] = a;
            if (++pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
    }
    co_yield pending;
    pending = 0;

    for (auto& group : out.groups_) {
        std::vector<std::vector<CascadeFamily::Key>> arrays;
        arrays.reserve(group.members.size());
        for (VertexId y : group.members) {
            auto& keys = arrays.emplace_back();
            for (VertexId a : out.neighbors_by_depth(y)) {
                keys.push_back(t.depth(a));
            }
            pending += keys.size() + 1;
            if (pending >= kChunk) {
                co_yield pending;
                pending = 0;
            }
        }
        for (auto sub = CascadeFamily::build_into(std::move(arrays), group.cascade); !sub.done();) {
            co_yield sub.step();
        }
    }
}

std::span<const VertexId> MarkedIndex::group(VertexId s) const {
    return groups_.at(group_index_.at(s)).members;
}

const CascadeFamily& MarkedIndex::cascade(VertexId s) const {
    return groups_.at(group_index_.at(s)).cascade;
}

// ---------------------------------------------------------------------------
// HybridEngine

BuildTask HybridEngine::build(const Graph& g, const DfsTree& t, std::unique_ptr<QueryEngine>& out) {
    auto engine = std::make_unique<HybridEngine>(g, t);
    engine->log_n_ = ceil_log2(t.vertex_count());
    for (auto sub = LevelAncestor::build_into(t, engine->levels_); !sub.done();) {
        co_yield sub.step();
    }
    for (auto sub = ShortPathTable::build_into(g, t, engine->levels_, 2 * engine->log_n_,
                                               engine->table_);
         !sub.done();) {
        co_yield sub.step();
    }
    for (auto sub = MarkedIndex::build_into(g, t, engine->marked_); !sub.done();) {
        co_yield sub.step();
    }
    for (auto sub = RangeIndex::build_into(g, t, engine->range_); !sub.done();) {
        co_yield sub.step();
    }
    out = std::move(engine);
}

std::uint64_t HybridEngine::build_bound(std::uint64_t n, std::uint64_t m) {
    const std::uint64_t log_n = ceil_log2(n);
    const std::uint64_t levels = std::max<std::uint64_t>(1, std::bit_width(n));
    const std::uint64_t ancestors = (n + 1) * (levels + 1);
    const std::uint64_t table = n + m * (2 * log_n + 1) + n * (2 * log_n + 1);
    const std::uint64_t partition = 3 * n;
    // 2m neighbour entries overall; a cascade family costs at most 5 units
    // per key plus 3 per array.
    const std::uint64_t marked = 3 * n + 3 * n + 2 + n + 2 * m + (2 * m + n) + (5 * 2 * m + 3 * n);
    return ancestors + table + partition + marked + RangeEngine::build_bound(n, m);
}

QueryAnswer HybridEngine::range_answer(VertexId w, VertexId x, EngineStats& stats) const {
    std::uint64_t visits = 0;
    auto result = range_query(range_, tree(), w, x, &visits);
    stats.range_visits += visits;
    stats.work += visits + 1;
    return result;
}

QueryAnswer HybridEngine::answer(VertexId w, VertexId x, EngineStats& stats) const {
    const std::uint32_t hops = tree().depth(w) - tree().depth(x);
    if (hops <= table_.row_length(w)) {
        ++stats.table_lookups;
        ++stats.work;
        return table_.lookup(w, hops);
    }
    return range_answer(w, x, stats);
}

void HybridEngine::answer_path(std::span<const VertexId> path, std::span<const VertexId> hanging,
                               std::span<QueryAnswer> out, EngineStats& stats) const {
    const DfsTree& t = tree();
    const VertexId u = path.front();
    const std::uint32_t top = t.depth(u);

    // Cascade positions per marked vertex, computed at most once per path.
    std::unordered_map<VertexId, std::size_t> searched;
    std::vector<std::uint32_t> positions;

    for (std::size_t i = 0; i < hanging.size(); ++i) {
        const VertexId x = hanging[i];
        const std::uint32_t hops = t.depth(x) - top;
        if (hops <= table_.row_length(x)) {
            ++stats.table_lookups;
            ++stats.work;
            out[i] = table_.lookup(x, hops);
            continue;
        }

        const VertexId px = t.parent(x);
        const VertexId s = marked_.is_marked(px) ? px : marked_.anchor(px);
        if (s == kNoVertex || t.depth(s) < top || t.subtree_size(x) >= log_n_) {
            ++stats.queries_3b;
            stats.range_roots.push_back(x);
            out[i] = range_answer(x, u, stats);
            continue;
        }

        auto [it, fresh] = searched.try_emplace(s, positions.size());
        const CascadeFamily& family = marked_.cascade(s);
        if (fresh) {
            const std::size_t count = family.array_count();
            positions.resize(positions.size() + count);
            std::uint64_t comparisons = 0;
            family.successor_positions(top, std::span(positions).subspan(it->second, count),
                                       &comparisons);
            ++stats.cascade_queries;
            stats.cascade_work += comparisons + count;
            stats.work += comparisons + count;
        }

        auto members = marked_.group(s);
        const std::uint32_t begin = marked_.position_in_group(x);
        const std::uint32_t size = t.subtree_size(x);
        QueryAnswer best;
        std::uint32_t best_depth = t.depth(x);
        for (std::uint32_t j = begin; j < begin + size; ++j) {
            const VertexId y = members[j];
            auto nbrs = marked_.neighbors_by_depth(y);
            const std::uint32_t p = positions[it->second + j];
            if (p < nbrs.size() && t.depth(nbrs[p]) < best_depth) {
                best_depth = t.depth(nbrs[p]);
                best = Edge{nbrs[p], y};
            }
        }
        stats.work += size;
        out[i] = best;
    }
}

}  // namespace incdfs
