#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "incdfs/generators.hpp"
#include "incdfs/hybrid_engine.hpp"
#include "incdfs/oracle.hpp"

namespace incdfs {
namespace {

using testing::Rng;
using Edges = std::vector<std::pair<VertexId, VertexId>>;

Graph chain(std::size_t n) {
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

// Longest run of consecutive unmarked vertices on any upward tree path,
// counted in hops.
std::uint32_t longest_unmarked_hops(const DfsTree& t, const MarkedIndex& idx) {
    std::uint32_t best = 0;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        std::uint32_t run = 0;
        for (VertexId x = v; x != t.root() && !idx.is_marked(x); x = t.parent(x)) {
            ++run;
        }
        if (run > 0) {
            best = std::max(best, run - 1);
        }
    }
    return best;
}

void check_marked_index(const DfsTree& t, const MarkedIndex& idx) {
    const std::size_t n = t.vertex_count();
    const std::uint32_t big_k = ceil_log2(n);
    const std::uint32_t k = std::max<std::uint32_t>(2, big_k);
    ASSERT_EQ(idx.size_threshold(), big_k);
    ASSERT_LE(idx.marked().size(), n / (k + 1));
    ASSERT_TRUE(std::is_sorted(idx.marked().begin(), idx.marked().end()));
    for (VertexId s : idx.marked()) {
        ASSERT_GE(t.subtree_size(s), big_k);
        ASSERT_TRUE(idx.is_marked(s));
    }
    std::vector<int> seen(n, 0);
    for (VertexId s : idx.marked()) {
        auto group = idx.group(s);
        ASSERT_EQ(idx.cascade(s).array_count(), group.size());
        for (std::size_t i = 0; i < group.size(); ++i) {
            ++seen[group[i]];
            ASSERT_EQ(idx.anchor(group[i]), s);
            ASSERT_EQ(idx.position_in_group(group[i]), i);
            if (i > 0) {
                ASSERT_LT(t.first(group[i - 1]), t.first(group[i]));
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        VertexId nearest = kNoVertex;
        for (VertexId a = t.parent(v); a != t.root(); a = t.parent(a)) {
            if (idx.is_marked(a)) {
                nearest = a;
                break;
            }
        }
        ASSERT_EQ(idx.anchor(v), nearest) << "vertex " << v;
        ASSERT_EQ(seen[v], nearest == kNoVertex ? 0 : 1);
        auto nbrs = idx.neighbors_by_depth(v);
        for (std::size_t i = 1; i < nbrs.size(); ++i) {
            ASSERT_LE(t.depth(nbrs[i - 1]), t.depth(nbrs[i]));
        }
    }
    ASSERT_LE(longest_unmarked_hops(t, idx), 2 * big_k);
}

TEST(ShortPathTable, ChainAndTriangle) {
    auto g = chain(8);
    auto t = static_dfs(g);
    auto tab = build_short_path_table(g, t);
    EXPECT_EQ(tab.hops(), 6u);
    EXPECT_EQ(tab.row_length(5), 5u);
    EXPECT_EQ(tab.lookup(5, 3), (Edge{4, 5}));
    EXPECT_THROW(tab.lookup(5, 0), InvalidQuery);
    EXPECT_THROW(tab.lookup(5, 6), InvalidQuery);

    Graph tri(3, Edges{{0, 1}, {1, 2}, {0, 2}});
    auto tt = static_dfs(tri);
    auto ttab = build_short_path_table(tri, tt);
    EXPECT_EQ(ttab.lookup(2, 2), (Edge{0, 2}));
    EXPECT_EQ(ttab.lookup(2, 1), (Edge{1, 2}));
}

TEST(ShortPathTable, EntriesMatchBrute) {
    Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::uniform(rng, 1, 64);
        const double p = std::vector<double>{0.05, 0.2, 0.5}[trial % 3];
        auto g = testing::random_graph(rng, n, p);
        auto t = static_dfs(g);
        auto tab = build_short_path_table(g, t);
        ASSERT_LE(tab.entry_count(), 2 * n * ceil_log2(n));
        for (VertexId v = 0; v < n; ++v) {
            VertexId u = t.parent(v);
            for (std::uint32_t i = 1; i <= tab.row_length(v); ++i, u = t.parent(u)) {
                ASSERT_EQ(tab.lookup(v, i), oracle::brute_query(g, t, v, u, t.parent(v)));
            }
        }
    }
}

TEST(MarkedIndex, SmallSubtreesMarkNothing) {
    Graph g(4);
    auto t = static_dfs(g);
    auto idx = build_marked_index(g, t);
    EXPECT_TRUE(idx.marked().empty());
    for (VertexId v = 0; v < 4; ++v) {
        EXPECT_EQ(idx.anchor(v), kNoVertex);
    }
}

TEST(MarkedIndex, Broom) {
    const std::size_t n = 256;
    auto w = gen::broom(n);
    auto t = static_dfs(w.graph);
    auto idx = build_marked_index(w.graph, t);
    check_marked_index(t, idx);
    const VertexId bottom = n / 2 - 1;
    ASSERT_TRUE(idx.is_marked(bottom));
    for (VertexId leaf = bottom + 1; leaf < n; ++leaf) {
        EXPECT_EQ(idx.anchor(leaf), bottom);
    }
    // marked handle vertices are spaced at most K apart above the brush
    std::vector<VertexId> on_handle;
    for (VertexId s : idx.marked()) {
        ASSERT_LE(s, bottom);
        on_handle.push_back(s);
    }
    const auto big_k = ceil_log2(n);
    for (std::size_t i = 1; i < on_handle.size(); ++i) {
        EXPECT_LE(on_handle[i] - on_handle[i - 1], big_k + 1);
    }
}

TEST(MarkedIndex, RandomTreesKeepInvariants) {
    Rng rng(72);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = testing::uniform(rng, 1, 512);
        auto t = testing::random_tree(rng, n, std::vector<double>{0.02, 0.3, 0.9}[trial % 3]);
        auto g = testing::graph_over_tree(rng, t, 0.02);
        ASSERT_TRUE(oracle::validate_dfs_tree(g, t));
        auto idx = build_marked_index(g, t);
        check_marked_index(t, idx);
        if (::testing::Test::HasFatalFailure()) {
            FAIL() << "trial " << trial;
        }
    }
}

// Every (path, hanging set) pair whose path ends at v and starts at an
// ancestor u of v, with all off-path children of path vertices hanging.
void check_batched(const Graph& g, const DfsTree& t, const HybridEngine& engine, VertexId u,
                   VertexId v, EngineStats& stats) {
    auto path = path_vertices(t, u, v);
    std::vector<VertexId> hanging;
    for (std::size_t i = 0; i < path.size(); ++i) {
        for (VertexId c : t.children(path[i])) {
            if (i + 1 == path.size() || c != path[i + 1]) {
                hanging.push_back(c);
            }
        }
    }
    auto got = engine.batched_path_query(path, hanging, stats);
    ASSERT_EQ(got.size(), hanging.size());
    for (std::size_t i = 0; i < hanging.size(); ++i) {
        ASSERT_EQ(got[i], oracle::brute_query(g, t, hanging[i], u, v))
            << "x=" << hanging[i] << " u=" << u << " v=" << v;
    }
}

TEST(HybridEngine, BatchedMatchesBrute) {
    Rng rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::uniform(rng, 1, 64);
        const double p = std::vector<double>{0.05, 0.2, 0.5}[trial % 3];
        auto g = testing::random_graph(rng, n, p);
        auto t = static_dfs(g);
        auto engine = make_engine(EngineKind::hybrid, g, t);
        const auto& hybrid = static_cast<const HybridEngine&>(*engine);
        EngineStats stats;
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u = v; u != t.root(); u = t.parent(u)) {
                check_batched(g, t, hybrid, u, v, stats);
            }
        }
        for (auto [w, x] : testing::all_query_pairs(t)) {
            ASSERT_EQ(engine->query(w, x), oracle::brute_query(g, t, w, x, t.parent(w)));
        }
    }
}

TEST(HybridEngine, BatchedMatchesBruteOnDeepTrees) {
    Rng rng(74);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = testing::uniform(rng, 64, 400);
        auto t = testing::random_tree(rng, n, 0.05);
        auto g = testing::graph_over_tree(rng, t, 0.01);
        auto engine = make_engine(EngineKind::hybrid, g, t);
        const auto& hybrid = static_cast<const HybridEngine&>(*engine);
        EngineStats stats;
        for (int q = 0; q < 40; ++q) {
            auto v = static_cast<VertexId>(testing::uniform(rng, 0, n - 1));
            auto up = testing::uniform(rng, 0, t.depth(v) - 1);
            VertexId u = v;
            while (up-- > 0) {
                u = t.parent(u);
            }
            check_batched(g, t, hybrid, u, v, stats);
        }
    }
}

TEST(HybridEngine, ChainPathUsesTableOnly) {
    auto w = gen::chain(1024);
    auto t = static_dfs(w.graph);
    auto engine = make_engine(EngineKind::hybrid, w.graph, t);
    EngineStats stats;
    for (VertexId v = 0; v + 1 < 1024; ++v) {
        std::vector<VertexId> path{v};
        std::vector<VertexId> hanging{v + 1};
        auto got = engine->batched_path_query(path, hanging, stats);
        ASSERT_EQ(got[0], (Edge{v, v + 1}));
    }
    EXPECT_EQ(stats.queries_3b, 0u);
    EXPECT_EQ(stats.cascade_queries, 0u);
    EXPECT_EQ(stats.table_lookups, 1023u);
}

TEST(HybridEngine, BroomPathUsesCascades) {
    const std::size_t n = 1024;
    auto w = gen::broom(n);
    auto t = static_dfs(w.graph);
    auto engine = make_engine(EngineKind::hybrid, w.graph, t);
    const auto& hybrid = static_cast<const HybridEngine&>(*engine);
    const VertexId bottom = n / 2 - 1;
    auto path = path_vertices(t, 0, bottom);
    std::vector<VertexId> hanging;
    for (VertexId leaf = bottom + 1; leaf < n; ++leaf) {
        hanging.push_back(leaf);
    }
    EngineStats stats;
    auto got = engine->batched_path_query(path, hanging, stats);
    for (std::size_t i = 0; i < hanging.size(); ++i) {
        ASSERT_EQ(got[i], (Edge{0, hanging[i]}));
    }
    EXPECT_EQ(stats.queries_3b, 0u);
    EXPECT_GE(stats.cascade_queries, 1u);
    EXPECT_LE(stats.cascade_queries, hybrid.marked_index().marked().size());
    EXPECT_LE(stats.cascade_work, 8 * n);
}

}  // namespace
}  // namespace incdfs
