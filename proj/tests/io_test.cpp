#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "incdfs/generators.hpp"
#include "incdfs/io.hpp"

namespace incdfs {
namespace {

template <class F>
std::size_t error_line(F&& f) {
    try {
        f();
    } catch (const io::ParseError& e) {
        return e.line();
    }
    return 0;
}

TEST(ReadGraph, ParsesCommentsAndBlankLines) {
    std::istringstream in("# triangle\n3 3\n\n0 1\n1 2\n# back edge\n0 2\n");
    auto g = io::read_graph(in);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(ReadGraph, ReportsLineNumbers) {
    EXPECT_EQ(error_line([] {
                  std::istringstream in("3 2\n0 1\n1 1\n");
                  io::read_graph(in);
              }),
              3u);
    EXPECT_EQ(error_line([] {
                  std::istringstream in("3 2\n0 1\n");
                  io::read_graph(in);
              }),
              2u);
    EXPECT_EQ(error_line([] {
                  std::istringstream in("3 1\n0 1\n1 2\n");
                  io::read_graph(in);
              }),
              3u);
    EXPECT_EQ(error_line([] {
                  std::istringstream in("3 1\n0 x\n");
                  io::read_graph(in);
              }),
              2u);
    EXPECT_EQ(error_line([] {
                  std::istringstream in("3 1\n0 3\n");
                  io::read_graph(in);
              }),
              2u);
    EXPECT_EQ(error_line([] {
                  std::istringstream in("3\n");
                  io::read_graph(in);
              }),
              1u);
}

TEST(ReadUpdates, Formats) {
    std::istringstream in("E 0 2\nV\n\nE 3 1\n");
    auto ups = io::read_updates(in);
    EXPECT_EQ(ups, (std::vector<Update>{Update::edge(0, 2), Update::vertex(), Update::edge(3, 1)}));
    EXPECT_EQ(error_line([] {
                  std::istringstream bad("V\nE 1\n");
                  io::read_updates(bad);
              }),
              2u);
    EXPECT_EQ(error_line([] {
                  std::istringstream bad("X 1 2\n");
                  io::read_updates(bad);
              }),
              1u);
}

TEST(Tree, RoundTrip) {
    testing::Rng rng(111);
    auto g = testing::random_graph(rng, 40, 0.1);
    auto t = static_dfs(g);
    std::ostringstream out;
    io::write_tree(out, t);
    std::istringstream in(out.str());
    auto parents = io::read_tree(in);
    EXPECT_TRUE(std::ranges::equal(parents, t.parents()));
}

TEST(Tree, ExampleOutput) {
    Graph g(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
    std::ostringstream out;
    io::write_tree(out, static_dfs(g));
    EXPECT_EQ(out.str(), "0 -1\n1 0\n2 1\n");
}

TEST(Tree, RejectsDuplicateVertex) {
    std::istringstream in("0 -1\n0 1\n");
    EXPECT_THROW(io::read_tree(in), io::ParseError);
}

TEST(GraphAndUpdates, RoundTrip) {
    auto w = gen::random(50, 0.1, 3);
    std::ostringstream gout;
    io::write_graph(gout, w.graph);
    std::istringstream gin(gout.str());
    auto g = io::read_graph(gin);
    EXPECT_TRUE(std::ranges::equal(g.edges(), w.graph.edges()));
    std::ostringstream uout;
    io::write_updates(uout, w.updates);
    std::istringstream uin(uout.str());
    EXPECT_EQ(io::read_updates(uin), w.updates);
}

// FNV-1a 64 computed byte by byte over the documented encoding.
std::uint64_t fnv_reference(const std::vector<std::int64_t>& values) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t v : values) {
        unsigned char bytes[8];
        for (int i = 0; i < 8; ++i) {
            bytes[i] = static_cast<unsigned char>(static_cast<std::uint64_t>(v) >> (8 * i));
        }
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

TEST(Digest, MatchesReferenceFold) {
    std::vector<VertexId> parents{3, 0, 1, kNoVertex};
    EXPECT_EQ(io::tree_digest(parents), fnv_reference({-1, 0, 1}));
    EXPECT_EQ(io::tree_digest(std::vector<VertexId>{kNoVertex}), 0xcbf29ce484222325ULL);
    EXPECT_EQ(io::format_digest(0xabcULL), "0000000000000abc");
}

TEST(Generators, ChainAndBroomShapes) {
    auto c = gen::chain(5);
    EXPECT_EQ(c.graph.vertex_count(), 5u);
    EXPECT_EQ(c.graph.edge_count(), 4u);
    EXPECT_TRUE(c.graph.has_edge(3, 4));
    EXPECT_EQ(c.updates, (std::vector<Update>{Update::edge(0, 4)}));

    auto b = gen::broom(8);
    for (VertexId v = 0; v < 3; ++v) {
        EXPECT_TRUE(b.graph.has_edge(v, v + 1));
    }
    for (VertexId leaf = 4; leaf < 8; ++leaf) {
        EXPECT_TRUE(b.graph.has_edge(3, leaf));
        EXPECT_TRUE(b.graph.has_edge(leaf, 0));
    }
    EXPECT_EQ(b.graph.edge_count(), 3u + 8u);
    EXPECT_EQ(b.updates, (std::vector<Update>{Update::edge(0, 3)}));

    auto anchored = gen::broom(8, true);
    EXPECT_TRUE(anchored.graph.neighbors(0).empty());
    EXPECT_EQ(anchored.updates, (std::vector<Update>{Update::edge(0, 4)}));
    EXPECT_THROW(gen::chain(1), std::invalid_argument);
    EXPECT_THROW(gen::random(10, 1.5, 1), std::invalid_argument);
}

TEST(Generators, RandomIsDeterministic) {
    auto a = gen::random(64, 0.1, 7);
    auto b = gen::random(64, 0.1, 7);
    EXPECT_TRUE(std::ranges::equal(a.graph.edges(), b.graph.edges()));
    EXPECT_EQ(a.updates, b.updates);
    EXPECT_EQ(a.updates.size(), 8u);
    auto c = gen::random(64, 0.1, 8);
    EXPECT_FALSE(std::ranges::equal(a.graph.edges(), c.graph.edges()));
}

}  // namespace
}  // namespace incdfs
