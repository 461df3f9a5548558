#include <random>

#include <gtest/gtest.h>

#include "splitdom/graph_io.hpp"
#include "test_support.hpp"

using namespace splitdom;

// Expected decodings were produced with the networkx graph6 reader/writer.

TEST(Graph6, DecodesStar) {
    const Graph g = parse_graph6("D?{");
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_EQ(to_graph6(g), "D?{");
}

TEST(Graph6, SmallGraphs) {
    const Graph k2 = parse_graph6("A_");
    EXPECT_EQ(k2, from_edge_list(2, {{0, 1}}));
    EXPECT_EQ(to_graph6(k2), "A_");
    EXPECT_EQ(to_graph6(from_edge_list(3, {{0, 1}, {1, 2}})), "Bg");
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), k2);
}

TEST(Graph6, Errors) {
    auto code = [](std::string_view s) {
        try {
            parse_graph6(s);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::EmptyCorpus;
    };
    EXPECT_EQ(code("#bad"), ErrorCode::MalformedGraph6);
    EXPECT_EQ(code(""), ErrorCode::MalformedGraph6);
    EXPECT_EQ(code("D?"), ErrorCode::MalformedGraph6);     // truncated
    EXPECT_EQ(code("A_?"), ErrorCode::MalformedGraph6);    // trailing byte
    EXPECT_EQ(code("A`"), ErrorCode::MalformedGraph6);     // padding bit set
    EXPECT_EQ(code("?"), ErrorCode::MalformedGraph6);      // no vertices
    EXPECT_EQ(code("`" + std::string(88, '?')), ErrorCode::NTooLarge);
    EXPECT_EQ(code("~??"), ErrorCode::NTooLarge);
}

TEST(Graph6, CorpusLinesRoundTripBitExact) {
    for (const auto& line : splitdom::testing::corpus_lines()) EXPECT_EQ(to_graph6(parse_graph6(line)), line);
}

TEST(Graph6, RandomGraphsRoundTrip) {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % kMaxVertices;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(EdgeList, ParsesWithComments) {
    const Graph g = parse_edge_list("# a path\n4\n0 1  # first\n1 2\n\n2 3\n");
    EXPECT_EQ(g, from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, Errors) {
    auto code = [](std::string_view s) {
        try {
            parse_edge_list(s);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::EmptyCorpus;
    };
    EXPECT_EQ(code(""), ErrorCode::MalformedEdgeList);
    EXPECT_EQ(code("x\n"), ErrorCode::MalformedEdgeList);
    EXPECT_EQ(code("3\n0\n"), ErrorCode::MalformedEdgeList);
    EXPECT_EQ(code("3\n0 1 2\n"), ErrorCode::MalformedEdgeList);
    EXPECT_EQ(code("3\n0 3\n"), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code("3\n1 1\n"), ErrorCode::LoopRejected);
    EXPECT_EQ(code("40\n"), ErrorCode::NTooLarge);
}
