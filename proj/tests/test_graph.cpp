#include <gtest/gtest.h>

#include "splitdom/families.hpp"
#include "splitdom/graph.hpp"
#include "test_support.hpp"

using namespace splitdom;
using splitdom::testing::corpus;

namespace {
Graph path(int n) { return generate({FamilyKind::Path, n}); }
Graph cycle(int n) { return generate({FamilyKind::Cycle, n}); }
Graph complete(int n) { return generate({FamilyKind::Complete, n}); }
} // namespace

TEST(FromEdgeList, BuildsPathAndTriangle) {
    const Graph p4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(p4, path(4));
    EXPECT_EQ(p4.edge_count(), 3);
    const Graph k3 = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(k3, complete(3));
    EXPECT_TRUE(k3.is_well_formed());
}

TEST(FromEdgeList, CollapsesDuplicates) {
    const Graph g = from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    EXPECT_EQ(g.edge_count(), 1);
}

TEST(FromEdgeList, Errors) {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        ADD_FAILURE() << "no error";
        return ErrorCode::EmptyCorpus;
    };
    EXPECT_EQ(code([] { from_edge_list(2, {{0, 0}}); }), ErrorCode::LoopRejected);
    EXPECT_EQ(code([] { from_edge_list(3, {{0, 3}}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code([] { from_edge_list(33, {}); }), ErrorCode::NTooLarge);
    EXPECT_EQ(code([] { from_edge_list(0, {}); }), ErrorCode::NTooLarge);
}

TEST(InducedStatus, Examples) {
    EXPECT_EQ(induced_status(path(4), {1}), ComplementStatus::Disconnected);
    EXPECT_EQ(induced_status(complete(4), {0}), ComplementStatus::ConnectedMultiple);
    EXPECT_EQ(induced_status(complete(4), {0, 1, 2}), ComplementStatus::K1);
    EXPECT_EQ(induced_status(path(2), {0, 1}), ComplementStatus::Empty);
}

TEST(InducedStatus, EmptySetClassifiesTheGraph) {
    EXPECT_EQ(induced_status(Graph(1), {}), ComplementStatus::K1);
    EXPECT_EQ(induced_status(Graph(3), {}), ComplementStatus::Disconnected);
    for (const Graph& g : corpus(2, 6)) EXPECT_EQ(induced_status(g, {}), ComplementStatus::ConnectedMultiple);
}

TEST(ClosedNeighborhood, Examples) {
    EXPECT_EQ(closed_neighborhood(path(4), {1}), (VertexSet{0, 1, 2}));
    EXPECT_EQ(closed_neighborhood(path(4), {}), VertexSet{});
    EXPECT_EQ(closed_neighborhood(complete(4), {0}), VertexSet::full(4));
}

TEST(Stats, Examples) {
    const GraphStats c5 = stats(cycle(5));
    EXPECT_EQ(c5.min_degree, 2);
    EXPECT_EQ(c5.max_degree, 2);
    EXPECT_EQ(c5.diameter, 2);
    EXPECT_EQ(c5.kappa, 2);
    EXPECT_TRUE(c5.connected);

    const GraphStats p4 = stats(path(4));
    EXPECT_EQ(p4.min_degree, 1);
    EXPECT_EQ(p4.max_degree, 2);
    EXPECT_EQ(p4.diameter, 3);
    EXPECT_EQ(p4.kappa, 1);

    const Graph k23 = generate({FamilyKind::CompleteBipartite, 3, 2});
    const GraphStats b = stats(k23);
    EXPECT_EQ(b.min_degree, 2);
    EXPECT_EQ(b.max_degree, 3);
    EXPECT_EQ(b.diameter, 2);
    EXPECT_EQ(b.kappa, splitdom::testing::brute_kappa(k23));
    EXPECT_EQ(b.kappa, 2);
}

TEST(Stats, CompleteGraphConvention) {
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(stats(complete(n)).kappa, n - 1);
}

TEST(Stats, DisconnectedGraph) {
    const Graph g = from_edge_list(4, {{0, 1}, {2, 3}});
    const GraphStats st = stats(g);
    EXPECT_FALSE(st.connected);
    EXPECT_FALSE(st.diameter.has_value());
    EXPECT_EQ(st.kappa, 0);
}

TEST(Stats, InvariantsOnCorpus) {
    for (const Graph& g : corpus(2, 6)) {
        const GraphStats st = stats(g);
        ASSERT_TRUE(g.is_well_formed());
        EXPECT_LE(st.min_degree, st.max_degree);
        EXPECT_LT(st.max_degree, g.order());
        EXPECT_LE(st.kappa, st.min_degree);
        EXPECT_EQ(st.kappa, splitdom::testing::brute_kappa(g)) << to_graph6(g);
        EXPECT_EQ(st.kappa_witness.size(), st.kappa);
        EXPECT_TRUE(is_vertex_cut(g, st.kappa_witness));
    }
}

TEST(Stats, KappaLowerBoundsEveryCut) {
    for (const Graph& g : corpus(2, 6)) {
        const int kappa = stats(g).kappa;
        for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
            if (is_vertex_cut(g, VertexSet(s))) {

                ASSERT_GE(VertexSet(s).size(), kappa) << to_graph6(g);

            }
    }
}
