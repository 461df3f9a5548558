#include <gtest/gtest.h>

#include "splitdom/families.hpp"
#include "splitdom/lab.hpp"
#include "splitdom/properties.hpp"
#include "test_support.hpp"

using namespace splitdom;
using splitdom::testing::corpus;

namespace {
Graph path(int n) { return generate({FamilyKind::Path, n}); }
Graph cycle(int n) { return generate({FamilyKind::Cycle, n}); }
Graph complete(int n) { return generate({FamilyKind::Complete, n}); }
Graph bipartite(int m, int n) { return generate({FamilyKind::CompleteBipartite, n, m}); }
Graph wheel(int rim) { return generate({FamilyKind::Wheel, rim}); }

constexpr PropertyId kDomSplit{Base::Dominating, Flavor::Split};
constexpr PropertyId kIndSplit{Base::Independent, Flavor::Split};
constexpr PropertyId kIrrSplit{Base::Irredundant, Flavor::Split};

std::vector<VertexSet> all_subsets(const Graph& g) {
    std::vector<VertexSet> out;
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s) out.emplace_back(s);
    return out;
}
} // namespace

TEST(Dominating, Examples) {
    EXPECT_TRUE(is_dominating(path(4), {1, 2}));
    EXPECT_FALSE(is_dominating(path(4), {0}));
    EXPECT_TRUE(is_dominating(cycle(6), {0, 3}));
    EXPECT_FALSE(is_dominating(path(1 + 1), {}));
}

TEST(Independent, Examples) {
    EXPECT_TRUE(is_independent(path(4), {0, 2}));
    EXPECT_FALSE(is_independent(complete(3), {0, 1}));
    EXPECT_TRUE(is_independent(complete(5), {}));
}

TEST(PrivateNeighbors, Examples) {
    const Graph fig = figure1_graph();
    EXPECT_EQ(private_neighbors(fig, {0, 1, 2}, 0), VertexSet{3});
    EXPECT_EQ(private_neighbors(complete(3), {0, 1}, 0), VertexSet{});
    EXPECT_EQ(private_neighbors(path(4), {0}, 0), (VertexSet{0, 1}));
}

TEST(PrivateNeighbors, RequiresMembership) {
    try {
        private_neighbors(path(4), {0}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::VertexNotInSet);
    }
}

TEST(Irredundant, Examples) {
    EXPECT_TRUE(is_irredundant(figure1_graph(), {0, 1, 2}));
    EXPECT_FALSE(is_irredundant(complete(3), {0, 1}));
    EXPECT_TRUE(is_irredundant(path(3), {}));
}

TEST(Irredundant, MatchesPrivateNeighborDefinition) {
    for (const Graph& g : corpus(2, 6))
        for (VertexSet s : all_subsets(g)) {
            bool expected = true;
            for (Vertex v : s) expected = expected && !private_neighbors(g, s, v).empty();
            ASSERT_EQ(is_irredundant(g, s), expected) << to_graph6(g) << " " << s.to_string();
        }
}

TEST(Satisfies, Examples) {
    EXPECT_TRUE(satisfies(path(4), {1, 2}, kDomSplit));
    EXPECT_TRUE(satisfies(bipartite(2, 3), {0, 1}, kIndSplit));
    EXPECT_TRUE(satisfies(cycle(5), {0}, {Base::Independent, Flavor::Nonsplit}));
    EXPECT_TRUE(satisfies(wheel(4), {0}, {Base::Dominating, Flavor::Nonsplit}));
}

TEST(Satisfies, EmptyComplementIsNeitherSplitNorNonsplit) {
    const Graph g = path(3);
    const VertexSet all = g.vertices();
    EXPECT_TRUE(satisfies(g, all, {Base::Dominating, Flavor::Plain}));
    EXPECT_FALSE(satisfies(g, all, kDomSplit));
    EXPECT_FALSE(satisfies(g, all, {Base::Dominating, Flavor::Nonsplit}));
}

TEST(Satisfies, EmptySet) {
    for (const Graph& g : corpus(2, 5)) {
        EXPECT_TRUE(satisfies(g, {}, {Base::Independent, Flavor::Plain}));
        EXPECT_TRUE(satisfies(g, {}, {Base::Irredundant, Flavor::Plain}));
        EXPECT_FALSE(satisfies(g, {}, {Base::Dominating, Flavor::Plain}));
    }
}

TEST(Extremal, Examples) {
    EXPECT_TRUE(is_extremal(path(5), {1, 3}, kIndSplit, ExtremalMode::OneMaximal));
    EXPECT_TRUE(is_extremal(path(4), {1, 2}, kDomSplit, ExtremalMode::OneMinimal));
    EXPECT_TRUE(is_extremal(bipartite(2, 3), {2, 3, 4}, kIndSplit, ExtremalMode::OneMaximal));
}

TEST(Extremal, Figure1SetHasQualifyingExtensions) {
    // Adding v2 (4) or v3 (5) keeps {u1,u2,u3} split irredundant, so the set is not 1-maximal.
    const Graph fig = figure1_graph();
    const VertexSet s{0, 1, 2};
    ASSERT_TRUE(satisfies(fig, s, kIrrSplit));
    EXPECT_TRUE(satisfies(fig, s.with(4), kIrrSplit));
    EXPECT_TRUE(satisfies(fig, s.with(5), kIrrSplit));
    for (Vertex v : {3, 6, 7, 8}) EXPECT_FALSE(satisfies(fig, s.with(v), kIrrSplit)) << v;
    EXPECT_FALSE(is_extremal(fig, s, kIrrSplit, ExtremalMode::OneMaximal));
    EXPECT_FALSE(literal::maximal_split_irredundant(fig, s));
}

TEST(Extremal, RequiresProperty) {
    try {
        is_extremal(path(4), {0}, kDomSplit, ExtremalMode::OneMinimal);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PropertyNotSatisfied);
    }
}

TEST(Extremal, OneStepImpliedByFull) {
    // SupersetMaximal => OneMaximal and SubsetMinimal => OneMinimal, for every property
    for (const Graph& g : corpus(2, 5))
        for (PropertyId p : kAllProperties)
            for (VertexSet s : all_subsets(g)) {
                if (!satisfies(g, s, p)) continue;
                if (is_extremal(g, s, p, ExtremalMode::SupersetMaximal)) {
                    ASSERT_TRUE(is_extremal(g, s, p, ExtremalMode::OneMaximal));
                }
                if (is_extremal(g, s, p, ExtremalMode::SubsetMinimal)) {
                    ASSERT_TRUE(is_extremal(g, s, p, ExtremalMode::OneMinimal));
                }
            }
}

TEST(Heredity, IndependentAndIrredundantAreHereditary) {
    for (const Graph& g : corpus(2, 7))
        for (VertexSet s : all_subsets(g)) {
            if (is_independent(g, s)) {
                for (Vertex v : s) ASSERT_TRUE(is_independent(g, s.without(v)));
            }
            if (is_irredundant(g, s)) {
                for (Vertex v : s) ASSERT_TRUE(is_irredundant(g, s.without(v))) << to_graph6(g) << s.to_string();
            }
        }
}

TEST(Heredity, DominatingIsSuperhereditary) {
    for (const Graph& g : corpus(2, 6))
        for (VertexSet s : all_subsets(g))
            if (is_dominating(g, s)) {
                for (Vertex v : s.complement(g.order())) ASSERT_TRUE(is_dominating(g, s.with(v)));
            }
}

TEST(Heredity, PlainExtremalityModesAgree) {
    constexpr PropertyId ind{Base::Independent, Flavor::Plain};
    constexpr PropertyId dom{Base::Dominating, Flavor::Plain};
    for (const Graph& g : corpus(2, 6))
        for (VertexSet s : all_subsets(g)) {
            if (satisfies(g, s, ind)) {
                ASSERT_EQ(is_extremal(g, s, ind, ExtremalMode::OneMaximal),
                          is_extremal(g, s, ind, ExtremalMode::SupersetMaximal));
            }
            if (satisfies(g, s, dom)) {
                ASSERT_EQ(is_extremal(g, s, dom, ExtremalMode::OneMinimal),
                          is_extremal(g, s, dom, ExtremalMode::SubsetMinimal));
            }
        }
}

TEST(Invariants, IndependentImpliesIrredundant) {
    for (const Graph& g : corpus(2, 7))
        for (VertexSet s : all_subsets(g))
            if (is_independent(g, s)) {

                ASSERT_TRUE(is_irredundant(g, s));

            }
}

TEST(Invariants, SplitSetsAreCuts) {
    for (const Graph& g : corpus(2, 6)) {
        const int kappa = stats(g).kappa;
        for (VertexSet s : all_subsets(g))
            for (Base b : {Base::Dominating, Base::Independent, Base::Irredundant})
                if (satisfies(g, s, {b, Flavor::Split})) {

                    ASSERT_GE(s.size(), kappa);

                }
    }
}

TEST(Invariants, SplitAndNonsplitOverlapOnlyOnK1) {
    for (const Graph& g : corpus(2, 6))
        for (VertexSet s : all_subsets(g))
            for (Base b : {Base::Dominating, Base::Independent, Base::Irredundant}) {
                const bool both = satisfies(g, s, {b, Flavor::Split}) && satisfies(g, s, {b, Flavor::Nonsplit});
                if (both) {
                    ASSERT_EQ(induced_status(g, s), ComplementStatus::K1);
                }
                if (base_holds(g, s, b) && induced_status(g, s) == ComplementStatus::K1) {
                    ASSERT_TRUE(both);
                }
            }
}

TEST(Literal, KOneRemainderCountsAsSplit) {
    // P_3 with S = {0,2}: remainder is K1, so S is split independent; adding 1 breaks independence.
    const Graph g = path(3);
    EXPECT_TRUE(satisfies(g, {0, 2}, kIndSplit));
    EXPECT_TRUE(literal::maximal_split_independent(g, {0, 2}));
    EXPECT_TRUE(is_extremal(g, {0, 2}, kIndSplit, ExtremalMode::OneMaximal));
}

TEST(Literal, MinimalSplitDominatingReadings) {
    const Graph g = path(4);
    EXPECT_TRUE(literal::minimal_split_dominating(g, {1, 2}, literal::Scope::WholeSet));
    EXPECT_TRUE(literal::minimal_split_dominating(g, {1, 2}, literal::Scope::PerVertex));
    EXPECT_FALSE(literal::minimal_split_dominating(g, {0}, literal::Scope::PerVertex));
}
