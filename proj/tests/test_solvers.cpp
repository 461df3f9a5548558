#include <gtest/gtest.h>

#include "splitdom/families.hpp"
#include "splitdom/oracle.hpp"
#include "splitdom/solvers.hpp"
#include "test_support.hpp"

using namespace splitdom;
using splitdom::testing::corpus;
using P = ParameterId;

namespace {
Graph path(int n) { return generate({FamilyKind::Path, n}); }
Graph cycle(int n) { return generate({FamilyKind::Cycle, n}); }
Graph complete(int n) { return generate({FamilyKind::Complete, n}); }
Graph bipartite(int m, int n) { return generate({FamilyKind::CompleteBipartite, n, m}); }
Graph wheel(int rim) { return generate({FamilyKind::Wheel, rim}); }

std::optional<int> value(const Graph& g, ParameterId pid) { return compute_parameter(g, pid).value_opt(); }

/// Power-set filter, independent of the ordered search.
std::vector<VertexSet> filter_all(const Graph& g, PropertyId p, ExtremalMode m) {
    std::vector<VertexSet> out;
    for (int k = 0; k <= g.order(); ++k)
        for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
            if (std::popcount(s) == k && qualifies(g, VertexSet(s), p, m)) out.emplace_back(s);
    return out;
}
} // namespace

TEST(EnumerateSets, SplitIndependentSetsOfP4) {
    const auto sets = enumerate_sets(path(4), {Base::Independent, Flavor::Split}, ExtremalMode::Any);
    EXPECT_EQ(sets, (std::vector<VertexSet>{{1}, {2}, {0, 2}, {1, 3}}));
}

TEST(EnumerateSets, CompleteGraphHasNoSplitIndependentSet) {
    EXPECT_TRUE(enumerate_sets(complete(4), {Base::Independent, Flavor::Split}, ExtremalMode::Any).empty());
}

TEST(EnumerateSets, C4MinimalSplitDominating) {
    const auto sets = enumerate_sets(cycle(4), {Base::Dominating, Flavor::Split}, ExtremalMode::OneMinimal);
    EXPECT_NE(std::find(sets.begin(), sets.end(), VertexSet{0, 2}), sets.end());
}

TEST(EnumerateSets, MatchesPowerSetFilter) {
    for (const Graph& g : corpus(2, 5))
        for (PropertyId p : kAllProperties)
            for (ExtremalMode m : {ExtremalMode::Any, ExtremalMode::OneMinimal, ExtremalMode::OneMaximal})
                ASSERT_EQ(enumerate_sets(g, p, m), filter_all(g, p, m)) << to_graph6(g) << " " << to_string(p);
}

TEST(ComputeParameter, Examples) {
    const ParamResult c5 = compute_parameter(cycle(5), P::gamma_s);
    ASSERT_TRUE(c5.defined());
    EXPECT_EQ(c5.value(), 2);
    EXPECT_EQ(c5.witness(), (VertexSet{0, 2}));  // numerically least split dominating pair
    EXPECT_EQ(value(path(6), P::beta_s), 3);
    EXPECT_EQ(value(bipartite(2, 3), P::i_s), 2);
    EXPECT_EQ(value(wheel(5), P::beta_s), std::nullopt);
    EXPECT_EQ(value(path(6), P::gamma_ns), 4);
    EXPECT_EQ(value(bipartite(2, 3), P::i_ns), 1);
    EXPECT_EQ(value(cycle(6), P::ir_ns), 2);
}

TEST(ComputeParameter, RejectsDisconnected) {
    try {
        compute_parameter(from_edge_list(4, {{0, 1}, {2, 3}}), P::gamma);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DisconnectedInput);
    }
}

TEST(ComputeTable, Examples) {
    const ParameterTable k33 = compute_table(bipartite(3, 3));
    for (P pid : {P::ir_s, P::gamma_s, P::i_s, P::beta_s, P::Gamma_s, P::IR_s}) EXPECT_EQ(k33[pid].value_opt(), 3);

    const ParameterTable p2 = compute_table(path(2));
    EXPECT_EQ(p2[P::gamma].value_opt(), 1);
    EXPECT_EQ(p2[P::gamma_s].value_opt(), 1);

    const ParameterTable c5 = compute_table(cycle(5));
    for (P pid : {P::ir_s, P::gamma_s, P::i_s, P::beta_s, P::Gamma_s, P::IR_s}) EXPECT_EQ(c5[pid].value_opt(), 2);
    EXPECT_EQ(c5[P::kappa].value_opt(), 2);
}

TEST(ComputeTable, WitnessesReverify) {
    for (const Graph& g : corpus(2, 6)) {
        const ParameterTable t = compute_table(g);
        for (P pid : kAllParameters) ASSERT_TRUE(splitdom::testing::witness_valid(g, pid, t[pid])) << to_graph6(g);
    }
}

TEST(ComputeTable, WitnessIsNumericallyLeastOptimalSet) {
    // the oracle scans every set in numeric order, so its first optimum is the least one
    for (const Graph& g : corpus(2, 6))
        for (P pid : kAllParameters)
            ASSERT_EQ(compute_parameter(g, pid), oracle::oracle_parameter(g, pid)) << to_graph6(g) << " " << name(pid);
}

TEST(ComputeTable, ClassicalChainHolds) {
    for (const Graph& g : corpus(2, 7)) {
        const ParameterTable t = compute_table(g);
        const std::array chain{P::ir, P::gamma, P::i, P::beta, P::Gamma, P::IR};
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            ASSERT_TRUE(t[chain[k]].defined());
            ASSERT_LE(t[chain[k]].value(), t[chain[k + 1]].value()) << to_graph6(g) << " " << name(chain[k]);
        }
    }
}

TEST(ComputeTable, DefinednessAndAggregation) {
    for (const Graph& g : corpus(2, 7)) {
        const ParameterTable t = compute_table(g);
        for (P pid : {P::gamma_s, P::Gamma_s, P::gamma_ns, P::Gamma_ns}) ASSERT_TRUE(t[pid].defined()) << to_graph6(g);
        // min- and max-type parameters over the same sets are defined together
        for (auto [lo, hi] : {std::pair{P::i_s, P::beta_s}, {P::ir_s, P::IR_s}, {P::i_ns, P::beta_ns},
                              {P::ir_ns, P::IR_ns}}) {
            ASSERT_EQ(t[lo].defined(), t[hi].defined());
            if (t[lo].defined()) {

                ASSERT_LE(t[lo].value(), t[hi].value());

            }
        }
        const bool split_ind = !enumerate_sets(g, {Base::Independent, Flavor::Split}, ExtremalMode::Any).empty();
        ASSERT_EQ(t[P::beta_s].defined(), split_ind);
        ASSERT_LE(t[P::gamma_s].value(), t[P::Gamma_s].value());
        ASSERT_LE(t[P::gamma_ns].value(), t[P::Gamma_ns].value());
    }
}
