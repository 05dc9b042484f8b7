#include <gtest/gtest.h>

#include <random>

#include "centra/centra.hpp"
#include "oracle.hpp"

using namespace centra;

TEST(Clique, MatchesSubsetEnumerationOnRandomGraphs) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + trial % 20;
    const double density = 0.1 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng);
    std::bernoulli_distribution edge(density);
    std::vector<std::uint32_t> masks(k, 0);
    std::vector<Bitset> rows(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (edge(rng)) {
          masks[i] |= 1U << j;
          masks[j] |= 1U << i;
          rows[i].set(j);
          rows[j].set(i);
        }
    const auto got = max_clique_positions(rows);
    ASSERT_TRUE(got.exact);
    ASSERT_EQ(got.size, oracle::max_clique(masks)) << "trial " << trial;
    for (std::size_t i = 0; i < got.witness.size(); ++i)
      for (std::size_t j = i + 1; j < got.witness.size(); ++j) ASSERT_TRUE(rows[got.witness[i]].test(got.witness[j]));
  }
}

TEST(Clique, BudgetExhaustionIsReported) {
  std::mt19937 rng(5);
  std::bernoulli_distribution edge(0.7);
  const std::size_t k = 120;
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (edge(rng)) {
        rows[i].set(j);
        rows[j].set(i);
      }
  const auto got = max_clique_positions(rows, CliqueOptions{10});
  EXPECT_FALSE(got.exact);
  EXPECT_GE(got.size, 1U);
}

TEST(Measures, KnownValues) {
  const std::tuple<const char*, std::size_t, std::size_t> known[] = {
      {"C6", 1, 1}, {"S3", 4, 4}, {"D10", 6, 6}, {"Q8", 3, 1}, {"S4", 10, 7}, {"A5", 21, 21}, {"S3xS3", 16, 16}};
  for (const auto& [spec, a, n] : known) {
    const auto G = group_from_spec(spec);
    const auto p = centralizer_profile(G);
    const auto am = a_measure(G, p);
    const auto nm = n_measure(G, p);
    EXPECT_EQ(am.size, a) << spec;
    EXPECT_EQ(nm.size, n) << spec;
    EXPECT_TRUE(am.exact && nm.exact);
    EXPECT_EQ(am.witness.size(), am.size);
    EXPECT_TRUE(witness_valid(G, Relation::non_commuting, am.witness));
    EXPECT_TRUE(witness_valid(G, Relation::non_nilpotent_pair, nm.witness));
  }
}

// Clique sizes on the small corpus, against subset enumeration over the
// oracle's own graphs.
TEST(Measures, MatchOracleOnSmallCorpus) {
  std::size_t compared = 0;
  for (const auto& entry : builtin_corpus_entries(48)) {
    SCOPED_TRACE(entry.name);
    const auto G = entry.build({});
    const auto O = oracle::from(G);
    const auto op = oracle::profile(O);
    const auto p = centralizer_profile(G);
    if (const auto expect = oracle::a_measure(O, op)) {
      EXPECT_EQ(a_measure(G, p).size, *expect);
      ++compared;
    }
    if (G.order() <= 24)
      if (const auto expect = oracle::n_measure(O, op)) EXPECT_EQ(n_measure(G, p).size, *expect);
  }
  EXPECT_GT(compared, 100U);
}

TEST(Measures, GraphVerticesAreRepresentatives) {
  const auto G = group_from_spec("S4");
  const auto p = centralizer_profile(G);
  const auto g = build_graph(G, p, Relation::non_commuting);
  EXPECT_EQ(g.size(), p.n() - 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      EXPECT_EQ(g.adjacent(i, j), !G.commutes(g.vertices[i], g.vertices[j]));
  const auto h = build_graph(G, p, Relation::non_nilpotent_pair);
  EXPECT_EQ(h.size(), 16U);  // 9 + 4 + 3 nontrivial cyclic subgroups of S4
}

TEST(Measures, WitnessCheckRejectsBadSets) {
  const auto G = group_from_spec("S3");
  EXPECT_FALSE(witness_valid(G, Relation::non_commuting, {0, 1}));
  EXPECT_FALSE(witness_valid(G, Relation::non_commuting, {1, 1}));
  EXPECT_TRUE(witness_valid(G, Relation::non_commuting, {3}));
  const auto S5 = group_from_spec("S5");
  const auto p = centralizer_profile(S5);
  const auto am = a_measure(S5, p);
  auto w = am.witness;
  EXPECT_TRUE(witness_valid(S5, Relation::non_commuting, w, &p));
  w.push_back(0);
  EXPECT_FALSE(witness_valid(S5, Relation::non_commuting, w, &p));
}

TEST(Measures, GraphExamples) {
  const auto C6 = group_from_spec("C6");
  EXPECT_EQ(build_graph(C6, centralizer_profile(C6), Relation::non_commuting).size(), 0U);
  const auto Q8 = group_from_spec("Q8");
  const auto g = build_graph(Q8, centralizer_profile(Q8), Relation::non_commuting);
  ASSERT_EQ(g.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g.adjacent(i, j), i != j);
  EXPECT_EQ(max_clique(g).size, 3U);
  EXPECT_EQ(max_clique(RelationGraph{}).size, 0U);
  EXPECT_EQ(max_clique_positions({}).size, 0U);
}
