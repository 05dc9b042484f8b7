#include <gtest/gtest.h>

#include <random>
#include <set>

#include "centra/centra.hpp"

using namespace centra;

namespace {

// Subgroup of S_d generated by one to three random permutations.
FiniteGroup random_group(std::mt19937& rng) {
  const std::size_t degree = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::shuffle(images.begin(), images.end(), rng);
    gens.emplace_back(images);
  }
  return enumerate_group("random", gens);
}

const std::vector<std::string> small_pool = {"C2", "C3", "C4", "S3", "D8", "Q8", "D10", "A4", "S4", "E4", "D12", "Q12"};

}  // namespace

TEST(Properties, CentralizerCountIsMultiplicative) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, small_pool.size() - 1);
  std::set<std::string> tried;
  while (tried.size() < 10) {
    const auto& a = small_pool[pick(rng)];
    const auto& b = small_pool[pick(rng)];
    const std::string spec = a + "x" + b;
    if (spec_order(spec) > 600 || !tried.insert(spec).second) continue;
    SCOPED_TRACE(spec);
    const auto n = centralizer_profile(group_from_spec(spec)).n();
    EXPECT_EQ(n, centralizer_profile(group_from_spec(a)).n() * centralizer_profile(group_from_spec(b)).n());
  }
}

TEST(Properties, InverseHasSameCentralizer) {
  for (const auto& entry : builtin_corpus_entries(360)) {
    const auto G = entry.build({});
    const auto p = centralizer_profile(G);
    for (ElementIndex a = 0; a < G.order(); ++a)
      ASSERT_EQ(p.assignment[a], p.assignment[G.inverse(a)]) << entry.name << " element " << a;
  }
}

TEST(Properties, MeasureBoundsOnCorpus) {
  for (const auto& entry : builtin_corpus_entries(120)) {
    SCOPED_TRACE(entry.name);
    const auto G = entry.build({});
    const auto a = analyze(G);
    ASSERT_TRUE(a.report.a_measure && a.report.n_measure);
    if (a.n() >= 2) EXPECT_LE(*a.report.a_measure, a.n() - 1);
    EXPECT_LE(*a.report.n_measure, *a.report.a_measure);
  }
}

TEST(Properties, RandomGroupsSatisfyStructuralIdentities) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto G = random_group(rng);
    const auto a = analyze(G);
    SCOPED_TRACE(::testing::Message() << "trial " << trial << " order " << G.order());
    const auto n = a.n();
    const auto N = G.order();
    // Lagrange
    for (const auto& C : a.profile.distinct) EXPECT_EQ(N % C.order(), 0U);
    EXPECT_EQ(N % a.center.order(), 0U);
    EXPECT_LE(n, N / a.center.order());
    EXPECT_LE(2 * n, N + a.involution_count());
    EXPECT_NE(n, 2U);
    EXPECT_NE(n, 3U);
    EXPECT_EQ(n == 1, G.is_abelian());
    if (n >= 2) EXPECT_LE(a.a_clique.size, n - 1);
    if (a.n_clique) EXPECT_LE(a.n_clique->size, a.a_clique.size);
    if (a.nilpotency.nilpotent) {
      EXPECT_TRUE(a.solubility.soluble);
      if (a.n_clique) EXPECT_EQ(a.n_clique->size, 1U);
    }
    EXPECT_TRUE(a.kernel_nilpotency.nilpotent);
    EXPECT_LE(a.kernel_nilpotency.nilpotency_class, 3U);
  }
}

TEST(Properties, DirectProductWithAbelianKeepsMeasures) {
  for (const char* spec : {"S3", "D10", "A4", "Q8"}) {
    const auto G = group_from_spec(spec);
    const auto H = group_from_spec(std::string(spec) + "xC3");
    const auto a = analyze(G);
    const auto b = analyze(H);
    EXPECT_EQ(b.report.a_measure, a.report.a_measure) << spec;
    EXPECT_EQ(b.report.n_measure, a.report.n_measure) << spec;
    EXPECT_EQ(b.n(), a.n()) << spec;
    EXPECT_EQ(b.involution_count(), a.involution_count()) << spec;
  }
}
