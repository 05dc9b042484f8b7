#include <gtest/gtest.h>

#include <set>

#include "centra/centra.hpp"
#include "oracle.hpp"

using namespace centra;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

int sign(std::span<const Point> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

std::size_t count_order(const FiniteGroup& G, std::uint64_t k) {
  std::size_t c = 0;
  for (ElementIndex x = 0; x < G.order(); ++x) c += G.element_order(x) == k;
  return c;
}

}  // namespace

TEST(Constructors, FamilyOrders) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(group_from_spec("S" + std::to_string(n)).order(), factorial(n));
    EXPECT_EQ(group_from_spec("A" + std::to_string(n)).order(), std::max<std::size_t>(1, factorial(n) / 2));
  }
  for (std::size_t n : {1, 2, 7, 12, 30, 64}) EXPECT_EQ(group_from_spec("C" + std::to_string(n)).order(), n);
  for (std::size_t n : {6, 8, 10, 24, 36}) EXPECT_EQ(group_from_spec("D" + std::to_string(n)).order(), n);
  for (std::size_t n : {8, 12, 16, 32}) EXPECT_EQ(group_from_spec("Q" + std::to_string(n)).order(), n);
  for (std::size_t n : {4, 8, 9, 25, 27}) EXPECT_EQ(group_from_spec("E" + std::to_string(n)).order(), n);
  EXPECT_EQ(group_from_spec("S3xS3").order(), 36U);
  EXPECT_EQ(group_from_spec("A4xC2xC3").order(), 72U);
}

TEST(Constructors, CyclicGroupGeneratorCount) {
  for (std::size_t n : {1, 12, 30, 49, 60}) {
    std::size_t phi = 0;
    for (std::size_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    EXPECT_EQ(count_order(group_from_spec("C" + std::to_string(n)), n), phi) << n;
  }
}

TEST(Constructors, DihedralStructure) {
  for (std::size_t m : {3, 4, 5, 6, 9, 12}) {
    const auto G = group_from_spec("D" + std::to_string(2 * m));
    EXPECT_EQ(center(G).order(), m % 2 ? 1U : 2U);
    // m reflections, plus the half turn when m is even
    EXPECT_EQ(count_order(G, 2), m + (m % 2 ? 0 : 1));
  }
}

TEST(Constructors, QuaternionHasOneInvolution) {
  for (std::size_t n : {8, 12, 16, 20, 32}) {
    const auto G = group_from_spec("Q" + std::to_string(n));
    EXPECT_EQ(count_order(G, 2), 1U);
    EXPECT_FALSE(G.is_abelian());
  }
}

TEST(Constructors, ElementaryAbelianExponent) {
  for (std::size_t p : {2, 3, 5}) {
    const auto G = group_from_spec("E" + std::to_string(p * p * (p == 5 ? 1 : p)));
    EXPECT_TRUE(G.is_abelian());
    EXPECT_EQ(count_order(G, p), G.order() - 1);
  }
}

TEST(Constructors, AlternatingGroupsAreEven) {
  for (const char* spec : {"A4", "A5"}) {
    const auto G = group_from_spec(spec);
    for (ElementIndex x = 0; x < G.order(); ++x) EXPECT_EQ(sign(G.images(x)), 1);
  }
}

TEST(Constructors, DirectProductMatchesOracleCounts) {
  const auto G = group_from_spec("S3xC2");
  const auto O = oracle::from(G);
  EXPECT_EQ(oracle::profile(O).center.size(), 2U);
  EXPECT_EQ(G.order(), 12U);
  EXPECT_EQ(group_from_spec("Q8xC3").is_abelian(), false);
  EXPECT_TRUE(group_from_spec("C4xC6").is_abelian());
}

TEST(Constructors, RejectsBadSpecs) {
  for (const char* bad : {"", "X5", "D7", "D4", "Q6", "E6", "C0", "S", "A5x", "xS3", "S3y", "C12a"})
    EXPECT_THROW(group_from_spec(bad), UnknownGroupSpec) << bad;
}

TEST(Constructors, SpecOrderHonoursCap) {
  EXPECT_EQ(spec_order("S5xC3"), 360U);
  EXPECT_THROW(group_from_spec("S7", GroupLimits{1000, 10}), OrderCapExceeded);
  EXPECT_THROW(group_from_spec("S4xS4", GroupLimits{500, 10}), OrderCapExceeded);
}

TEST(Constructors, BuiltinCorpusShape) {
  const auto entries = builtin_corpus_entries(120);
  std::set<std::string> names;
  for (const auto& e : entries) {
    EXPECT_LE(e.order, 120U);
    EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
  }
  for (const char* must : {"C1", "C2", "S3", "D10", "Q8", "S4", "A5", "S3xS3", "E8", "A4xC2", "Q16", "S5"})
    EXPECT_TRUE(names.count(must)) << must;
  EXPECT_FALSE(names.count("A6"));
  const auto small = builtin_corpus(12);
  const auto small_entries = builtin_corpus_entries(12);
  ASSERT_EQ(small.size(), small_entries.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    EXPECT_EQ(small[i].name(), small_entries[i].name);
    EXPECT_EQ(small[i].order(), small_entries[i].order);
  }
}

TEST(Constructors, CorpusEdges) {
  const auto one = builtin_corpus(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].order(), 1U);
  std::set<std::string> names;
  for (const auto& e : builtin_corpus_entries(60)) names.insert(e.name);
  EXPECT_TRUE(names.count("A5"));
  EXPECT_FALSE(names.count("S5"));
  const auto S4 = group_from_spec("S4");
  EXPECT_EQ(direct_product(group_from_spec("C1"), S4).order(), 24U);
}
