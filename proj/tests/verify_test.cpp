#include <gtest/gtest.h>

#include "centra/centra.hpp"

using namespace centra;

namespace {

VerificationResult check(ClaimId id, const char* spec) {
  const auto G = group_from_spec(spec);
  return verify_claim(id, analyze(G));
}

}  // namespace

TEST(Claims, NamesRoundTrip) {
  for (auto id : all_claims) EXPECT_EQ(parse_claim(claim_name(id)), id);
  EXPECT_FALSE(parse_claim("thm-Z").has_value());
  for (auto s : {Status::pass, Status::fail, Status::vacuous, Status::budget}) EXPECT_EQ(parse_status(status_name(s)), s);
  EXPECT_EQ(status_name(Status::fail), "FAIL");
}

TEST(Claims, ThmAIsVacuousForA5) {
  const auto r = check(ClaimId::thm_a, "A5");
  EXPECT_EQ(r.status, Status::vacuous);
  EXPECT_EQ(r.detail, "n=22 soluble=false");
  EXPECT_EQ(check(ClaimId::thm_a, "S4").status, Status::pass);
}

TEST(Claims, LemmaDetailForD10) {
  const auto r = check(ClaimId::lemma_li, "D10");
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.detail.substr(0, 9), "14 ≤ 16");
}

TEST(Claims, ThmBOnSmallDihedralGroups) {
  for (const char* spec : {"S3", "D10"}) {
    EXPECT_EQ(check(ClaimId::thm_b1, spec).status, Status::pass) << spec;
    EXPECT_EQ(check(ClaimId::thm_b2, spec).status, Status::pass) << spec;
  }
  EXPECT_EQ(check(ClaimId::thm_b1, "Q8").status, Status::vacuous);
}

// The statements are checked as written. The trivial group and the prime
// cyclic groups of order 2 and 3 fall under the hypotheses.
TEST(Claims, LiteralStatementsOnTinyCyclicGroups) {
  EXPECT_EQ(check(ClaimId::thm_b1, "C1").status, Status::fail);
  EXPECT_EQ(check(ClaimId::thm_b2, "C1").status, Status::fail);
  EXPECT_EQ(check(ClaimId::thm_b2, "C2").status, Status::fail);
  EXPECT_EQ(check(ClaimId::cor_simple, "C2").status, Status::fail);
  EXPECT_EQ(check(ClaimId::cor_simple, "C3").status, Status::fail);
  EXPECT_EQ(check(ClaimId::cor_simple, "C5").status, Status::pass);
  EXPECT_EQ(check(ClaimId::thm_b1, "C3").status, Status::vacuous);
}

TEST(Claims, TbLowerBoundTightForQ8) {
  const auto r = check(ClaimId::thm_tb_lower, "Q8");
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.detail.substr(0, 12), "n=4 |G:Z|=4 ");
  EXPECT_EQ(check(ClaimId::thm_tb_lower, "C5").detail, "n=1 |G:Z|=1");
}

TEST(Claims, PropABound) {
  EXPECT_EQ(check(ClaimId::prop_a_bound, "C7").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::prop_a_bound, "S4").status, Status::pass);
  const auto G = group_from_spec("S5");
  AnalysisOptions tight;
  tight.clique.node_budget = 1;
  tight.compute_n_measure = false;
  const auto a = analyze(G, tight);
  const auto r = verify_prop_a_bound(a);
  if (!a.a_clique.exact) EXPECT_EQ(r.status, Status::budget);
}

TEST(Claims, SimpleGroups) {
  EXPECT_EQ(check(ClaimId::cor_simple, "A5").status, Status::pass);
  EXPECT_EQ(check(ClaimId::cor_simple, "S5").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::prop_semisimple, "A5").status, Status::pass);
  EXPECT_EQ(check(ClaimId::prop_semisimple, "S4").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::kernel_b, "S4").status, Status::pass);
  EXPECT_EQ(check(ClaimId::derived_length, "S4").detail, "dl=3 n=14");
}

TEST(Claims, VerifyAllIsInClaimOrder) {
  const auto G = group_from_spec("S3");
  const auto results = verify_all(analyze(G));
  ASSERT_EQ(results.size(), all_claims.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].claim, all_claims[i]);
    EXPECT_EQ(results[i].group, "S3");
    EXPECT_NE(results[i].status, Status::fail) << claim_name(results[i].claim);
  }
}

TEST(Claims, CorpusLevelProperties) {
  std::vector<InvariantReport> reports;
  std::vector<FiniteGroup> groups;
  for (const char* spec : {"C1", "S3", "Q8", "A4", "S4", "A5"}) groups.push_back(group_from_spec(spec));
  for (const auto& G : groups) reports.push_back(analyze(G).report);
  const auto s = census_properties(reports);
  ASSERT_EQ(s.results.size(), 2U);
  EXPECT_EQ(s.results[0].claim, ClaimId::no_c2_c3);
  EXPECT_EQ(s.results[0].status, Status::pass);
  EXPECT_EQ(s.results[1].status, Status::pass);
  EXPECT_EQ(s.results[1].detail, "c4_groups=1");
  EXPECT_EQ(s.attained_n, (std::set<std::uint64_t>{1, 4, 5, 6, 14, 22}));

  reports[0].n_centralizers = 3;
  EXPECT_EQ(census_properties(reports).results[0].status, Status::fail);
}

TEST(Isomorphism, SmallCases) {
  EXPECT_TRUE(is_isomorphic(group_from_spec("D6"), group_from_spec("S3")));
  EXPECT_FALSE(is_isomorphic(group_from_spec("C4"), group_from_spec("E4")));
  EXPECT_TRUE(is_isomorphic(group_from_spec("C2xC3"), group_from_spec("C6")));
  EXPECT_TRUE(is_isomorphic(group_from_spec("D12"), group_from_spec("S3xC2")));
  EXPECT_FALSE(is_isomorphic(group_from_spec("Q8"), group_from_spec("D8")));
  EXPECT_FALSE(is_isomorphic(group_from_spec("A4"), group_from_spec("D12")));
  EXPECT_FALSE(is_isomorphic(group_from_spec("Q12"), group_from_spec("D12")));
  EXPECT_TRUE(is_isomorphic(group_from_spec("S4"), group_from_spec("S4")));
  EXPECT_TRUE(is_isomorphic(group_from_spec("S3xS3"), group_from_spec("S3xD6")));
  EXPECT_THROW(is_isomorphic(group_from_spec("S5"), group_from_spec("S5")), IsomorphismCapExceeded);
}

TEST(Conjecture, Candidates) {
  EXPECT_FALSE(is_conjecture_candidate(1, 1));
  EXPECT_TRUE(is_conjecture_candidate(6, 5));
  EXPECT_FALSE(is_conjecture_candidate(8, 4));
  for (const char* spec : {"S3", "D10", "S3xS3", "D6"}) {
    const auto G = group_from_spec(spec);
    const auto c = classify_candidate(analyze(G));
    ASSERT_TRUE(c.has_value()) << spec;
    EXPECT_EQ(c->verdict, ConjectureVerdict::matches);
  }
  const auto A5 = group_from_spec("A5");
  EXPECT_FALSE(classify_candidate(analyze(A5)).has_value());
  const auto too_big = classify_candidate(group_from_spec("C2xS4"), 1000, 10);
  ASSERT_TRUE(too_big.has_value());
  EXPECT_EQ(too_big->verdict, ConjectureVerdict::too_large);
  EXPECT_EQ(verdict_name(ConjectureVerdict::too_large), "too-large-to-test");
}

TEST(Claims, MoreExamples) {
  EXPECT_EQ(check(ClaimId::thm_a, "C6").status, Status::pass);
  EXPECT_EQ(check(ClaimId::thm_b1, "C2").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::prop_semisimple, "C4").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::prop_semisimple, "S3xS3").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::kernel_b, "A5").status, Status::pass);
  EXPECT_EQ(check(ClaimId::kernel_b, "C4").status, Status::pass);
  EXPECT_EQ(check(ClaimId::derived_length, "A5").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::derived_length, "C4").detail, "dl=1 n=1");
  EXPECT_EQ(check(ClaimId::lemma_li, "A5").detail.substr(0, 9), "44 ≤ 76");
  EXPECT_EQ(check(ClaimId::cor_simple, "A5").detail, "3n=66 2|G|=120 3|I|=48 |G|=60");
  EXPECT_EQ(check(ClaimId::conjecture_scan, "Q8").status, Status::vacuous);
  EXPECT_EQ(check(ClaimId::conjecture_scan, "D10").status, Status::pass);
}

TEST(Claims, NoSmallCentralizerCountsUpTo100) {
  std::vector<InvariantReport> reports;
  for (const auto& e : builtin_corpus_entries(100)) {
    const auto G = e.build({});
    reports.push_back(analyze(G).report);
  }
  const auto s = census_properties(reports);
  EXPECT_EQ(s.results[0].status, Status::pass);
  EXPECT_FALSE(s.attained_n.count(2));
  EXPECT_FALSE(s.attained_n.count(3));
}
