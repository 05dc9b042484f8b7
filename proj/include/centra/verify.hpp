#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "centra/analysis.hpp"
#include "centra/constructors.hpp"
#include "centra/group.hpp"
#include "centra/invariants.hpp"
#include "centra/util.hpp"

namespace centra {

enum class ClaimId {
  prop_a_bound,
  thm_a,
  thm_b1,
  thm_b2,
  thm_tb_lower,
  lemma_li,
  cor_simple,
  prop_semisimple,
  kernel_b,
  derived_length,
  c4_soluble,
  no_c2_c3,
  conjecture_scan,
};

inline constexpr std::array<ClaimId, 13> all_claims = {
    ClaimId::prop_a_bound, ClaimId::thm_a,           ClaimId::thm_b1,         ClaimId::thm_b2,
    ClaimId::thm_tb_lower, ClaimId::lemma_li,        ClaimId::cor_simple,     ClaimId::prop_semisimple,
    ClaimId::kernel_b,     ClaimId::derived_length,  ClaimId::c4_soluble,     ClaimId::no_c2_c3,
    ClaimId::conjecture_scan};

inline std::string_view claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::prop_a_bound: return "prop-A-bound";
    case ClaimId::thm_a: return "thm-A";
    case ClaimId::thm_b1: return "thm-B1";
    case ClaimId::thm_b2: return "thm-B2";
    case ClaimId::thm_tb_lower: return "thm-tb-lower";
    case ClaimId::lemma_li: return "lemma-li";
    case ClaimId::cor_simple: return "cor-simple";
    case ClaimId::prop_semisimple: return "prop-semisimple";
    case ClaimId::kernel_b: return "kernel-B";
    case ClaimId::derived_length: return "derived-length";
    case ClaimId::c4_soluble: return "c4-soluble";
    case ClaimId::no_c2_c3: return "no-c2-c3";
    case ClaimId::conjecture_scan: return "conjecture-scan";
  }
  return "?";
}

inline std::optional<ClaimId> parse_claim(std::string_view text) {
  for (auto id : all_claims)
    if (claim_name(id) == text) return id;
  return std::nullopt;
}

/// pass: hypothesis and conclusion hold. fail: hypothesis holds, conclusion
/// does not. vacuous: hypothesis does not hold. budget: a resource limit
/// (clique budget, isomorphism cap) kept the check from finishing.
enum class Status { pass, fail, vacuous, budget };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::vacuous: return "vacuous";
    case Status::budget: return "budget";
  }
  return "?";
}

inline std::optional<Status> parse_status(std::string_view text) {
  for (auto s : {Status::pass, Status::fail, Status::vacuous, Status::budget})
    if (status_name(s) == text) return s;
  return std::nullopt;
}

struct VerificationResult {
  ClaimId claim = ClaimId::thm_a;
  std::string group;
  bool hypothesis_held = false;
  bool conclusion_held = false;
  Status status = Status::vacuous;
  std::string detail;

  friend bool operator==(const VerificationResult&, const VerificationResult&) = default;
};

inline VerificationResult make_result(ClaimId claim, std::string group, bool hypothesis, bool conclusion,
                                      std::string detail) {
  const Status status = !hypothesis ? Status::vacuous : conclusion ? Status::pass : Status::fail;
  return {claim, std::move(group), hypothesis, conclusion, status, std::move(detail)};
}

namespace detail {

inline std::string num(std::uint64_t v) { return std::to_string(v); }
inline std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Every C_n-group satisfies (A, n-1): no n elements are pairwise
/// non-commuting. For n = 1 the condition (A, 0) is degenerate and the result
/// is vacuous. A truncated clique search can still fail the claim (its lower
/// bound already reaches n) but never passes it.
inline VerificationResult verify_prop_a_bound(const GroupAnalysis& a) {
  const auto n = a.n();
  const auto m = a.a_clique.size;
  const std::string name = a.group->name();
  std::string detail = "a_measure=" + detail::num(m) + (a.a_clique.exact ? "" : "(lower bound)") +
                       " n-1=" + detail::num(n - 1);
  if (n == 1) return make_result(ClaimId::prop_a_bound, name, false, true, detail + " degenerate (A,0)");
  if (!a.a_clique.exact && m <= n - 1)
    return {ClaimId::prop_a_bound, name, true, false, Status::budget, detail + " clique budget exhausted"};
  return make_result(ClaimId::prop_a_bound, name, true, m <= n - 1, detail);
}

inline VerificationResult verify_thm_a(const GroupAnalysis& a) {
  return make_result(ClaimId::thm_a, a.group->name(), a.n() <= 21, a.solubility.soluble,
                     "n=" + detail::num(a.n()) + " soluble=" + detail::flag(a.solubility.soluble));
}

/// B1: |G| < 2n implies G is not nilpotent.
inline VerificationResult verify_thm_b1(const GroupAnalysis& a) {
  const auto N = a.order();
  const auto n = a.n();
  return make_result(ClaimId::thm_b1, a.group->name(), N < 2 * n, !a.nilpotency.nilpotent,
                     "|G|=" + detail::num(N) + " 2n=" + detail::num(2 * n) +
                         " nilpotent=" + detail::flag(a.nilpotency.nilpotent));
}

/// B2: 19|G| < 30n + 15 implies G is soluble and not nilpotent. The
/// conclusion also requires the counting chain used to reach it:
/// |I(G)| >= 2n - |G| and 15|I(G)| > 4|G| - 15.
inline VerificationResult verify_thm_b2(const GroupAnalysis& a) {
  const auto N = static_cast<std::int64_t>(a.order());
  const auto n = static_cast<std::int64_t>(a.n());
  const auto inv = static_cast<std::int64_t>(a.involution_count());
  const bool hypothesis = 19 * N < 30 * n + 15;
  const bool chain = inv >= 2 * n - N && 15 * inv > 4 * N - 15;
  const bool conclusion = a.solubility.soluble && !a.nilpotency.nilpotent && chain;
  return make_result(ClaimId::thm_b2, a.group->name(), hypothesis, conclusion,
                     "19|G|=" + std::to_string(19 * N) + " 30n+15=" + std::to_string(30 * n + 15) +
                         " |I|=" + std::to_string(inv) + " 2n-|G|=" + std::to_string(2 * n - N) +
                         " soluble=" + detail::flag(a.solubility.soluble) +
                         " nilpotent=" + detail::flag(a.nilpotency.nilpotent));
}

inline std::vector<VerificationResult> verify_thm_b(const GroupAnalysis& a) {
  return {verify_thm_b1(a), verify_thm_b2(a)};
}

/// n <= |G:Z(G)|, checked unconditionally; the upper bound is report-only.
inline VerificationResult verify_tb_lower(const GroupAnalysis& a) {
  const auto index = a.order() / a.center.order();
  std::string detail = "n=" + detail::num(a.n()) + " |G:Z|=" + detail::num(index);
  if (a.report.pyber_ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *a.report.pyber_ratio);
    detail += std::string(" pyber_ratio=") + buf;
  }
  return make_result(ClaimId::thm_tb_lower, a.group->name(), true, a.n() <= index, detail);
}

inline VerificationResult verify_lemma_li(const GroupAnalysis& a) {
  const auto lhs = 2 * a.n();
  const auto rhs = a.order() + a.involution_count();
  return make_result(ClaimId::lemma_li, a.group->name(), true, lhs <= rhs,
                     detail::num(lhs) + " ≤ " + detail::num(rhs) + " (2n vs |G|+|I|)");
}

inline VerificationResult verify_cor_simple(const GroupAnalysis& a) {
  const auto N = a.order();
  const auto n = a.n();
  const auto inv = a.involution_count();
  return make_result(ClaimId::cor_simple, a.group->name(), a.simple, 3 * n < 2 * N && 3 * inv < N,
                     "3n=" + detail::num(3 * n) + " 2|G|=" + detail::num(2 * N) + " 3|I|=" + detail::num(3 * inv) +
                         " |G|=" + detail::num(N));
}

inline VerificationResult verify_semisimple_bound(const GroupAnalysis& a) {
  const bool bound = detail::factorial_at_least(a.n() - 1, a.order());
  return make_result(ClaimId::prop_semisimple, a.group->name(), a.semisimple, bound,
                     "|G|=" + detail::num(a.order()) + " <= (n-1)! with n=" + detail::num(a.n()) + ": " +
                         detail::flag(bound));
}

/// B = intersection of N_G(C) over C(G) is nilpotent of class <= 3, G/B
/// embeds in S_{n-1}, and B = 1 when G is semi-simple.
inline VerificationResult verify_kernel_b(const GroupAnalysis& a) {
  const auto b = a.kernel.order();
  const bool nilpotent = a.kernel_nilpotency.nilpotent && a.kernel_nilpotency.nilpotency_class <= 3;
  const bool index = detail::factorial_at_least(a.n() - 1, a.order() / b);
  const bool trivial_if_semisimple = !a.semisimple || b == 1;
  return make_result(ClaimId::kernel_b, a.group->name(), true, nilpotent && index && trivial_if_semisimple,
                     "|B|=" + detail::num(b) + " class=" +
                         (a.kernel_nilpotency.nilpotent ? detail::num(a.kernel_nilpotency.nilpotency_class)
                                                        : std::string("none")) +
                         " |G:B|=" + detail::num(a.order() / b) + " n=" + detail::num(a.n()) +
                         " semisimple=" + detail::flag(a.semisimple));
}

inline VerificationResult verify_derived_length(const GroupAnalysis& a) {
  return make_result(ClaimId::derived_length, a.group->name(), a.solubility.soluble,
                     a.solubility.derived_length <= a.n(),
                     "dl=" + detail::num(a.solubility.derived_length) + " n=" + detail::num(a.n()));
}

inline VerificationResult verify_c4_soluble(const GroupAnalysis& a) {
  return make_result(ClaimId::c4_soluble, a.group->name(), a.n() == 4, a.solubility.soluble,
                     "n=" + detail::num(a.n()) + " soluble=" + detail::flag(a.solubility.soluble));
}

inline VerificationResult verify_no_c2_c3(const GroupAnalysis& a) {
  return make_result(ClaimId::no_c2_c3, a.group->name(), true, a.n() != 2 && a.n() != 3,
                     "n=" + detail::num(a.n()));
}

// ---------------------------------------------------------------------------
// Isomorphism

class IsomorphismCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline std::vector<std::uint64_t> order_profile(const FiniteGroup& G) {
  std::vector<std::uint64_t> orders(G.order());
  for (ElementIndex x = 0; x < G.order(); ++x) orders[x] = G.element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

// Greedy generating set favouring high-order elements.
inline std::vector<ElementIndex> small_generating_set(const FiniteGroup& G) {
  std::vector<ElementIndex> by_order(G.order());
  std::iota(by_order.begin(), by_order.end(), ElementIndex{0});
  std::vector<std::uint64_t> ord(G.order());
  for (ElementIndex x = 0; x < G.order(); ++x) ord[x] = G.element_order(x);
  std::stable_sort(by_order.begin(), by_order.end(), [&](auto a, auto b) { return ord[a] > ord[b]; });
  detail::Closure K(G);
  for (auto x : by_order) {
    if (K.size() == G.order()) break;
    K.add(x);
  }
  return K.generators();
}

// Extends gens[i] -> images[i] over <gens[0..m)> and reports whether the
// extension is a well-defined injective homomorphism.
inline bool consistent_prefix(const FiniteGroup& G, const FiniteGroup& H, const std::vector<ElementIndex>& gens,
                              const std::vector<ElementIndex>& images, std::size_t m) {
  constexpr auto unset = std::numeric_limits<ElementIndex>::max();
  std::vector<ElementIndex> phi(G.order(), unset);
  Bitset used(H.order());
  phi[0] = 0;
  used.set(0);
  std::vector<ElementIndex> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const ElementIndex x = queue[q];
    for (std::size_t i = 0; i < m; ++i) {
      const ElementIndex y = G.mult(x, gens[i]);
      const ElementIndex z = H.mult(phi[x], images[i]);
      if (phi[y] == unset) {
        if (!used.insert(z)) return false;
        phi[y] = z;
        queue.push_back(y);
      } else if (phi[y] != z) {
        return false;
      }
    }
  }
  return true;
}

inline bool extend_isomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<ElementIndex>& gens,
                               const std::vector<std::vector<ElementIndex>>& candidates,
                               std::vector<ElementIndex>& images, std::size_t k) {
  if (k == gens.size()) return true;
  for (auto c : candidates[k]) {
    images[k] = c;
    if (consistent_prefix(G, H, gens, images, k + 1) && extend_isomorphism(G, H, gens, candidates, images, k + 1))
      return true;
  }
  return false;
}

}  // namespace detail

/// Decides G ~= H by backtracking over images of a small generating set of
/// G, after comparing cheap invariants (order, element-order profile,
/// centre size, centralizer count). Throws IsomorphismCapExceeded above cap.
inline bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H, std::size_t cap = 72) {
  if (G.order() != H.order()) return false;
  if (G.order() > cap)
    throw IsomorphismCapExceeded("isomorphism test limited to order " + std::to_string(cap));
  if (detail::order_profile(G) != detail::order_profile(H)) return false;
  if (center(G).order() != center(H).order()) return false;
  if (centralizer_profile(G).n() != centralizer_profile(H).n()) return false;

  const auto gens = detail::small_generating_set(G);
  std::vector<std::vector<ElementIndex>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = G.element_order(gens[i]);
    for (ElementIndex y = 0; y < H.order(); ++y)
      if (H.element_order(y) == ord) candidates[i].push_back(y);
  }
  std::vector<ElementIndex> images(gens.size());
  return detail::extend_isomorphism(G, H, gens, candidates, images, 0);
}

// ---------------------------------------------------------------------------
// Conjecture scan: candidates with 2|G| <= 3n tested against S3, S3xS3, D10.

enum class ConjectureVerdict { matches, counterexample, too_large };

inline std::string_view verdict_name(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::matches: return "matches-conjecture";
    case ConjectureVerdict::counterexample: return "counterexample";
    case ConjectureVerdict::too_large: return "too-large-to-test";
  }
  return "?";
}

struct ConjectureTargets {
  std::vector<FiniteGroup> groups;

  static const ConjectureTargets& standard() {
    static const ConjectureTargets targets{
        {group_from_spec("S3"), group_from_spec("S3xS3"), group_from_spec("D10")}};
    return targets;
  }
};

struct ConjectureCandidate {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t n = 0;
  ConjectureVerdict verdict = ConjectureVerdict::matches;
  std::string matched;  // target name when verdict == matches
};

/// The trivial group meets 2|G| <= 3n but is excluded: the conjecture
/// concerns non-abelian groups.
inline bool is_conjecture_candidate(std::uint64_t order, std::uint64_t n) { return order > 1 && 2 * order <= 3 * n; }

inline std::optional<ConjectureCandidate> classify_candidate(const FiniteGroup& G, std::uint64_t n,
                                                             std::size_t cap = 72) {
  if (!is_conjecture_candidate(G.order(), n)) return std::nullopt;
  ConjectureCandidate c{G.name(), G.order(), n, ConjectureVerdict::counterexample, {}};
  if (G.order() > cap) {
    c.verdict = ConjectureVerdict::too_large;
    return c;
  }
  for (const auto& target : ConjectureTargets::standard().groups) {
    if (is_isomorphic(G, target, cap)) {
      c.verdict = ConjectureVerdict::matches;
      c.matched = target.name();
      break;
    }
  }
  return c;
}

inline std::optional<ConjectureCandidate> classify_candidate(const GroupAnalysis& a, std::size_t cap = 72) {
  return classify_candidate(*a.group, a.n(), cap);
}

inline VerificationResult verify_conjecture(const GroupAnalysis& a, std::size_t cap = 72) {
  const std::string detail = "2|G|=" + detail::num(2 * a.order()) + " 3n=" + detail::num(3 * a.n());
  const auto c = classify_candidate(a, cap);
  if (!c) return make_result(ClaimId::conjecture_scan, a.group->name(), false, true, detail);
  if (c->verdict == ConjectureVerdict::too_large)
    return {ClaimId::conjecture_scan, a.group->name(), true, false, Status::budget,
            detail + " too-large-to-test"};
  const bool ok = c->verdict == ConjectureVerdict::matches;
  return make_result(ClaimId::conjecture_scan, a.group->name(), true, ok,
                     detail + (ok ? " isomorphic to " + c->matched : std::string(" counterexample")));
}

/// All thirteen per-group verifiers, in ClaimId order.
inline std::vector<VerificationResult> verify_all(const GroupAnalysis& a, std::size_t iso_cap = 72) {
  return {verify_prop_a_bound(a), verify_thm_a(a),         verify_thm_b1(a),          verify_thm_b2(a),
          verify_tb_lower(a),     verify_lemma_li(a),      verify_cor_simple(a),      verify_semisimple_bound(a),
          verify_kernel_b(a),     verify_derived_length(a), verify_c4_soluble(a),     verify_no_c2_c3(a),
          verify_conjecture(a, iso_cap)};
}

inline VerificationResult verify_claim(ClaimId id, const GroupAnalysis& a, std::size_t iso_cap = 72) {
  return verify_all(a, iso_cap)[static_cast<std::size_t>(id)];
}

// ---------------------------------------------------------------------------
// Corpus-level checks

struct CensusSummary {
  std::vector<VerificationResult> results;  // group = "corpus"
  std::set<std::uint64_t> attained_n;
  std::uint64_t groups = 0;
};

/// No corpus group has n in {2, 3}; every corpus group with n = 4 is
/// soluble. Also collects the attained centralizer counts (coverage only).
inline CensusSummary census_properties(const std::vector<InvariantReport>& reports) {
  CensusSummary out;
  out.groups = reports.size();
  std::vector<std::string> bad23;
  std::vector<std::string> bad4;
  std::uint64_t with4 = 0;
  for (const auto& r : reports) {
    out.attained_n.insert(r.n_centralizers);
    if (r.n_centralizers == 2 || r.n_centralizers == 3) bad23.push_back(r.name);
    if (r.n_centralizers == 4) {
      ++with4;
      if (!r.soluble) bad4.push_back(r.name);
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  out.results.push_back(make_result(ClaimId::no_c2_c3, "corpus", !reports.empty(), bad23.empty(),
                                    "groups=" + std::to_string(reports.size()) +
                                        (bad23.empty() ? "" : " offenders=" + join(bad23))));
  out.results.push_back(make_result(ClaimId::c4_soluble, "corpus", with4 > 0, bad4.empty(),
                                    "c4_groups=" + std::to_string(with4) +
                                        (bad4.empty() ? "" : " insoluble=" + join(bad4))));
  return out;
}

}  // namespace centra
