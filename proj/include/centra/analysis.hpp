#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "centra/bitset.hpp"
#include "centra/graphs.hpp"
#include "centra/group.hpp"
#include "centra/invariants.hpp"
#include "centra/util.hpp"

namespace centra {

/// Per-group invariants, as serialized by the report writers.
struct InvariantReport {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t n_centralizers = 0;
  std::uint64_t center_order = 0;
  std::uint64_t center_index = 0;
  std::uint64_t involution_count = 0;
  bool soluble = false;
  std::optional<std::uint64_t> derived_length;  // present iff soluble
  bool nilpotent = false;
  std::optional<std::uint64_t> nilpotency_class;  // present iff nilpotent
  bool simple = false;
  bool semisimple = false;
  std::optional<std::uint64_t> a_measure;
  bool a_measure_exact = true;
  std::optional<std::uint64_t> n_measure;  // absent when skipped
  bool n_measure_exact = true;
  std::optional<double> pyber_ratio;  // ln|G:Z(G)| / (n - 1), n >= 2, rounded to 6 decimals

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct AnalysisOptions {
  CliqueOptions clique;
  bool compute_n_measure = true;
  std::size_t n_measure_max_order = 360;  // n_measure skipped above this order
};

/// Everything the verifiers need about one group. Holds a pointer to the
/// group, which must outlive it.
struct GroupAnalysis {
  const FiniteGroup* group = nullptr;
  CentralizerProfile profile;
  Subgroup center;
  Bitset involutions;
  SolubilityResult solubility;
  NilpotencyResult nilpotency;
  bool simple = false;
  bool semisimple = false;
  Subgroup kernel;  // intersection of the normalizers of all centralizers
  NilpotencyResult kernel_nilpotency;
  CliqueResult a_clique;
  std::optional<CliqueResult> n_clique;
  InvariantReport report;

  std::uint64_t order() const { return group->order(); }
  std::uint64_t n() const { return profile.n(); }
  std::uint64_t involution_count() const { return involutions.count(); }
};

inline double rounded_pyber_ratio(std::uint64_t center_index, std::uint64_t n) {
  const double raw = std::log(static_cast<double>(center_index)) / static_cast<double>(n - 1);
  return std::round(raw * 1e6) / 1e6;
}

inline GroupAnalysis analyze(const FiniteGroup& G, const AnalysisOptions& options = {}) {
  GroupAnalysis a;
  a.group = &G;
  a.profile = centralizer_profile(G);
  a.center = center(G);
  a.involutions = involution_set(G);
  a.solubility = is_soluble(G);
  a.nilpotency = is_nilpotent(G);
  if (a.solubility.soluble) {
    // A minimal normal subgroup of a soluble group is elementary abelian.
    a.simple = detail::is_prime(G.order());
    a.semisimple = G.order() == 1;
  } else {
    a.simple = is_simple(G);
    a.semisimple = is_semisimple(G);
  }
  a.kernel = centralizer_normalizer_kernel(G, a.profile);
  a.kernel_nilpotency = is_nilpotent(G, a.kernel);
  a.a_clique = a_measure(G, a.profile, options.clique);
  if (options.compute_n_measure && G.order() <= options.n_measure_max_order)
    a.n_clique = n_measure(G, a.profile, options.clique);

  auto& r = a.report;
  r.name = G.name();
  r.order = G.order();
  r.n_centralizers = a.profile.n();
  r.center_order = a.center.order();
  r.center_index = r.order / r.center_order;
  r.involution_count = a.involutions.count();
  r.soluble = a.solubility.soluble;
  if (r.soluble) r.derived_length = a.solubility.derived_length;
  r.nilpotent = a.nilpotency.nilpotent;
  if (r.nilpotent) r.nilpotency_class = a.nilpotency.nilpotency_class;
  r.simple = a.simple;
  r.semisimple = a.semisimple;
  r.a_measure = a.a_clique.size;
  r.a_measure_exact = a.a_clique.exact;
  if (a.n_clique) {
    r.n_measure = a.n_clique->size;
    r.n_measure_exact = a.n_clique->exact;
  }
  if (r.n_centralizers >= 2) r.pyber_ratio = rounded_pyber_ratio(r.center_index, r.n_centralizers);
  return a;
}

}  // namespace centra
