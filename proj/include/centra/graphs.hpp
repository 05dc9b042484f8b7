#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "centra/bitset.hpp"
#include "centra/group.hpp"
#include "centra/invariants.hpp"

namespace centra {

enum class Relation { non_commuting, non_nilpotent_pair };

/// A simple undirected graph on group elements.
///
/// For Relation::non_commuting the vertices are one representative (least
/// index) per proper centralizer: elements with equal centralizers commute,
/// so no clique contains two of them, and adjacency only depends on the
/// centralizer. For Relation::non_nilpotent_pair the vertices are one
/// generator (least index) per non-central cyclic subgroup, since <u, v>
/// depends only on <u> and <v>.
///
/// Adjacency rows are bitsets over element indices, so rows can be built
/// with word operations on centralizer bitsets.
struct RelationGraph {
  Relation relation = Relation::non_commuting;
  std::vector<ElementIndex> vertices;  // ascending
  Bitset vertex_set;
  std::vector<Bitset> adjacency;       // adjacency[i] = neighbours of vertices[i]
  bool exceeds_budget = false;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(vertices[j]); }
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<ElementIndex> witness;
  bool exact = true;
  std::uint64_t nodes = 0;
};

struct CliqueOptions {
  std::uint64_t node_budget = 10'000'000;
};

namespace detail {

// Branch and bound over greedy colourings; vertices are branched in reverse
// colour order. rows[v] is consulted only for v in the candidate sets.
struct CliqueSearch {
  const std::vector<const Bitset*>& rows;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> best;

  void expand(Bitset candidates) {
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> colour;
    Bitset uncoloured = candidates;
    std::uint32_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      for (auto v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
        q.subtract(*rows[v]);
        uncoloured.reset(v);
        order.push_back(static_cast<std::uint32_t>(v));
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best.size()) return;
      const auto v = order[i];
      current.push_back(v);
      Bitset next = candidates & *rows[v];
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
      if (aborted) return;
    }
  }

  // Greedy clique over `by_preference`, used as the initial lower bound.
  void seed(const Bitset& universe, const std::vector<std::uint32_t>& by_preference) {
    Bitset candidates = universe;
    for (auto v : by_preference)
      if (candidates.test(v)) {
        best.push_back(v);
        candidates &= *rows[v];
      }
  }
};

inline CliqueResult run_clique_search(const std::vector<const Bitset*>& rows, const Bitset& universe,
                                      const std::vector<std::uint32_t>& by_preference, CliqueOptions options) {
  CliqueResult out;
  if (universe.none()) return out;
  CliqueSearch search{rows, options.node_budget};
  search.seed(universe, by_preference);
  search.expand(universe);
  out.size = search.best.size();
  out.exact = !search.aborted;
  out.nodes = search.nodes;
  out.witness.assign(search.best.begin(), search.best.end());
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

}  // namespace detail

/// Maximum clique of a graph on positions 0..n-1 by branch and bound over
/// greedy colourings. Vertices are renumbered by descending degree (ties by
/// position) and the search is seeded with a greedy clique, so a colouring
/// that matches the seed closes the search at the root. Past the node budget
/// the best clique found so far is returned with exact = false. The witness
/// lists positions.
inline CliqueResult max_clique_positions(const std::vector<Bitset>& adjacency, CliqueOptions options = {}) {
  const std::size_t n = adjacency.size();
  if (n == 0) return {};

  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = adjacency[i].count();
  std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });
  std::vector<std::uint32_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = static_cast<std::uint32_t>(i);
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    adjacency[perm[i]].for_each([&](std::uint32_t j) { adj[i].set(pos[j]); });

  std::vector<const Bitset*> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = &adj[i];
  std::vector<std::uint32_t> natural(n);
  std::iota(natural.begin(), natural.end(), 0U);
  auto out = detail::run_clique_search(rows, Bitset::full(n), natural, options);
  for (auto& w : out.witness) w = perm[w];
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

namespace detail {

// Number of colours in a greedy colouring of `universe` (an upper bound on
// the clique number).
inline std::size_t greedy_colour_count(const std::vector<const Bitset*>& rows, const Bitset& universe) {
  Bitset uncoloured = universe;
  std::size_t colours = 0;
  while (uncoloured.any()) {
    ++colours;
    Bitset q = uncoloured;
    for (auto v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
      q.subtract(*rows[v]);
      uncoloured.reset(v);
    }
  }
  return colours;
}

}  // namespace detail

/// Maximum clique of a relation graph; the witness lists group elements.
/// A greedy clique (highest degree first) that matches a greedy colouring is
/// returned directly; otherwise the graph is compacted and searched with
/// max_clique_positions.
inline CliqueResult max_clique(const RelationGraph& graph, CliqueOptions options = {}) {
  const std::size_t n = graph.size();
  if (n == 0) return {};
  std::vector<const Bitset*> rows(graph.vertex_set.size(), nullptr);
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[graph.vertices[i]] = &graph.adjacency[i];
    degree[i] = graph.adjacency[i].count();
  }
  std::vector<std::uint32_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0U);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });
  for (auto& v : by_degree) v = graph.vertices[v];

  detail::CliqueSearch greedy{rows, options.node_budget};
  greedy.seed(graph.vertex_set, by_degree);
  if (greedy.best.size() == detail::greedy_colour_count(rows, graph.vertex_set)) {
    CliqueResult out;
    out.size = greedy.best.size();
    out.witness.assign(greedy.best.begin(), greedy.best.end());
    std::sort(out.witness.begin(), out.witness.end());
    return out;
  }

  std::vector<std::uint32_t> pos(graph.vertex_set.size(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[graph.vertices[i]] = static_cast<std::uint32_t>(i);
  std::vector<Bitset> compact(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) graph.adjacency[i].for_each([&](std::uint32_t v) { compact[i].set(pos[v]); });
  auto out = max_clique_positions(compact, options);
  for (auto& w : out.witness) w = graph.vertices[w];
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

namespace detail {

// One generator per non-central cyclic subgroup: rep[x] is the least index
// generating <x>.
inline std::vector<ElementIndex> cyclic_subgroup_representatives(const FiniteGroup& G, const Subgroup& Z) {
  constexpr auto unset = std::numeric_limits<ElementIndex>::max();
  std::vector<ElementIndex> rep(G.order(), unset);
  std::vector<ElementIndex> out;
  for (ElementIndex x = 1; x < G.order(); ++x) {
    if (Z.contains(x) || rep[x] != unset) continue;
    out.push_back(x);
    const auto powers = G.powers(x);
    const std::uint64_t ord = powers.size();
    for (std::uint64_t k = 1; k < ord; ++k)
      if (std::gcd(k, ord) == 1) rep[powers[k]] = x;
  }
  return out;
}

// Memoized nilpotency of 2-generated subgroups, keyed by the subgroup bitset.
class PairNilpotency {
 public:
  explicit PairNilpotency(const FiniteGroup& G) : G_(&G) {}

  bool nilpotent(ElementIndex u, ElementIndex v) {
    const ElementIndex seed[] = {u, v};
    Subgroup H = subgroup_generated(*G_, seed);
    auto& bucket = memo_[H.members.hash()];
    for (const auto& [members, flag] : bucket)
      if (members == H.members) return flag;
    const bool flag = is_nilpotent(*G_, H, seed).nilpotent;
    bucket.emplace_back(std::move(H.members), flag);
    return flag;
  }

 private:
  const FiniteGroup* G_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Bitset, bool>>> memo_;
};

}  // namespace detail

/// Builds the non-commuting graph on centralizer representatives, or the
/// non-nilpotent-pair graph on cyclic subgroup representatives.
inline RelationGraph build_graph(const FiniteGroup& G, const CentralizerProfile& profile, Relation relation,
                                 CliqueOptions options = {}) {
  RelationGraph graph;
  graph.relation = relation;
  if (relation == Relation::non_commuting) {
    std::vector<bool> seen(profile.n(), false);
    for (ElementIndex a = 0; a < G.order(); ++a) {
      const auto id = profile.assignment[a];
      if (seen[id]) continue;
      seen[id] = true;
      if (!profile.distinct[id].is_whole()) graph.vertices.push_back(a);
    }
  } else {
    Subgroup Z{&G, Bitset(G.order())};
    for (ElementIndex a = 0; a < G.order(); ++a)
      if (profile.of(a).is_whole()) Z.members.set(a);
    graph.vertices = detail::cyclic_subgroup_representatives(G, Z);
  }

  const std::size_t n = graph.vertices.size();
  graph.vertex_set = Bitset(G.order());
  for (auto v : graph.vertices) graph.vertex_set.set(v);
  graph.exceeds_budget = n > options.node_budget;
  graph.adjacency.reserve(n);
  for (auto u : graph.vertices) {
    Bitset row = graph.vertex_set;
    row.subtract(profile.of(u).members);
    graph.adjacency.push_back(std::move(row));
  }
  if (relation == Relation::non_nilpotent_pair) {
    detail::PairNilpotency pairs(G);
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = graph.vertices[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto v = graph.vertices[j];
        if (graph.adjacency[i].test(v) && pairs.nilpotent(u, v)) {
          graph.adjacency[i].reset(v);
          graph.adjacency[j].reset(u);
        }
      }
    }
  }
  return graph;
}

/// Re-checks a clique witness on the group. Commutation is tested with
/// products for small witnesses; larger ones are checked word-wise against
/// the centralizer bitsets of `profile` when one is given, or against
/// centralizers read off conjugation rows.
inline bool witness_valid(const FiniteGroup& G, Relation relation, const std::vector<ElementIndex>& witness,
                          const CentralizerProfile* profile = nullptr) {
  if (witness.size() <= 1) return true;
  const bool direct = witness.size() <= 64;
  Bitset members(G.order());
  for (auto w : witness)
    if (!members.insert(w)) return false;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (direct) {
      for (std::size_t j = i + 1; j < witness.size(); ++j)
        if (G.commutes(witness[i], witness[j])) return false;
    } else {
      const Bitset inside =
          (profile ? profile->of(witness[i]).members : centralizer(G, witness[i]).members) & members;
      if (inside.count() != 1) return false;
    }
  }
  if (relation == Relation::non_nilpotent_pair) {
    detail::PairNilpotency pairs(G);
    for (std::size_t i = 0; i < witness.size(); ++i)
      for (std::size_t j = i + 1; j < witness.size(); ++j)
        if (pairs.nilpotent(witness[i], witness[j])) return false;
  }
  return true;
}

namespace detail {

inline CliqueResult measure(const FiniteGroup& G, const CentralizerProfile& profile, Relation relation,
                            CliqueOptions options) {
  const auto graph = build_graph(G, profile, relation, options);
  if (graph.size() == 0) {
    // No pair qualifies; any single element is a largest qualifying set.
    CliqueResult out;
    out.size = 1;
    out.witness = {0};
    return out;
  }
  auto out = max_clique(graph, options);
  if (!witness_valid(G, relation, out.witness, &profile)) throw std::logic_error("clique witness failed group re-check");
  return out;
}

}  // namespace detail

/// Size of the largest pairwise non-commuting subset of G. G satisfies
/// condition (A, m) iff this is <= m. An abelian group measures 1: a single
/// element is vacuously pairwise non-commuting.
inline CliqueResult a_measure(const FiniteGroup& G, const CentralizerProfile& profile, CliqueOptions options = {}) {
  return detail::measure(G, profile, Relation::non_commuting, options);
}

/// Size of the largest subset of G whose pairs all generate non-nilpotent
/// subgroups; condition (N, m) holds iff this is <= m.
inline CliqueResult n_measure(const FiniteGroup& G, const CentralizerProfile& profile, CliqueOptions options = {}) {
  return detail::measure(G, profile, Relation::non_nilpotent_pair, options);
}

}  // namespace centra
