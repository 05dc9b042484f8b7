#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "centra/bitset.hpp"
#include "centra/group.hpp"
#include "centra/util.hpp"

namespace centra {

/// A subgroup of a FiniteGroup stored as a bitset over element indices.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  Bitset members;

  std::size_t order() const { return members.count(); }
  bool contains(ElementIndex x) const { return members.test(x); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == parent->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

inline Subgroup whole_group(const FiniteGroup& G) { return {&G, Bitset::full(G.order())}; }

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup s{&G, Bitset(G.order())};
  s.members.set(0);
  return s;
}

namespace detail {

// Incrementally maintained closure <gens> inside G.
class Closure {
 public:
  explicit Closure(const FiniteGroup& G) : G_(&G), members_(G.order()) {
    members_.set(0);
    elements_.push_back(0);
  }

  bool contains(ElementIndex x) const { return members_.test(x); }

  // Adds t as a generator; returns true if the subgroup grew.
  bool add(ElementIndex t) {
    if (members_.test(t)) return false;
    gens_.push_back(t);
    rows_.emplace_back();
    uses_.push_back(0);
    const std::size_t slot = gens_.size() - 1;
    const std::size_t old = elements_.size();
    for (std::size_t i = 0; i < old; ++i) push(times(elements_[i], slot));
    for (std::size_t j = old; j < elements_.size(); ++j) {
      const ElementIndex x = elements_[j];
      for (std::size_t s = 0; s < gens_.size(); ++s) push(times(x, s));
    }
    return true;
  }

  const Bitset& members() const { return members_; }
  const std::vector<ElementIndex>& generators() const { return gens_; }
  std::size_t size() const { return elements_.size(); }
  Subgroup subgroup() const { return {G_, members_}; }

 private:
  void push(ElementIndex y) {
    if (members_.insert(y)) elements_.push_back(y);
  }

  // x * gens_[slot]. Without a Cayley table, a generator that is used often
  // gets a full right-multiplication row (O(|G|) lookups) instead of
  // composing permutations each time.
  ElementIndex times(ElementIndex x, std::size_t slot) {
    if (G_->has_mult_cache()) return G_->mult(x, gens_[slot]);
    auto& row = rows_[slot];
    if (!row.empty()) return row[x];
    if (++uses_[slot] > G_->order() / (2 * G_->degree() + 1) + 8) {
      row = G_->right_row(gens_[slot]);
      return row[x];
    }
    return G_->mult_uncached(x, gens_[slot]);
  }

  const FiniteGroup* G_;
  Bitset members_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> gens_;
  std::vector<std::vector<ElementIndex>> rows_;
  std::vector<std::size_t> uses_;
};

inline std::vector<ElementIndex> group_generator_indices(const FiniteGroup& G) {
  std::vector<ElementIndex> out;
  for (std::size_t g = 0; g < G.generator_count(); ++g) {
    const ElementIndex x = G.generator_index(g);
    if (x != 0 && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

// s^-1 x s, using the O(1) generator tables when s is a group generator.
inline ElementIndex conjugate_fast(const FiniteGroup& G, ElementIndex x, ElementIndex s) {
  for (std::size_t g = 0; g < G.generator_count(); ++g)
    if (G.generator_index(g) == s) return G.conjugate_by_generator(x, g);
  return G.conjugate(x, s);
}

inline ElementIndex commutator(const FiniteGroup& G, ElementIndex x, ElementIndex y) {
  return G.mult(G.mult(G.inverse(x), G.inverse(y)), G.mult(x, y));
}

// Closes `K` under conjugation by every element of `by`.
inline void close_under_conjugation(const FiniteGroup& G, Closure& K, std::span<const ElementIndex> by) {
  for (std::size_t i = 0; i < K.generators().size(); ++i)
    for (ElementIndex s : by) K.add(conjugate_fast(G, K.generators()[i], s));
}

}  // namespace detail

/// Closure of `seed` under multiplication (and hence inversion).
inline Subgroup subgroup_generated(const FiniteGroup& G, std::span<const ElementIndex> seed) {
  detail::Closure K(G);
  for (ElementIndex x : seed) K.add(x);
  return K.subgroup();
}

/// A small generating set of H: the group generators when H = G, otherwise a
/// greedy pick of members in ascending index order.
inline std::vector<ElementIndex> generating_set(const FiniteGroup& G, const Subgroup& H) {
  if (H.is_whole()) return detail::group_generator_indices(G);
  detail::Closure K(G);
  const std::size_t target = H.order();
  H.members.for_each([&](std::uint32_t x) {
    if (K.size() < target && !K.contains(x)) K.add(x);
  });
  return K.generators();
}

inline bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
  const auto S = generating_set(G, H);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (!G.commutes(S[i], S[j])) return false;
  return true;
}

/// C_G(a) = {x : xa = ax}, read off the conjugation row of a.
inline Subgroup centralizer(const FiniteGroup& G, ElementIndex a) {
  Subgroup C{&G, Bitset(G.order())};
  if (a == 0) return whole_group(G);
  const auto row = G.conjugation_row(a);
  for (std::size_t x = 0; x < row.size(); ++x)
    if (row[x] == a) C.members.set(x);
  return C;
}

/// Plain commuting scan; the reference the faster paths are checked against.
inline Subgroup centralizer_by_scan(const FiniteGroup& G, ElementIndex a) {
  Subgroup C{&G, Bitset(G.order())};
  for (std::size_t x = 0; x < G.order(); ++x)
    if (G.commutes(a, static_cast<ElementIndex>(x))) C.members.set(x);
  return C;
}

/// Z(G): the elements commuting with every generator.
inline Subgroup center(const FiniteGroup& G) {
  Subgroup Z{&G, Bitset(G.order())};
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool central = true;
    for (std::size_t g = 0; g < G.generator_count() && central; ++g)
      central = G.right_by_generator(static_cast<ElementIndex>(x), g) ==
                G.left_by_generator(g, static_cast<ElementIndex>(x));
    if (central) Z.members.set(x);
  }
  return Z;
}

/// I(G) = {a : a^2 = 1}, identity included.
inline Bitset involution_set(const FiniteGroup& G) {
  Bitset I(G.order());
  for (std::size_t x = 0; x < G.order(); ++x)
    if (G.inverse(static_cast<ElementIndex>(x)) == x) I.set(x);
  return I;
}

struct ConjugacyClasses {
  std::vector<std::vector<ElementIndex>> classes;  // classes[i][0] is the least index in the class
  std::vector<std::uint32_t> class_of;
};

inline ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  ConjugacyClasses out;
  out.class_of.assign(G.order(), unset);
  for (std::size_t a = 0; a < G.order(); ++a) {
    if (out.class_of[a] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<ElementIndex> cls{static_cast<ElementIndex>(a)};
    out.class_of[a] = id;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t g = 0; g < G.generator_count(); ++g) {
        const ElementIndex y = G.conjugate_by_generator(cls[i], g);
        if (out.class_of[y] == unset) {
          out.class_of[y] = id;
          cls.push_back(y);
        }
      }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

/// The set C(G) of element centralizers.
///
/// `distinct` holds each centralizer once, ordered by the least element
/// whose centralizer it is, so distinct[0] = C_G(e) = G. `assignment[a]`
/// indexes C_G(a) in `distinct`.
struct CentralizerProfile {
  std::vector<Subgroup> distinct;
  std::vector<std::uint32_t> assignment;

  std::size_t n() const { return distinct.size(); }
  const Subgroup& of(ElementIndex a) const { return distinct[assignment[a]]; }
};

namespace detail {

class SubgroupInterner {
 public:
  std::uint32_t intern(const FiniteGroup& G, Bitset&& members) {
    auto& bucket = by_hash_[members.hash()];
    for (auto id : bucket)
      if (distinct_[id].members == members) return id;
    const auto id = static_cast<std::uint32_t>(distinct_.size());
    distinct_.push_back({&G, std::move(members)});
    bucket.push_back(id);
    return id;
  }
  const Subgroup& operator[](std::uint32_t id) const { return distinct_[id]; }
  std::vector<Subgroup> take() { return std::move(distinct_); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash_;
  std::vector<Subgroup> distinct_;
};

// Renumbers distinct subgroups by first occurrence in element order.
inline CentralizerProfile canonicalize(std::vector<Subgroup> distinct, std::vector<std::uint32_t> assignment) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> remap(distinct.size(), unset);
  CentralizerProfile out;
  for (auto& id : assignment) {
    if (remap[id] == unset) {
      remap[id] = static_cast<std::uint32_t>(out.distinct.size());
      out.distinct.push_back(std::move(distinct[id]));
    }
    id = remap[id];
  }
  out.assignment = std::move(assignment);
  return out;
}

}  // namespace detail

/// Computes C(G) from one centralizer per conjugacy class: C_G(a^g) =
/// C_G(a)^g, so the remaining centralizers of a class are conjugates of the
/// representative's, obtained with the generator conjugation tables and
/// deduplicated by bitset hash with full comparison.
inline CentralizerProfile centralizer_profile(const FiniteGroup& G) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t N = G.order();
  const std::size_t ng = G.generator_count();
  detail::SubgroupInterner interner;
  const auto whole = interner.intern(G, Bitset::full(N));
  const Subgroup Z = center(G);
  if (Z.is_whole()) return {interner.take(), std::vector<std::uint32_t>(N, whole)};

  std::vector<std::uint32_t> assignment(N, unset);
  const auto classes = conjugacy_classes(G);
  std::unordered_map<std::uint64_t, std::uint32_t> conj_memo;
  auto conjugate_id = [&](std::uint32_t id, std::size_t g) {
    const std::uint64_t key = static_cast<std::uint64_t>(id) * ng + g;
    if (auto it = conj_memo.find(key); it != conj_memo.end()) return it->second;
    Bitset image(N);
    interner[id].members.for_each([&](std::uint32_t h) { image.set(G.conjugate_by_generator(h, g)); });
    const auto out = interner.intern(G, std::move(image));
    conj_memo.emplace(key, out);
    return out;
  };

  for (const auto& cls : classes.classes) {
    const ElementIndex a = cls.front();
    if (Z.contains(a)) {
      assignment[a] = whole;
      continue;
    }
    assignment[a] = interner.intern(G, std::move(centralizer(G, a).members));
    std::vector<ElementIndex> queue{a};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const ElementIndex x = queue[i];
      for (std::size_t g = 0; g < ng; ++g) {
        const ElementIndex y = G.conjugate_by_generator(x, g);
        if (assignment[y] != unset) continue;
        assignment[y] = conjugate_id(assignment[x], g);
        queue.push_back(y);
      }
    }
  }
  return detail::canonicalize(interner.take(), std::move(assignment));
}

/// C(G) by a plain commuting scan of every element.
inline CentralizerProfile centralizer_profile_by_scan(const FiniteGroup& G) {
  detail::SubgroupInterner interner;
  std::vector<std::uint32_t> assignment(G.order());
  for (std::size_t a = 0; a < G.order(); ++a)
    assignment[a] = interner.intern(G, std::move(centralizer_by_scan(G, static_cast<ElementIndex>(a)).members));
  return detail::canonicalize(interner.take(), std::move(assignment));
}

/// Smallest normal subgroup containing all of `seeds`.
inline Subgroup normal_closure(const FiniteGroup& G, std::span<const ElementIndex> seeds) {
  detail::Closure K(G);
  for (ElementIndex s : seeds) K.add(s);
  const auto gens = detail::group_generator_indices(G);
  detail::close_under_conjugation(G, K, gens);
  return K.subgroup();
}

inline Subgroup normal_closure(const FiniteGroup& G, ElementIndex a) {
  const ElementIndex seed[] = {a};
  return normal_closure(G, seed);
}

/// [H, H]: the normal closure in H of the commutators of H's generators.
inline Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H) {
  const auto S = generating_set(G, H);
  detail::Closure K(G);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) K.add(detail::commutator(G, S[i], S[j]));
  detail::close_under_conjugation(G, K, S);
  return K.subgroup();
}

struct SeriesResult {
  std::vector<Subgroup> terms;  // terms[0] is the starting subgroup
  bool reaches_trivial = false;
  std::size_t length = 0;  // strict steps taken
};

inline SeriesResult derived_series(const FiniteGroup& G, const Subgroup& H) {
  SeriesResult out;
  out.terms.push_back(H);
  while (!out.terms.back().is_trivial()) {
    Subgroup next = derived_subgroup(G, out.terms.back());
    if (next == out.terms.back()) break;
    out.terms.push_back(std::move(next));
  }
  out.reaches_trivial = out.terms.back().is_trivial();
  out.length = out.terms.size() - 1;
  return out;
}

/// gamma_1 = H, gamma_{i+1} = [gamma_i, H], each term the normal closure in
/// H of commutators between generators of gamma_i and of H.
inline SeriesResult lower_central_series(const FiniteGroup& G, const Subgroup& H,
                                         std::span<const ElementIndex> generators) {
  SeriesResult out;
  out.terms.push_back(H);
  const std::vector<ElementIndex> S(generators.begin(), generators.end());
  std::vector<ElementIndex> current = S;
  while (!out.terms.back().is_trivial()) {
    detail::Closure K(G);
    for (ElementIndex x : current)
      for (ElementIndex s : S) K.add(detail::commutator(G, x, s));
    detail::close_under_conjugation(G, K, S);
    Subgroup next = K.subgroup();
    if (next == out.terms.back()) break;
    current = K.generators();
    out.terms.push_back(std::move(next));
  }
  out.reaches_trivial = out.terms.back().is_trivial();
  out.length = out.terms.size() - 1;
  return out;
}

inline SeriesResult lower_central_series(const FiniteGroup& G, const Subgroup& H) {
  const auto S = generating_set(G, H);
  return lower_central_series(G, H, S);
}

struct SolubilityResult {
  bool soluble = false;
  std::size_t derived_length = 0;  // meaningful when soluble; 0 for the trivial group
};

inline SolubilityResult is_soluble(const FiniteGroup& G) {
  const auto series = derived_series(G, whole_group(G));
  return {series.reaches_trivial, series.length};
}

struct NilpotencyResult {
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful when nilpotent
};

inline NilpotencyResult is_nilpotent(const FiniteGroup& G, const Subgroup& H) {
  const auto series = lower_central_series(G, H);
  return {series.reaches_trivial, series.length};
}

// H must equal <generators>.
inline NilpotencyResult is_nilpotent(const FiniteGroup& G, const Subgroup& H, std::span<const ElementIndex> generators) {
  const auto series = lower_central_series(G, H, generators);
  return {series.reaches_trivial, series.length};
}

inline NilpotencyResult is_nilpotent(const FiniteGroup& G) { return is_nilpotent(G, whole_group(G)); }

/// True iff every non-identity class representative has normal closure G.
/// The trivial group is not simple.
inline bool is_simple(const FiniteGroup& G) {
  if (G.order() < 2) return false;
  const Subgroup Z = center(G);
  if (!Z.is_trivial()) return Z.is_whole() && detail::is_prime(G.order());
  for (const auto& cls : conjugacy_classes(G).classes) {
    if (cls.front() == 0) continue;
    if (!normal_closure(G, cls.front()).is_whole()) return false;
  }
  return true;
}

/// True iff no non-identity element has an abelian normal closure, i.e. G
/// has no nontrivial normal abelian subgroup.
inline bool is_semisimple(const FiniteGroup& G) {
  if (G.order() == 1) return true;
  if (!center(G).is_trivial()) return false;
  for (const auto& cls : conjugacy_classes(G).classes) {
    if (cls.front() == 0) continue;
    if (is_abelian(G, normal_closure(G, cls.front()))) return false;
  }
  return true;
}

/// N_G(H) = {g : H^g = H}. Each generator h of H contributes the row
/// g -> h^g, so the cost is O(|G|) lookups per generator.
inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  if (H.is_whole() || H.is_trivial()) return whole_group(G);
  Subgroup out = whole_group(G);
  for (ElementIndex h : generating_set(G, H)) {
    const auto row = G.conjugation_row(h);
    for (std::size_t g = 0; g < row.size(); ++g)
      if (!H.contains(row[g])) out.members.reset(g);
  }
  return out;
}

/// B = the intersection of N_G(C) over all distinct centralizers C: the
/// kernel of the conjugation action of G on C(G). Centralizers are taken in
/// ascending order so the candidate set shrinks early; once it is small,
/// candidates are tested directly instead of filling whole rows.
inline Subgroup centralizer_normalizer_kernel(const FiniteGroup& G, const CentralizerProfile& profile) {
  Subgroup B = whole_group(G);
  std::vector<std::uint32_t> order(profile.n());
  std::iota(order.begin(), order.end(), 0U);
  std::vector<std::size_t> sizes(profile.n());
  for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = profile.distinct[i].order();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] < sizes[b]; });

  for (auto id : order) {
    const Subgroup& C = profile.distinct[id];
    if (C.is_whole() || C.is_trivial()) continue;
    if (B.is_trivial()) break;
    const auto gens = generating_set(G, C);
    const std::size_t candidates = B.order();
    const std::size_t direct_cost = 2 * G.mult_cost() + 2;
    if (candidates * direct_cost < G.order()) {
      for (auto g : B.members.members()) {
        for (ElementIndex h : gens)
          if (!C.contains(G.conjugate(h, g))) {
            B.members.reset(g);
            break;
          }
      }
    } else {
      B.members &= normalizer(G, C).members;
    }
  }
  return B;
}

}  // namespace centra
