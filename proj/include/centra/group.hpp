#pragma once

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "centra/permutation.hpp"

namespace centra {

using ElementIndex = std::uint32_t;

struct GroupLimits {
  std::size_t order_cap = 20000;    // enumeration aborts beyond this many elements
  std::size_t cache_limit = 2048;   // eligible for a lazily built Cayley table
};

class OrderCapExceeded : public std::runtime_error {
 public:
  OrderCapExceeded(const std::string& name, std::size_t cap)
      : std::runtime_error("group '" + name + "' exceeds the order cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class FiniteGroup;
FiniteGroup enumerate_group(std::string name, std::vector<Permutation> generators, GroupLimits limits = {});

/// A finite permutation group, fully enumerated.
///
/// Elements are numbered by breadth-first closure over the generators in the
/// order given, so indices are reproducible and the identity is index 0.
/// Every element x > 0 records the BFS parent p and generator s with
/// x = p * s, which lets whole rows of products (x -> a*x, x -> x*a,
/// x -> x^g) be filled with O(1) table lookups per entry. Immutable after
/// construction.
///
/// Elements are stored by key: either the full image array, or the images of
/// a base (a point set fixed pointwise only by the identity) when the degree
/// is large. A base is only used after it has been proved to be one.
class FiniteGroup {
 public:
  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  std::span<const Permutation> generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  ElementIndex generator_index(std::size_t g) const { return right_[g]; }

  /// Base points, or empty when elements are stored as full image arrays.
  const std::vector<Point>& base() const { return base_; }

  std::vector<Point> images(ElementIndex x) const {
    if (base_.empty()) {
      auto k = key(x);
      return {k.begin(), k.end()};
    }
    std::vector<std::uint32_t> path;
    for (ElementIndex y = x; y != 0; y = parent_[y]) path.push_back(parent_gen_[y]);
    std::vector<Point> out(degree_);
    std::iota(out.begin(), out.end(), Point{0});
    for (auto g = path.rbegin(); g != path.rend(); ++g) {
      const auto gen = generators_[*g].images();
      for (auto& p : out) p = gen[p];
    }
    return out;
  }
  Permutation permutation(ElementIndex x) const { return Permutation(images(x)); }

  std::optional<ElementIndex> index_of(std::span<const Point> images) const {
    if (images.size() != degree_ || !is_bijection(images)) return std::nullopt;
    std::vector<Point> k(key_width_);
    for (std::size_t i = 0; i < key_width_; ++i) k[i] = images[base_.empty() ? i : base_[i]];
    const auto slot = find_slot(k);
    if (slots_[slot] == 0) return std::nullopt;
    const ElementIndex x = slots_[slot] - 1;
    if (!base_.empty()) {
      const auto full = this->images(x);
      if (!std::equal(full.begin(), full.end(), images.begin())) return std::nullopt;
    }
    return x;
  }
  std::optional<ElementIndex> index_of(const Permutation& p) const { return index_of(p.images()); }

  /// True once the Cayley table exists. Groups within the cache limit build
  /// it on demand: after uncached products have cost about |G|^2 lookups, or
  /// on an explicit build_mult_cache().
  bool has_mult_cache() const { return table() != nullptr; }

  void build_mult_cache() const {
    if (cache_) std::call_once(cache_->once, [this] { fill_table(); });
  }

  /// Rough lookups per uncached product, for choosing between strategies.
  std::size_t mult_cost() const {
    if (table()) return 1;
    return base_.empty() ? degree_ : mean_depth_ + 1;
  }

  ElementIndex mult(ElementIndex a, ElementIndex b) const {
    if (const auto* t = table()) return t[static_cast<std::size_t>(a) * order_ + b];
    if (cache_ && cache_->work.fetch_add(mult_cost(), std::memory_order_relaxed) > order_ * order_) {
      build_mult_cache();
      return table()[static_cast<std::size_t>(a) * order_ + b];
    }
    return mult_uncached(a, b);
  }

  ElementIndex mult_uncached(ElementIndex a, ElementIndex b) const {
    if (base_.empty()) {
      std::vector<Point> scratch(degree_);
      const auto pa = key(a);
      const auto pb = key(b);
      for (std::size_t i = 0; i < degree_; ++i) scratch[i] = pb[pa[i]];
      return slots_[find_slot(scratch)] - 1;
    }
    // Walk the shorter BFS word: a*b = s1(s2(...(sk*b))) or ((a*t1)*t2)...
    if (depth_[a] <= depth_[b]) {
      ElementIndex y = b;
      for (ElementIndex x = a; x != 0; x = parent_[x]) y = left_[parent_gen_[x] * order_ + y];
      return y;
    }
    std::uint32_t word[64];
    std::vector<std::uint32_t> long_word;
    std::size_t len = 0;
    for (ElementIndex x = b; x != 0; x = parent_[x]) {
      if (len < 64) {
        word[len++] = parent_gen_[x];
      } else {
        if (long_word.empty()) long_word.assign(word, word + 64);
        long_word.push_back(parent_gen_[x]);
      }
    }
    ElementIndex y = a;
    if (long_word.empty()) {
      for (std::size_t i = len; i-- > 0;) y = right_[y * gens() + word[i]];
    } else {
      for (auto g = long_word.rbegin(); g != long_word.rend(); ++g) y = right_[y * gens() + *g];
    }
    return y;
  }

  ElementIndex inverse(ElementIndex a) const { return inverse_[a]; }

  // a^b = b^-1 a b.
  ElementIndex conjugate(ElementIndex a, ElementIndex b) const { return mult(mult(inverse_[b], a), b); }

  ElementIndex right_by_generator(ElementIndex x, std::size_t g) const { return right_[x * gens() + g]; }
  ElementIndex left_by_generator(std::size_t g, ElementIndex x) const { return left_[g * order_ + x]; }
  // x^s = s^-1 x s for the g-th generator s.
  ElementIndex conjugate_by_generator(ElementIndex x, std::size_t g) const {
    return left_inverse_[g * order_ + right_[x * gens() + g]];
  }

  ElementIndex bfs_parent(ElementIndex x) const { return parent_[x]; }
  std::uint32_t bfs_generator(ElementIndex x) const { return parent_gen_[x]; }

  // row[x] = a * x for every x.
  std::vector<ElementIndex> left_row(ElementIndex a) const {
    std::vector<ElementIndex> row(order_);
    if (const auto* t = table()) {
      t += static_cast<std::size_t>(a) * order_;
      row.assign(t, t + order_);
      return row;
    }
    row[0] = a;
    for (std::size_t x = 1; x < order_; ++x) row[x] = right_[row[parent_[x]] * gens() + parent_gen_[x]];
    return row;
  }

  // row[x] = x * a for every x, via x * a = (a^-1 * x^-1)^-1.
  std::vector<ElementIndex> right_row(ElementIndex a) const {
    const auto inv_row = left_row(inverse_[a]);
    std::vector<ElementIndex> row(order_);
    for (std::size_t x = 0; x < order_; ++x) row[x] = inverse_[inv_row[inverse_[x]]];
    return row;
  }

  // row[g] = h^g = g^-1 h g for every g.
  std::vector<ElementIndex> conjugation_row(ElementIndex h) const {
    std::vector<ElementIndex> row(order_);
    row[0] = h;
    for (std::size_t x = 1; x < order_; ++x) row[x] = conjugate_by_generator(row[parent_[x]], parent_gen_[x]);
    return row;
  }

  bool commutes(ElementIndex a, ElementIndex b) const {
    if (table() || !base_.empty()) return mult(a, b) == mult(b, a);
    const auto pa = key(a);
    const auto pb = key(b);
    for (std::size_t i = 0; i < degree_; ++i)
      if (pb[pa[i]] != pa[pb[i]]) return false;
    return true;
  }

  /// [1, a, a^2, ..., a^(k-1)] where k is the order of a.
  std::vector<ElementIndex> powers(ElementIndex a) const {
    std::vector<ElementIndex> out{0};
    if (a == 0) return out;
    if (!base_.empty() && !table()) {
      const auto row = left_row(a);
      for (ElementIndex y = a; y != 0; y = row[y]) out.push_back(y);
      return out;
    }
    for (ElementIndex y = a; y != 0; y = mult(y, a)) out.push_back(y);
    return out;
  }

  std::uint64_t element_order(ElementIndex a) const {
    if (!base_.empty()) return powers(a).size();
    std::vector<bool> seen(degree_, false);
    const auto p = key(a);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens(); ++i)
      for (std::size_t j = i + 1; j < gens(); ++j)
        if (!commutes(generator_index(i), generator_index(j))) return false;
    return true;
  }

 private:
  friend FiniteGroup enumerate_group(std::string, std::vector<Permutation>, GroupLimits);
  friend struct GroupBuilder;

  std::size_t gens() const { return generators_.size(); }

  struct LazyTable {
    std::once_flag once;
    std::atomic<const ElementIndex*> ready{nullptr};
    std::atomic<std::uint64_t> work{0};
    std::vector<ElementIndex> data;
  };

  const ElementIndex* table() const { return cache_ ? cache_->ready.load(std::memory_order_acquire) : nullptr; }

  void fill_table() const {
    const std::size_t n = order_;
    const std::size_t ng = gens();
    auto& data = cache_->data;
    data.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      ElementIndex* row = data.data() + a * n;
      row[0] = static_cast<ElementIndex>(a);
      for (std::size_t x = 1; x < n; ++x) row[x] = right_[row[parent_[x]] * ng + parent_gen_[x]];
    }
    cache_->ready.store(data.data(), std::memory_order_release);
  }

  std::span<const Point> key(ElementIndex x) const {
    return {keys_.data() + static_cast<std::size_t>(x) * key_width_, key_width_};
  }

  // Four independent multiply-xor lanes so the loop is not one long
  // dependency chain.
  static std::uint64_t hash_points(std::span<const Point> images) {
    std::uint64_t h[4] = {0x9e3779b97f4a7c15ULL, 0xc2b2ae3d27d4eb4fULL, 0x165667b19e3779f9ULL, 0x27d4eb2f165667c5ULL};
    const std::size_t n = images.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
      for (std::size_t k = 0; k < 4; ++k) h[k] = (h[k] ^ images[i + k]) * 0x100000001b3ULL;
    for (; i < n; ++i) h[0] = (h[0] ^ images[i]) * 0x100000001b3ULL;
    std::uint64_t out = h[0] ^ (h[1] * 0x9e3779b97f4a7c15ULL) ^ (h[2] >> 17) ^ (h[3] * 0xff51afd7ed558ccdULL);
    return out ^ (out >> 29);
  }

  std::size_t find_slot(std::span<const Point> k) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t slot = static_cast<std::size_t>(hash_points(k)) & mask;
    while (true) {
      const ElementIndex s = slots_[slot];
      if (s == 0) return slot;
      const Point* e = keys_.data() + static_cast<std::size_t>(s - 1) * key_width_;
      if (std::equal(k.begin(), k.end(), e)) return slot;
      slot = (slot + 1) & mask;
    }
  }

  void grow_slots() {
    std::vector<ElementIndex> old = std::move(slots_);
    slots_.assign(old.size() * 2, 0);
    for (ElementIndex s : old)
      if (s != 0) slots_[find_slot(key(s - 1))] = s;
  }

  ElementIndex insert(std::span<const Point> k, std::size_t slot) {
    const auto idx = static_cast<ElementIndex>(order_);
    keys_.insert(keys_.end(), k.begin(), k.end());
    ++order_;
    slots_[slot] = idx + 1;
    if (order_ * 2 > slots_.size()) grow_slots();
    return idx;
  }

  std::string name_;
  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::size_t key_width_ = 0;
  std::vector<Point> keys_;             // order_ * key_width_, row-major
  std::vector<ElementIndex> slots_;     // open addressing, stores index + 1
  std::vector<ElementIndex> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> depth_;
  std::size_t mean_depth_ = 0;
  std::vector<ElementIndex> right_;         // [x * gens + g] = x * s_g
  std::vector<ElementIndex> left_;          // [g * order + x] = s_g * x
  std::vector<ElementIndex> left_inverse_;  // [g * order + x] = s_g^-1 * x
  std::vector<ElementIndex> inverse_;
  std::shared_ptr<LazyTable> cache_;  // null above the cache limit; shared by copies
};

struct GroupBuilder {
  // Breadth-first closure on keys. The key of x * s is s applied to the key
  // of x, which holds for full image arrays and for base images alike.
  static FiniteGroup closure(std::string name, std::vector<Permutation> generators, std::vector<Point> base,
                             const GroupLimits& limits) {
    FiniteGroup G;
    G.name_ = std::move(name);
    G.degree_ = generators.front().degree();
    G.generators_ = std::move(generators);
    G.base_ = std::move(base);
    G.key_width_ = G.base_.empty() ? G.degree_ : G.base_.size();
    const std::size_t ng = G.generators_.size();
    G.slots_.assign(64, 0);

    std::vector<Point> k(G.key_width_);
    for (std::size_t i = 0; i < G.key_width_; ++i) k[i] = G.base_.empty() ? static_cast<Point>(i) : G.base_[i];
    G.insert(k, G.find_slot(k));
    G.parent_.push_back(0);
    G.parent_gen_.push_back(0);
    G.depth_.push_back(0);

    for (std::size_t x = 0; x < G.order_; ++x) {
      for (std::size_t g = 0; g < ng; ++g) {
        const auto gen = G.generators_[g].images();
        const Point* px = G.keys_.data() + x * G.key_width_;
        for (std::size_t i = 0; i < G.key_width_; ++i) k[i] = gen[px[i]];
        const std::size_t slot = G.find_slot(k);
        ElementIndex y;
        if (G.slots_[slot] != 0) {
          y = G.slots_[slot] - 1;
        } else {
          if (G.order_ >= limits.order_cap) throw OrderCapExceeded(G.name_, limits.order_cap);
          y = G.insert(k, slot);
          G.parent_.push_back(static_cast<ElementIndex>(x));
          G.parent_gen_.push_back(static_cast<std::uint32_t>(g));
          G.depth_.push_back(G.depth_[x] + 1);
        }
        G.right_.push_back(y);
      }
    }
    return G;
  }

  // The action of G on the key orbit is regular iff, for every generator s,
  // the map 1 -> s extends along the BFS tree to a map commuting with all
  // generators (then those maps generate a transitive centralizer).
  static bool regular_on_keys(const FiniteGroup& G) {
    const std::size_t n = G.order_;
    const std::size_t ng = G.generators_.size();
    std::vector<ElementIndex> phi(n);
    for (std::size_t g = 0; g < ng; ++g) {
      phi[0] = G.right_[g];
      for (std::size_t y = 1; y < n; ++y) phi[y] = G.right_[phi[G.parent_[y]] * ng + G.parent_gen_[y]];
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t t = 0; t < ng; ++t)
          if (phi[G.right_[y * ng + t]] != G.right_[phi[y] * ng + t]) return false;
    }
    return true;
  }

  // Candidate base: the least point of every nontrivial orbit, plus (when
  // `neighbours`) the image of that point under the first generator moving
  // it. Every moved point lies in the orbit of some base point, so the group
  // acts faithfully on the key orbit.
  static std::vector<Point> candidate_base(const std::vector<Permutation>& gens, bool neighbours) {
    const std::size_t degree = gens.front().degree();
    std::vector<bool> seen(degree, false);
    std::vector<Point> base;
    for (Point p = 0; p < degree; ++p) {
      if (seen[p]) continue;
      std::vector<Point> orbit{p};
      seen[p] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : gens)
          if (!seen[g[orbit[i]]]) {
            seen[g[orbit[i]]] = true;
            orbit.push_back(g[orbit[i]]);
          }
      if (orbit.size() == 1) continue;
      base.push_back(p);
      if (neighbours && orbit.size() > 2) {
        for (const auto& g : gens)
          if (g[p] != p) {
            base.push_back(g[p]);
            break;
          }
      }
    }
    return base;
  }

  static void finish(FiniteGroup& G, const GroupLimits& limits) {
    const std::size_t n = G.order_;
    const std::size_t ng = G.generators_.size();
    G.left_.resize(ng * n);
    G.left_inverse_.resize(ng * n);
    for (std::size_t g = 0; g < ng; ++g) {
      ElementIndex* row = G.left_.data() + g * n;
      row[0] = G.right_[g];
      for (std::size_t x = 1; x < n; ++x) row[x] = G.right_[row[G.parent_[x]] * ng + G.parent_gen_[x]];
      ElementIndex* inv_row = G.left_inverse_.data() + g * n;
      for (std::size_t x = 0; x < n; ++x) inv_row[row[x]] = static_cast<ElementIndex>(x);
    }

    G.inverse_.resize(n);
    G.inverse_[0] = 0;
    for (std::size_t x = 1; x < n; ++x)
      G.inverse_[x] = G.left_inverse_[G.parent_gen_[x] * n + G.inverse_[G.parent_[x]]];

    std::uint64_t total_depth = 0;
    for (auto d : G.depth_) total_depth += d;
    G.mean_depth_ = static_cast<std::size_t>(total_depth / n);

    if (n <= limits.cache_limit) G.cache_ = std::make_shared<FiniteGroup::LazyTable>();
  }
};

/// Enumerates the closure of `generators` breadth-first. Throws
/// std::invalid_argument for an empty or inconsistent generator list and
/// OrderCapExceeded when the closure outgrows limits.order_cap.
inline FiniteGroup enumerate_group(std::string name, std::vector<Permutation> generators, GroupLimits limits) {
  if (generators.empty()) throw std::invalid_argument("enumerate_group: empty generator list");
  const std::size_t degree = generators.front().degree();
  if (degree == 0) throw std::invalid_argument("enumerate_group: degree must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("enumerate_group: generator degree mismatch");
    if (!is_bijection(g.images())) throw std::invalid_argument("enumerate_group: invalid generator");
  }

  constexpr std::size_t base_threshold = 32;
  if (degree > base_threshold) {
    for (bool neighbours : {false, true}) {
      auto base = GroupBuilder::candidate_base(generators, neighbours);
      if (base.empty() || 2 * base.size() > degree) continue;
      auto G = GroupBuilder::closure(name, generators, std::move(base), limits);
      if (GroupBuilder::regular_on_keys(G)) {
        GroupBuilder::finish(G, limits);
        return G;
      }
    }
  }
  auto G = GroupBuilder::closure(std::move(name), std::move(generators), {}, limits);
  GroupBuilder::finish(G, limits);
  return G;
}

}  // namespace centra
