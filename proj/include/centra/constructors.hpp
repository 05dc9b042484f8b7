#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centra/group.hpp"
#include "centra/permutation.hpp"
#include "centra/util.hpp"

namespace centra {

enum class Family { cyclic, dihedral, symmetric, alternating, quaternion, elementary_abelian };

/// Names one of the built-in families. `parameter` is the group order for
/// cyclic, dihedral (D_{2m} has order 2m) and generalized quaternion /
/// dicyclic groups, the degree for symmetric and alternating groups, and the
/// prime power p^k for elementary abelian groups.
struct FamilySpec {
  Family family = Family::cyclic;
  std::size_t parameter = 1;
};

class UnknownGroupSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Prime-power lengths whose product is n; their disjoint union carries a
// faithful action of C_n (and of D_{2n} when n >= 3).
inline std::vector<std::size_t> prime_power_parts(std::size_t n) {
  std::vector<std::size_t> parts;
  for (auto [p, k] : factorize(n)) parts.push_back(ipow(p, k));
  return parts;
}

inline std::size_t factorial_or_zero(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return 0;
  }
  return f;
}

inline Permutation quaternion_regular(std::size_t order, std::size_t x_pow, std::size_t y_pow) {
  // Elements x^i y^j of the dicyclic group <x, y | x^{2m}, y^2 = x^m, x^y = x^-1>,
  // indexed j * 2m + i; each element acts on the right regular representation.
  const std::size_t m2 = order / 2;
  const std::size_t m = m2 / 2;
  auto mul = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    if (j == 0) return std::pair{(i + k) % m2, l};
    const std::size_t i2 = (i + m2 - k) % m2;
    if (l == 0) return std::pair{i2, std::size_t{1}};
    return std::pair{(i2 + m) % m2, std::size_t{0}};
  };
  std::vector<Point> images(order);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m2; ++i) {
      auto [a, b] = mul(i, j, x_pow, y_pow);
      images[j * m2 + i] = static_cast<Point>(b * m2 + a);
    }
  return Permutation(std::move(images));
}

}  // namespace detail

inline std::string family_name(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::cyclic: return "C" + std::to_string(spec.parameter);
    case Family::dihedral: return "D" + std::to_string(spec.parameter);
    case Family::symmetric: return "S" + std::to_string(spec.parameter);
    case Family::alternating: return "A" + std::to_string(spec.parameter);
    case Family::quaternion: return "Q" + std::to_string(spec.parameter);
    case Family::elementary_abelian: return "E" + std::to_string(spec.parameter);
  }
  return "?";
}

// Returns the group order a valid spec produces, throwing UnknownGroupSpec
// for parameters outside the family's range.
inline std::size_t family_order(const FamilySpec& spec) {
  const std::size_t k = spec.parameter;
  switch (spec.family) {
    case Family::cyclic:
      if (k < 1) throw UnknownGroupSpec("cyclic group order must be >= 1");
      return k;
    case Family::dihedral:
      if (k < 6 || k % 2) throw UnknownGroupSpec("dihedral order must be even and >= 6");
      return k;
    case Family::symmetric: {
      if (k < 1) throw UnknownGroupSpec("symmetric degree must be >= 1");
      const auto f = detail::factorial_or_zero(k, SIZE_MAX / 64);
      if (f == 0) throw UnknownGroupSpec("symmetric degree too large");
      return f;
    }
    case Family::alternating: {
      if (k < 1) throw UnknownGroupSpec("alternating degree must be >= 1");
      const auto f = detail::factorial_or_zero(k, SIZE_MAX / 64);
      if (f == 0) throw UnknownGroupSpec("alternating degree too large");
      return k < 2 ? 1 : f / 2;
    }
    case Family::quaternion:
      if (k < 8 || k % 4) throw UnknownGroupSpec("quaternion order must be a multiple of 4 and >= 8");
      return k;
    case Family::elementary_abelian: {
      const auto f = detail::factorize(k);
      if (f.size() != 1) throw UnknownGroupSpec("elementary abelian order must be a prime power");
      return k;
    }
  }
  throw UnknownGroupSpec("unknown family");
}

/// Builds a faithful permutation realization of a named family.
///
/// Cyclic and dihedral groups act on the disjoint union of the prime-power
/// parts of n (so C_12 acts on 4 + 3 points); Q_{4m} uses its regular
/// representation; S_n and A_n act naturally on n points.
inline FiniteGroup make_family(const FamilySpec& spec, GroupLimits limits = {}) {
  const std::size_t order = family_order(spec);
  if (order > limits.order_cap) throw OrderCapExceeded(family_name(spec), limits.order_cap);
  const std::size_t k = spec.parameter;
  std::vector<Permutation> gens;

  switch (spec.family) {
    case Family::cyclic: {
      if (k == 1) {
        gens.push_back(Permutation::identity(1));
        break;
      }
      const auto parts = detail::prime_power_parts(k);
      std::size_t degree = 0;
      for (auto q : parts) degree += q;
      std::vector<std::vector<Point>> cycles;
      Point offset = 0;
      for (auto q : parts) {
        std::vector<Point> c(q);
        for (std::size_t i = 0; i < q; ++i) c[i] = offset + static_cast<Point>(i);
        cycles.push_back(std::move(c));
        offset += static_cast<Point>(q);
      }
      gens.push_back(Permutation::from_cycles(degree, cycles));
      break;
    }
    case Family::dihedral: {
      const auto parts = detail::prime_power_parts(k / 2);
      std::size_t degree = 0;
      for (auto q : parts) degree += q;
      std::vector<Point> rot(degree), ref(degree);
      Point offset = 0;
      for (auto q : parts) {
        for (std::size_t i = 0; i < q; ++i) {
          rot[offset + i] = offset + static_cast<Point>((i + 1) % q);
          ref[offset + i] = offset + static_cast<Point>((q - i) % q);
        }
        offset += static_cast<Point>(q);
      }
      gens.emplace_back(std::move(rot));
      gens.emplace_back(std::move(ref));
      break;
    }
    case Family::symmetric: {
      if (k == 1) {
        gens.push_back(Permutation::identity(1));
        break;
      }
      gens.push_back(Permutation::from_cycles(k, {{0, 1}}));
      if (k > 2) {
        std::vector<Point> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Point>(i);
        gens.push_back(Permutation::from_cycles(k, {c}));
      }
      break;
    }
    case Family::alternating: {
      if (k < 3) {
        gens.push_back(Permutation::identity(k < 1 ? 1 : k));
        break;
      }
      if (k > 3) {
        std::vector<Point> c;
        for (std::size_t i = (k % 2 ? 0 : 1); i < k; ++i) c.push_back(static_cast<Point>(i));
        gens.push_back(Permutation::from_cycles(k, {c}));
      }
      gens.push_back(Permutation::from_cycles(k, {{0, 1, 2}}));
      break;
    }
    case Family::quaternion:
      gens.push_back(detail::quaternion_regular(k, 1, 0));
      gens.push_back(detail::quaternion_regular(k, 0, 1));
      break;
    case Family::elementary_abelian: {
      const auto [p, rank] = detail::factorize(k).front();
      const std::size_t degree = p * rank;
      for (unsigned r = 0; r < rank; ++r) {
        std::vector<Point> c(p);
        for (std::size_t i = 0; i < p; ++i) c[i] = static_cast<Point>(r * p + i);
        gens.push_back(Permutation::from_cycles(degree, {c}));
      }
      break;
    }
  }
  return enumerate_group(family_name(spec), std::move(gens), limits);
}

/// G x H acting on degree(G) + degree(H) points, G on the first block.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H, GroupLimits limits = {}) {
  const std::size_t dg = G.degree();
  const std::size_t dh = H.degree();
  if (G.order() * H.order() > limits.order_cap)
    throw OrderCapExceeded(G.name() + "x" + H.name(), limits.order_cap);
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> images(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) images[i] = g[i];
    for (std::size_t i = 0; i < dh; ++i) images[dg + i] = static_cast<Point>(dg + i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& h : H.generators()) {
    std::vector<Point> images(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < dh; ++i) images[dg + i] = static_cast<Point>(dg + h[i]);
    gens.emplace_back(std::move(images));
  }
  return enumerate_group(G.name() + "x" + H.name(), std::move(gens), limits);
}

/// Parses one factor of the group-spec mini-language: a family letter
/// (C, D, S, A, Q, E) followed by a decimal parameter.
inline FamilySpec parse_family(std::string_view token) {
  if (token.size() < 2) throw UnknownGroupSpec("malformed group factor '" + std::string(token) + "'");
  FamilySpec spec;
  switch (token[0]) {
    case 'C': spec.family = Family::cyclic; break;
    case 'D': spec.family = Family::dihedral; break;
    case 'S': spec.family = Family::symmetric; break;
    case 'A': spec.family = Family::alternating; break;
    case 'Q': spec.family = Family::quaternion; break;
    case 'E': spec.family = Family::elementary_abelian; break;
    default: throw UnknownGroupSpec("unknown family letter in '" + std::string(token) + "'");
  }
  std::size_t value = 0;
  for (char c : token.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw UnknownGroupSpec("malformed group factor '" + std::string(token) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1'000'000'000) throw UnknownGroupSpec("parameter too large in '" + std::string(token) + "'");
  }
  spec.parameter = value;
  family_order(spec);
  return spec;
}

inline std::vector<FamilySpec> parse_group_spec_factors(std::string_view text) {
  std::vector<FamilySpec> factors;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('x', start);
    factors.push_back(parse_family(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return factors;
}

/// Builds the group named by a spec string such as "A5", "D10" or "S3xS3".
inline FiniteGroup group_from_spec(std::string_view text, GroupLimits limits = {}) {
  const auto factors = parse_group_spec_factors(text);
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= family_order(f);
    if (order > limits.order_cap) throw OrderCapExceeded(std::string(text), limits.order_cap);
  }
  FiniteGroup G = make_family(factors.front(), limits);
  for (std::size_t i = 1; i < factors.size(); ++i) G = direct_product(G, make_family(factors[i], limits), limits);
  return G;
}

/// A lazily constructed corpus member.
struct CorpusEntry {
  std::string name;
  std::size_t order = 0;
  std::function<FiniteGroup(const GroupLimits&)> build;
};

inline std::size_t spec_order(std::string_view text) {
  std::size_t order = 1;
  for (const auto& f : parse_group_spec_factors(text)) order *= family_order(f);
  return order;
}

/// The built-in corpus, in a fixed order: C1..C_max, dihedral groups, S3..S7,
/// A4..A6, generalized quaternion groups up to order 32, elementary abelian
/// p^k (p in {2, 3, 5}, k >= 2), then a fixed list of direct products.
/// Members above max_order are omitted.
inline std::vector<CorpusEntry> builtin_corpus_entries(std::size_t max_order) {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= max_order; ++n) names.push_back("C" + std::to_string(n));
  for (std::size_t n = 6; n <= max_order; n += 2) names.push_back("D" + std::to_string(n));
  for (std::size_t n = 3; n <= 7; ++n) names.push_back("S" + std::to_string(n));
  for (std::size_t n = 4; n <= 6; ++n) names.push_back("A" + std::to_string(n));
  for (std::size_t n : {8, 16, 32}) names.push_back("Q" + std::to_string(n));
  for (std::size_t p : {2, 3, 5})
    for (std::size_t q = p * p; q <= max_order; q *= p) names.push_back("E" + std::to_string(q));
  for (const char* prod : {"S3xS3", "C2xS4", "S3xS3xC2", "A4xC2", "A4xC3", "A4xS3", "Q8xC2", "Q8xC3", "Q8xS3",
                           "D8xD8", "S3xD8", "S3xD10", "S4xS3", "A5xC2", "A5xS3", "D10xD10"})
    names.emplace_back(prod);
  for (std::size_t d = 6; d <= 24; d += 2)
    for (std::size_t c : {2, 3, 4}) names.push_back("D" + std::to_string(d) + "xC" + std::to_string(c));

  std::vector<CorpusEntry> out;
  for (auto& name : names) {
    const std::size_t order = spec_order(name);
    if (order > max_order) continue;
    out.push_back({name, order, [name](const GroupLimits& limits) { return group_from_spec(name, limits); }});
  }
  return out;
}

/// Materializes the built-in corpus. Intended for small max_order; the
/// census streams builtin_corpus_entries instead.
inline std::vector<FiniteGroup> builtin_corpus(std::size_t max_order, GroupLimits limits = {}) {
  std::vector<FiniteGroup> out;
  for (const auto& e : builtin_corpus_entries(max_order)) out.push_back(e.build(limits));
  return out;
}

}  // namespace centra
