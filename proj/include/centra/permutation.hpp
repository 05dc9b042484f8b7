#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace centra {

using Point = std::uint32_t;

inline bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

/// A bijection of {0, ..., degree-1}; `images[i]` is the image of point i.
///
/// Products follow the "apply left, then right" convention: compose(p, q)
/// maps i to q[p[i]]. With this convention a group acts on points from the
/// right, and the conjugate a^b is b^-1 * a * b.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (!is_bijection(images_)) throw std::invalid_argument("permutation images are not a bijection");
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(unchecked, std::move(images));
  }

  // Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> touched(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point from = cycle[i];
        if (from >= degree) throw std::invalid_argument("cycle point out of range");
        if (touched[from]) throw std::invalid_argument("cycles are not disjoint");
        touched[from] = true;
        images[from] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(unchecked, std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // Least k >= 1 with p^k = identity: the lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  // Cycle notation without fixed points, "()" for the identity.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ' ';
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  static constexpr Unchecked unchecked{};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Point> images_;
};

/// Apply p, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q.images_[p.images_[i]];
  return Permutation(Permutation::unchecked, std::move(images));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p.images_[i]] = static_cast<Point>(i);
  return Permutation(Permutation::unchecked, std::move(images));
}

}  // namespace centra
