#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace centra::detail {

inline std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// True iff k! >= value. The running product stops as soon as it reaches
// value, so it never exceeds value * k and cannot overflow for the sizes
// used here.
inline bool factorial_at_least(std::uint64_t k, std::uint64_t value) {
  std::uint64_t f = 1;
  if (f >= value) return true;
  for (std::uint64_t i = 2; i <= k; ++i) {
    f *= i;
    if (f >= value) return true;
  }
  return false;
}

}  // namespace centra::detail
