#include "tgmaps/squarefree.hpp"

#include <cmath>

#include "tgmaps/errors.hpp"

namespace tgmaps {

namespace {

bool perfect_square(std::uint64_t m) {
  if (m == 0) return true;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  for (std::uint64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == m) return true;
  return false;
}

}  // namespace

bool is_squarefree(std::int64_t n) {
  if (n == 0) throw parameter_error("square-free test is undefined for zero");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  if (m > (std::uint64_t{1} << 60))
    throw scale_error("square-free test is gated to |n| <= 2^60");
  if (m % 2 == 0) {
    m /= 2;
    if (m % 2 == 0) return false;
  }
  for (std::uint64_t p = 3; p * p * p <= m; p += 2) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  // Remaining cofactor is 1, p, p^2 or pq with primes above the cube root.
  return m == 1 || !perfect_square(m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw parameter_error("modulus must be positive");
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

SquareWitness square_divisor_scan(std::uint64_t d, std::uint64_t x_max) {
  constexpr std::uint64_t kGate = 1'000'000;
  if (d == 0 || d > kGate)
    throw parameter_error("d must lie in [1, 10^6]");
  if (x_max > kGate) throw parameter_error("x_max must be at most 10^6");
  SquareWitness w{d, std::nullopt};
  // 2^d - 1 is odd, so even x never divides it.
  for (std::uint64_t x = 3; x <= x_max; x += 2) {
    if (mod_pow(2, d, x * x) == 1) {
      w.x = x;
      return w;
    }
  }
  return w;
}

}  // namespace tgmaps
