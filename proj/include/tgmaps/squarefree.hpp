#pragma once

#include <cstdint>
#include <optional>

namespace tgmaps {

// True iff no prime square divides |n|. Trial division up to |n|^(1/3) plus
// a perfect-square test on the cofactor; gated to |n| <= 2^60.
bool is_squarefree(std::int64_t n);

struct SquareWitness {
  std::uint64_t d{0};
  std::optional<std::uint64_t> x;  // smallest x >= 2 with x^2 | 2^d - 1
};

// Scans x = 2..x_max for 2^d = 1 (mod x^2) by modular exponentiation; 2^d - 1
// is never materialized. d and x_max are gated to 10^6.
SquareWitness square_divisor_scan(std::uint64_t d, std::uint64_t x_max);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace tgmaps
