#include "tgmaps/squarefree.hpp"

#include "doctest.h"
#include "tgmaps/errors.hpp"

using namespace tgmaps;

TEST_CASE("square-free basics") {
  CHECK(is_squarefree(-6));
  CHECK(!is_squarefree(63));  // 9 | 63
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(-1));
  CHECK(is_squarefree(2));
  CHECK(!is_squarefree(4));
  CHECK(!is_squarefree(-12));
  CHECK(!is_squarefree(25));
  CHECK(!is_squarefree(49 * 11));
  CHECK(is_squarefree(3 * 5 * 7 * 11));
  CHECK_THROWS_AS(is_squarefree(0), parameter_error);
  CHECK_THROWS_AS(is_squarefree((std::int64_t{1} << 60) + 2), scale_error);
  // large squarefree and non-squarefree cofactor shapes
  CHECK(!is_squarefree(std::int64_t{1000003} * 1000003));
  CHECK(is_squarefree(std::int64_t{1000003} * 1000033));
}

TEST_CASE("square-free agrees with full factorization below 10^5") {
  for (std::int64_t n = 1; n <= 100000; ++n) {
    bool want = true;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p)
      while (m % p == 0) {
        m /= p;
        if (m % p == 0) {
          want = false;
          break;
        }
      }
    CHECK(is_squarefree(n) == want);
    CHECK(is_squarefree(-n) == want);
  }
}

TEST_CASE("square witness scan") {
  CHECK(square_divisor_scan(6, 1000).x == 3);
  CHECK(square_divisor_scan(20, 1000).x == 5);
  CHECK(square_divisor_scan(21, 1000).x == 7);
  CHECK(square_divisor_scan(110, 1000).x == 11);
  CHECK(square_divisor_scan(136, 1000).x == 17);
  CHECK(!square_divisor_scan(7, 100000).x.has_value());
  CHECK(!square_divisor_scan(1, 1000).x.has_value());
  CHECK_THROWS_AS(square_divisor_scan(0, 10), parameter_error);
  CHECK_THROWS_AS(square_divisor_scan(2000000, 10), parameter_error);
  CHECK_THROWS_AS(square_divisor_scan(10, 2000000), parameter_error);
}

TEST_CASE("modular exponentiation") {
  CHECK(mod_pow(2, 10, 1000) == 24);
  CHECK(mod_pow(2, 0, 7) == 1);
  CHECK(mod_pow(3, 5, 1) == 0);
  CHECK(mod_pow(2, 110, 121) == 1);  // 11^2 | 2^110 - 1
  CHECK_THROWS_AS(mod_pow(2, 3, 0), parameter_error);
}
