#include <doctest.h>

#include "brute_force.hpp"
#include "charrank/errors.hpp"
#include "charrank/grassmannian.hpp"

using namespace charrank;

namespace {
Count binomial(std::size_t n, std::size_t k) {
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, k);
  return Count(v);
}
}  // namespace

TEST_CASE("betti examples") {
  CHECK(betti(2, 1, 0) == Count(1));
  CHECK(betti(2, 1, 1) == Count(1));
  CHECK(betti(2, 1, 2) == Count(0));
  CHECK(betti(4, 2, 2) == Count(brute::box(2, 2, 2)));
  CHECK(betti(5, 2, 7) == Count(0));
  CHECK(betti(3, 3, 0) == Count(1));
  CHECK_THROWS_AS(betti(2, 3, 0), InvalidDimensions);
  CHECK_THROWS_AS(poincare(2, 3), InvalidDimensions);
  CHECK_THROWS_AS(gaussian_binomial(2, 3), InvalidDimensions);
}

TEST_CASE("poincare examples") {
  const PoincareTable t = poincare(4, 2);
  CHECK(t.betti == std::vector<Count>{1, 1, 2, 1, 1});
  CHECK(t.total() == Count(6));
  CHECK(t.dimension() == 4);
  CHECK(poincare(7, 0).betti == std::vector<Count>{1});
  CHECK(poincare(7, 7).betti == std::vector<Count>{1});
  // RP^3 = G(4,1)
  CHECK(poincare(4, 1).betti == std::vector<Count>{1, 1, 1, 1});
}

TEST_CASE("gaussian binomial examples") {
  CHECK(gaussian_binomial(5, 5) == std::vector<Count>{1});
  CHECK(gaussian_binomial(5, 0) == std::vector<Count>{1});
  CHECK(gaussian_binomial(4, 2) == std::vector<Count>{1, 1, 2, 1, 1});
  CHECK(gaussian_binomial(6, 3) == poincare(6, 3).betti);
}

TEST_CASE("tables: oracle equality, palindromes, cell totals, duality") {
  for (std::size_t n = 0; n <= 24; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      CAPTURE(n); CAPTURE(k);
      const PoincareTable t = poincare(n, k);
      REQUIRE(t.betti.size() == t.dimension() + 1);
      REQUIRE(t.betti.front() == Count(1));
      REQUIRE(t.palindromic());
      REQUIRE(t.total() == binomial(n, k));
      REQUIRE(t.betti == gaussian_binomial(n, k));
      if (n <= 16) REQUIRE(t.betti == poincare(n, n - k).betti);
    }
}

TEST_CASE("betti matches the table for every degree") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const PoincareTable t = poincare(n, k);
      for (std::size_t c = 0; c < t.betti.size() + 2; ++c) {
        const Count expected = c < t.betti.size() ? t.betti[c] : Count(0);
        REQUIRE(betti(n, k, c) == expected);
      }
    }
}
