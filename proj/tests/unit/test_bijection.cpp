#include <doctest.h>

#include "charrank/bijection.hpp"
#include "charrank/errors.hpp"

using namespace charrank;

TEST_CASE("reduce examples") {
  CHECK(reduce({4, 2, 2}, 3, 2, 4) == Partition{2});
  CHECK(reduce({5, 5, 5, 5}, 4, 5, 9) == Partition{});
  CHECK(reduce({3, 2}, 2, 2, 3) == Partition{1});
  CHECK_THROWS_AS(reduce({4, 2}, 3, 2, 4), PreconditionViolation);
  CHECK_THROWS_AS(reduce({5, 2, 2}, 3, 2, 4), PreconditionViolation);
  CHECK_THROWS_AS(reduce({4, 2, 1}, 3, 2, 4), PreconditionViolation);
}

TEST_CASE("expand examples") {
  CHECK(expand({2}, 3, 2) == Partition{4, 2, 2});
  CHECK(expand({}, 3, 5) == Partition{5, 5, 5});
  CHECK(expand({1}, 2, 2) == Partition{3, 2});
  CHECK_THROWS_AS(expand({1, 1, 1}, 2, 2), PreconditionViolation);
}

TEST_CASE("verify_bijection examples") {
  const auto r = verify_bijection(2, 4, 8, 3);
  CHECK(r.passed());
  CHECK(r.domain_size == 2);
  CHECK(r.codomain_size == 2);

  const auto single = verify_bijection(3, 7, 12, 4);
  CHECK(single.passed());
  CHECK(single.domain_size == 1);
  CHECK(single.codomain_size == 1);

  const auto empty = verify_bijection(2, 3, 3, 2);
  CHECK(empty.passed());
  CHECK(empty.domain_size == 0);
  CHECK(empty.codomain_size == 0);

  CHECK_THROWS_AS(verify_bijection(0, 3, 3, 2), PreconditionViolation);
  CHECK_THROWS_AS(verify_bijection(3, 2, 3, 2), PreconditionViolation);
  CHECK_THROWS_AS(verify_bijection(1, 2, 3, 0), PreconditionViolation);
  CHECK_THROWS_AS(verify_bijection(1, 2, 70, 2), CapExceeded);
}

TEST_CASE("round trips, weight bookkeeping and cardinality transport") {
  for (std::size_t nu = 1; nu <= 8; ++nu)
    for (std::size_t mu = nu; mu <= 8; ++mu)
      for (std::size_t x = 1; x <= 8; ++x)
        for (std::size_t j = 0; j <= 32; ++j) {
          CAPTURE(nu); CAPTURE(mu); CAPTURE(x); CAPTURE(j);
          const PartsSet range = PartsSet::range(nu, mu);
          for (const auto& p : enumerate_set_exact(range, x, j)) {
            const Partition q = reduce(p, x, nu, mu);
            REQUIRE(q.weight() + nu * x == p.weight());
            REQUIRE(q.size() <= x);
            REQUIRE(q.largest() <= mu - nu);
            REQUIRE(expand(q, x, nu) == p);
          }
          if (j >= nu * x) {
            for (const auto& q : enumerate_box(mu - nu, x, j - nu * x)) {
              REQUIRE(reduce(expand(q, x, nu), x, nu, mu) == q);
            }
          }
          const Count lhs = count_set_exact(range, x, j);
          const Count rhs = j >= nu * x ? count_initial_segment_at_most(mu - nu, x, j - nu * x) : Count(0);
          REQUIRE(lhs == rhs);
        }
}

TEST_CASE("nu == mu: the all-nu partition maps to the empty partition") {
  for (std::size_t nu = 1; nu <= 5; ++nu)
    for (std::size_t x = 1; x <= 5; ++x)
      for (std::size_t j = 0; j <= 30; ++j) {
        const auto r = verify_bijection(nu, nu, j, x);
        REQUIRE(r.passed());
        REQUIRE(r.domain_size == (j == nu * x ? 1u : 0u));
      }
}
