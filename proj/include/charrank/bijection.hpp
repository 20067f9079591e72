#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charrank/partition.hpp"
#include "charrank/partitions.hpp"

namespace charrank {

// The map between partitions of j into exactly x parts from {nu, ..., mu}
// and partitions of j - nu*x into at most x parts from {1, ..., mu - nu}:
// subtract nu from every part and drop the zeros; the inverse pads back to x
// parts with copies of nu.

/// Throws PreconditionViolation unless p has exactly x parts, all in [nu, mu].
Partition reduce(const Partition& p, std::size_t x, std::size_t nu, std::size_t mu);

/// Throws PreconditionViolation when q has more than x parts.
Partition expand(const Partition& q, std::size_t x, std::size_t nu);

struct BijectionReport {
  std::size_t nu = 0;
  std::size_t mu = 0;
  std::size_t j = 0;
  std::size_t x = 0;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty() && domain_size == codomain_size; }
};

/// Enumerates both sides and checks both round trips, that every image lands
/// in the stated codomain, and equal cardinality.
BijectionReport verify_bijection(std::size_t nu, std::size_t mu, std::size_t j, std::size_t x,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace charrank
