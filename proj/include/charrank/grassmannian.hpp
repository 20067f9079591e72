#pragma once

#include <cstddef>
#include <vector>

#include "charrank/count.hpp"

namespace charrank {

/// Mod-2 Betti numbers of the real Grassmannian G(n, k) of k-planes in R^n,
/// indexed by degree 0..k(n-k).
struct PoincareTable {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Count> betti;

  [[nodiscard]] std::size_t dimension() const { return k * (n - k); }
  [[nodiscard]] Count total() const;
  [[nodiscard]] bool palindromic() const;
};

/// b_c(G(n, k)): Schubert cells of dimension c, i.e. partitions of c fitting
/// in a k x (n-k) box. Throws InvalidDimensions when k > n.
Count betti(std::size_t n, std::size_t k, std::size_t c);

PoincareTable poincare(std::size_t n, std::size_t k);

/// Coefficients of the q-binomial [n choose k]_q, computed from the product
/// formula by exact polynomial multiplication and long division over the
/// integers. Does not touch the partition DP. Throws InvalidDimensions when
/// k > n.
std::vector<Count> gaussian_binomial(std::size_t n, std::size_t k);

}  // namespace charrank
