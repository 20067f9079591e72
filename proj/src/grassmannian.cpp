#include "charrank/grassmannian.hpp"

#include <algorithm>
#include <string>

#include "charrank/errors.hpp"
#include "charrank/partitions.hpp"

namespace charrank {
namespace {

void check_dimensions(std::size_t n, std::size_t k) {
  if (k > n) {
    throw InvalidDimensions("G(" + std::to_string(n) + "," + std::to_string(k) +
                            ") needs k <= n");
  }
}

using Poly = std::vector<mpz_class>;  // coefficient i multiplies q^i

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p *= (1 - q^e)
void times_one_minus(Poly& p, std::size_t e) {
  const std::size_t old = p.size();
  p.resize(old + e);
  for (std::size_t i = old; i-- > 0;) p[i + e] -= p[i];
  trim(p);
}

Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    if (!num.empty()) throw Error("q-binomial division left a remainder");
    return {};
  }
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const mpz_class& top = num[i + dd];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), den[dd].get_mpz_t()) == 0) {
      throw Error("q-binomial division is not exact over the integers");
    }
    quot[i] = top / den[dd];
    for (std::size_t t = 0; t <= dd; ++t) num[i + t] -= quot[i] * den[t];
  }
  trim(num);
  if (!num.empty()) throw Error("q-binomial division left a remainder");
  return quot;
}

}  // namespace

Count PoincareTable::total() const {
  Count sum;
  for (const auto& b : betti) sum += b;
  return sum;
}

bool PoincareTable::palindromic() const { return std::equal(betti.begin(), betti.end(), betti.rbegin()); }

Count betti(std::size_t n, std::size_t k, std::size_t c) {
  check_dimensions(n, k);
  return count_box(n - k, k, c);
}

PoincareTable poincare(std::size_t n, std::size_t k) {
  check_dimensions(n, k);
  return PoincareTable{n, k, box_row(n - k, k)};
}

std::vector<Count> gaussian_binomial(std::size_t n, std::size_t k) {
  check_dimensions(n, k);
  Poly num{1};
  Poly den{1};
  for (std::size_t i = 1; i <= k; ++i) {
    times_one_minus(num, n - k + i);
    times_one_minus(den, i);
  }
  const Poly quot = divide_exact(std::move(num), den);
  std::vector<Count> out;
  out.reserve(quot.size());
  for (const auto& coeff : quot) out.emplace_back(coeff);
  return out;
}

}  // namespace charrank
