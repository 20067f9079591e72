#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "charrank/count.hpp"
#include "charrank/partition.hpp"

namespace charrank {

/// A nonnegative integer or "unbounded" (written `inf`).
class Extent {
 public:
  static Extent unbounded() { return Extent{}; }
  static Extent finite(std::size_t value) { return Extent{value}; }
  /// Accepts a decimal integer or "inf"; std::nullopt otherwise.
  static std::optional<Extent> parse(std::string_view text);

  [[nodiscard]] bool is_unbounded() const { return !value_.has_value(); }
  [[nodiscard]] std::size_t value() const { return *value_; }
  [[nodiscard]] bool admits(std::size_t x) const { return is_unbounded() || x <= *value_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Extent&, const Extent&) = default;

 private:
  Extent() = default;
  explicit Extent(std::size_t value) : value_(value) {}
  std::optional<std::size_t> value_;
};

/// Everything the Betti bound consumes about a space X with a bundle over it:
/// the mod-2 dimension of X, the degrees S in which Stiefel-Whitney classes
/// may be nonzero, and a lower bound t on the characteristic rank.
class BundleProfile {
 public:
  /// Throws PreconditionViolation when t == 0, or when dim_x is finite and
  /// smaller than max(S) or t.
  BundleProfile(Extent dim_x, PartsSet s_set, Extent charrank_at_least);

  [[nodiscard]] const Extent& dim_x() const { return dim_x_; }
  [[nodiscard]] const PartsSet& s_set() const { return s_set_; }
  [[nodiscard]] const Extent& charrank_at_least() const { return t_; }

 private:
  Extent dim_x_;
  PartsSet s_set_;
  Extent t_;
};

/// Upper bound on b_j(X): the number of partitions of j into at most
/// floor(j/nu) parts from {x in S : x <= min(j, kappa)}.
/// Throws DegreeOutOfRange unless 1 <= j <= t.
Count betti_upper_bound(const BundleProfile& profile, std::size_t j);

/// The same bound as a sum of Grassmannian Betti numbers,
///   sum over ceil(j/mu) <= s <= floor(j/nu) of b_{j - nu*s}(G(mu - nu + s, s)),
/// valid when the truncated set is a run of consecutive integers. mu is taken
/// as the largest member of the truncated set. Throws NotGapless or
/// DegreeOutOfRange.
Count betti_upper_bound_gapless(const BundleProfile& profile, std::size_t j);

/// Degree-j monomials in free generators whose degrees are the members of S.
Count monomial_count(const PartsSet& s_set, std::size_t j);

}  // namespace charrank
