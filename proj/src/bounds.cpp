#include "charrank/bounds.hpp"

#include <algorithm>
#include <charconv>

#include "charrank/errors.hpp"
#include "charrank/grassmannian.hpp"
#include "charrank/partitions.hpp"

namespace charrank {

std::optional<Extent> Extent::parse(std::string_view text) {
  if (text == "inf") return unbounded();
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return finite(value);
}

std::string Extent::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

BundleProfile::BundleProfile(Extent dim_x, PartsSet s_set, Extent charrank_at_least)
    : dim_x_(dim_x), s_set_(std::move(s_set)), t_(charrank_at_least) {
  if (!t_.is_unbounded() && t_.value() == 0) {
    throw PreconditionViolation("charrank lower bound t must be positive");
  }
  if (!dim_x_.is_unbounded()) {
    if (s_set_.kappa() > dim_x_.value()) {
      throw PreconditionViolation("max(S) = " + std::to_string(s_set_.kappa()) +
                                  " exceeds dim X = " + dim_x_.to_string());
    }
    if (t_.is_unbounded() || t_.value() > dim_x_.value()) {
      throw PreconditionViolation("t = " + t_.to_string() + " exceeds dim X = " +
                                  dim_x_.to_string());
    }
  }
}

namespace {

void check_degree(const BundleProfile& profile, std::size_t j) {
  if (j == 0 || !profile.charrank_at_least().admits(j)) {
    throw DegreeOutOfRange("degree " + std::to_string(j) + " is outside 1..t = " +
                           profile.charrank_at_least().to_string());
  }
}

}  // namespace

Count betti_upper_bound(const BundleProfile& profile, std::size_t j) {
  check_degree(profile, j);
  const PartsSet& s = profile.s_set();
  const std::size_t mu = std::min(j, s.kappa());
  const auto admissible = s.truncated(mu);
  if (admissible.empty()) return 0;
  const PartsSet parts(admissible);
  // Summands s = 1..floor(j/nu) cover every part count a partition of j can
  // have when all parts are >= nu.
  Count bound;
  for (std::size_t count = 1; count <= j / s.nu(); ++count) bound += count_set_exact(parts, count, j);
  return bound;
}

Count betti_upper_bound_gapless(const BundleProfile& profile, std::size_t j) {
  check_degree(profile, j);
  const PartsSet& s = profile.s_set();
  const auto admissible = s.truncated(std::min(j, s.kappa()));
  if (admissible.empty()) return 0;
  const std::size_t nu = admissible.front();
  const std::size_t mu = admissible.back();
  if (mu - nu + 1 != admissible.size()) {
    throw NotGapless("truncated set " + PartsSet(admissible).to_string() + " has gaps");
  }
  Count bound;
  for (std::size_t count = (j + mu - 1) / mu; count <= j / nu; ++count) {
    bound += betti(mu - nu + count, count, j - nu * count);
  }
  return bound;
}

Count monomial_count(const PartsSet& s_set, std::size_t j) {
  const auto admissible = s_set.truncated(j);
  if (admissible.empty()) return j == 0 ? 1 : 0;
  return count_set_any(PartsSet(admissible), j);
}

}  // namespace charrank
