#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charrank/count.hpp"

namespace charrank {

enum class IdentityId {
  Eq3,                 // restricted-partition transport
  Eq4,                 // b_j(G_inf,k) = p(j) as a Grassmannian sum, j <= k
  Eq5,                 // the j > k counterpart
  BijectionRoundTrip,
  OracleEquivalence,   // DP counts vs explicit enumeration
  GrassmannianTables,  // Poincare tables vs q-binomial oracle
  Sharpness,           // bound attained for S = {1..k}
  PentagonalCrossCheck,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Named integer parameters in a fixed order.
using ParamList = std::vector<std::pair<std::string, std::size_t>>;

struct Failure {
  ParamList params;
  Count lhs;
  Count rhs;
  std::string note;
};

struct VerificationReport {
  IdentityId identity = IdentityId::Eq3;
  ParamList swept_ranges;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  [[nodiscard]] bool passed() const { return failures.empty() && checked > 0; }
};

/// Grid bounds for a sweep. Only the fields an identity uses are read; see
/// default_ranges() for which.
struct SweepRanges {
  std::size_t max_nu = 0;  // 0: same as max_mu
  std::size_t max_mu = 10;
  std::size_t min_j = 1;
  std::size_t max_j = 30;
  std::size_t min_k = 1;
  std::size_t max_k = 8;
  std::size_t max_x = 8;
  std::size_t max_part = 6;  // oracle equivalence: a, b <= max_part, A within {1..max_part}
  std::size_t max_n = 24;
  std::size_t max_c = 200;
  std::size_t cap = 64;
};

/// The desk-scale grid each identity is accepted on.
SweepRanges default_ranges(IdentityId id);

/// Single-instance checks; `checked` is 1.
VerificationReport verify_eq3(std::size_t nu, std::size_t mu, std::size_t j);
VerificationReport verify_eq4(std::size_t j);
/// Throws PreconditionViolation unless k >= 1 and j > k.
VerificationReport verify_eq5(std::size_t k, std::size_t j);

/// Euler's pentagonal-number recurrence for p(0..max_c), in signed exact
/// arithmetic. Shares nothing with the partition DPs.
std::vector<Count> pentagonal_partition_numbers(std::size_t max_c);

/// Runs one identity over its full grid. report.checked equals the number of
/// grid points. Throws PreconditionViolation on an empty grid and CapExceeded
/// when an enumeration would exceed ranges.cap. Grid points are evaluated
/// concurrently; the report is identical for any thread count.
VerificationReport verify_sweep(IdentityId id, const SweepRanges& ranges,
                                unsigned threads = 0);

/// Every identity on its default grid, in IdentityId order.
std::vector<VerificationReport> verify_all(unsigned threads = 0);

}  // namespace charrank
