#include "charrank/identities.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <iterator>
#include <memory>
#include <thread>

#include "charrank/bijection.hpp"
#include "charrank/bounds.hpp"
#include "charrank/errors.hpp"
#include "charrank/grassmannian.hpp"
#include "charrank/partitions.hpp"

namespace charrank {
namespace {

constexpr std::pair<IdentityId, std::string_view> kNames[] = {
    {IdentityId::Eq3, "eq3"},
    {IdentityId::Eq4, "eq4"},
    {IdentityId::Eq5, "eq5"},
    {IdentityId::BijectionRoundTrip, "bijection"},
    {IdentityId::OracleEquivalence, "oracle"},
    {IdentityId::GrassmannianTables, "grassmann"},
    {IdentityId::Sharpness, "sharpness"},
    {IdentityId::PentagonalCrossCheck, "pentagonal"},
};

VerificationReport single(IdentityId id, ParamList params, Count lhs, Count rhs) {
  VerificationReport report{id, params, 1, {}};
  if (lhs != rhs) report.failures.push_back({std::move(params), std::move(lhs), std::move(rhs), {}});
  return report;
}

// Sides of the transport identities, each summed exactly as written.
Count restricted_exact_sum(std::size_t nu, std::size_t mu, std::size_t j) {
  const PartsSet parts = PartsSet::range(nu, mu);
  Count sum;
  for (std::size_t s = 1; s <= j / nu; ++s) sum += count_set_exact(parts, s, j);
  return sum;
}

Count shifted_box_sum(std::size_t nu, std::size_t mu, std::size_t j) {
  Count sum;
  for (std::size_t s = 1; s <= j / nu; ++s) sum += count_box(mu - nu, s, j - nu * s);
  return sum;
}

// sum_{s=first}^{j} b_{j-s}(G(k-1+s, s)), i.e. count_box(k - 1, s, j - s)
Count grassmann_tail_sum(std::size_t k, std::size_t first, std::size_t j) {
  Count sum;
  for (std::size_t s = first; s <= j; ++s) sum += count_box(k - 1, s, j - s);
  return sum;
}

using Check = std::function<std::vector<Failure>()>;

// Evaluates every check, possibly concurrently, and concatenates failures
// in grid order. The first exception in grid order is rethrown.
std::vector<Failure> run_checks(const std::vector<Check>& checks, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));

  std::vector<std::vector<Failure>> results(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < checks.size(); i += threads) {
      try {
        results[i] = checks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<Failure> failures;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    std::move(results[i].begin(), results[i].end(), std::back_inserter(failures));
  }
  return failures;
}

std::vector<Failure> as_failures(VerificationReport report) { return std::move(report.failures); }

void require_cap(std::size_t weight, std::size_t cap) {
  if (weight > cap) {
    throw CapExceeded("sweep needs enumerations of weight " + std::to_string(weight) +
                      " but the cap is " + std::to_string(cap));
  }
}

std::vector<Check> eq3_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  const std::size_t max_nu = r.max_nu ? r.max_nu : r.max_mu;
  for (std::size_t nu = 1; nu <= max_nu; ++nu)
    for (std::size_t mu = nu; mu <= r.max_mu; ++mu)
      for (std::size_t j = std::max(nu, r.min_j); j <= r.max_j; ++j)
        checks.emplace_back([=] { return as_failures(verify_eq3(nu, mu, j)); });
  return checks;
}

std::vector<Check> eq4_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  for (std::size_t j = std::max<std::size_t>(1, r.min_j); j <= r.max_j; ++j)
    checks.emplace_back([=] { return as_failures(verify_eq4(j)); });
  return checks;
}

std::vector<Check> eq5_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  for (std::size_t k = std::max<std::size_t>(1, r.min_k); k <= r.max_k; ++k)
    for (std::size_t j = std::max(k + 1, r.min_j); j <= r.max_j; ++j)
      checks.emplace_back([=] { return as_failures(verify_eq5(k, j)); });
  return checks;
}

std::vector<Check> bijection_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  const std::size_t max_nu = r.max_nu ? r.max_nu : r.max_mu;
  if (r.max_mu >= 1 && r.max_x >= 1 && r.min_j <= r.max_j) require_cap(r.max_j, r.cap);
  for (std::size_t nu = 1; nu <= max_nu; ++nu)
    for (std::size_t mu = nu; mu <= r.max_mu; ++mu)
      for (std::size_t x = 1; x <= r.max_x; ++x)
        for (std::size_t j = r.min_j; j <= r.max_j; ++j)
          checks.emplace_back([=, cap = r.cap] {
            const ParamList params{{"nu", nu}, {"mu", mu}, {"x", x}, {"j", j}};
            std::vector<Failure> out;
            const BijectionReport rep = verify_bijection(nu, mu, j, x, cap);
            if (!rep.passed()) {
              out.push_back({params, rep.domain_size, rep.codomain_size,
                             rep.failures.empty() ? "" : rep.failures.front()});
            }
            // Cardinality transport through the counting DPs.
            const Count lhs = count_set_exact(PartsSet::range(nu, mu), x, j);
            const Count rhs = j >= nu * x ? count_initial_segment_at_most(mu - nu, x, j - nu * x) : 0;
            if (lhs != rhs || lhs != Count(rep.domain_size)) {
              out.push_back({params, lhs, rhs, "count transport"});
            }
            return out;
          });
  return checks;
}

std::vector<Check> oracle_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  const std::size_t m = r.max_part;
  require_cap(m * m, r.cap);
  for (std::size_t a = 0; a <= m; ++a)
    for (std::size_t b = 0; b <= m; ++b)
      for (std::size_t c = 0; c <= a * b; ++c)
        checks.emplace_back([=, cap = r.cap] {
          std::vector<Failure> out;
          const Count dp = count_box(a, b, c);
          const Count listed = enumerate_box(a, b, c, cap).size();
          if (dp != listed) out.push_back({{{"a", a}, {"b", b}, {"c", c}}, dp, listed, "count_box"});
          return out;
        });
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t bit = 0; bit < m; ++bit)
      if (mask & (std::size_t{1} << bit)) members.push_back(bit + 1);
    const PartsSet parts(members);
    for (std::size_t b = 0; b <= m; ++b)
      for (std::size_t c = 0; c <= m * m; ++c)
        checks.emplace_back([=, cap = r.cap] {
          std::vector<Failure> out;
          const Count dp = count_set_exact(parts, b, c);
          const Count listed = enumerate_set_exact(parts, b, c, cap).size();
          if (dp != listed) {
            out.push_back({{{"set", mask}, {"b", b}, {"c", c}}, dp, listed,
                           "count_set_exact " + parts.to_string()});
          }
          return out;
        });
  }
  return checks;
}

std::vector<Check> grassmann_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  for (std::size_t n = 1; n <= r.max_n; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      checks.emplace_back([=] {
        std::vector<Failure> out;
        const ParamList params{{"n", n}, {"k", k}};
        const PoincareTable table = poincare(n, k);
        const auto oracle = gaussian_binomial(n, k);
        if (table.betti != oracle) {
          const std::size_t len = std::min(table.betti.size(), oracle.size());
          std::size_t at = 0;
          while (at < len && table.betti[at] == oracle[at]) ++at;
          const Count lhs = at < table.betti.size() ? table.betti[at] : Count{};
          const Count rhs = at < oracle.size() ? oracle[at] : Count{};
          out.push_back({params, lhs, rhs, "q-binomial mismatch at degree " + std::to_string(at)});
        }
        if (!table.palindromic()) out.push_back({params, 0, 0, "not palindromic"});
        mpz_class cells;
        mpz_bin_uiui(cells.get_mpz_t(), n, k);
        if (table.total() != Count(cells)) out.push_back({params, table.total(), Count(cells), "cell total"});
        if (table.betti.empty() || table.betti.front() != Count(1)) {
          out.push_back({params, 0, 1, "b_0 != 1"});
        }
        return out;
      });
  return checks;
}

std::vector<Check> sharpness_grid(const SweepRanges& r) {
  std::vector<Check> checks;
  for (std::size_t k = std::max<std::size_t>(1, r.min_k); k <= r.max_k; ++k)
    for (std::size_t j = std::max<std::size_t>(1, r.min_j); j <= r.max_j; ++j)
      checks.emplace_back([=] {
        std::vector<Failure> out;
        const ParamList params{{"k", k}, {"j", j}};
        const BundleProfile universal(Extent::unbounded(), PartsSet::range(1, k), Extent::unbounded());
        const Count bound = betti_upper_bound(universal, j);
        const Count expected = j <= k ? count_total(j) : grassmann_tail_sum(k, (j + k - 1) / k, j);
        if (bound != expected) out.push_back({params, bound, expected, "bound vs Grassmannian sum"});
        const Count monomials = monomial_count(PartsSet::range(1, k), j);
        if (bound != monomials) out.push_back({params, bound, monomials, "bound vs monomials"});
        const Count gapless = betti_upper_bound_gapless(universal, j);
        if (bound != gapless) out.push_back({params, bound, gapless, "general vs gapless form"});
        return out;
      });
  return checks;
}

std::vector<Check> pentagonal_grid(const SweepRanges& r) {
  auto reference = std::make_shared<const std::vector<Count>>(pentagonal_partition_numbers(r.max_c));
  std::vector<Check> checks;
  for (std::size_t c = 0; c <= r.max_c; ++c)
    checks.emplace_back([=] {
      std::vector<Failure> out;
      const Count dp = count_total(c);
      if (dp != (*reference)[c]) out.push_back({{{"c", c}}, dp, (*reference)[c], "p(c)"});
      return out;
    });
  return checks;
}

ParamList describe(IdentityId id, const SweepRanges& r) {
  const std::size_t max_nu = r.max_nu ? r.max_nu : r.max_mu;
  switch (id) {
    case IdentityId::Eq3: return {{"max_nu", max_nu}, {"max_mu", r.max_mu}, {"min_j", r.min_j}, {"max_j", r.max_j}};
    case IdentityId::Eq4: return {{"min_j", r.min_j}, {"max_j", r.max_j}};
    case IdentityId::Eq5: return {{"min_k", r.min_k}, {"max_k", r.max_k}, {"max_j", r.max_j}};
    case IdentityId::BijectionRoundTrip:
      return {{"max_nu", max_nu}, {"max_mu", r.max_mu}, {"max_x", r.max_x}, {"min_j", r.min_j}, {"max_j", r.max_j}};
    case IdentityId::OracleEquivalence: return {{"max_part", r.max_part}};
    case IdentityId::GrassmannianTables: return {{"max_n", r.max_n}};
    case IdentityId::Sharpness: return {{"min_k", r.min_k}, {"max_k", r.max_k}, {"min_j", r.min_j}, {"max_j", r.max_j}};
    case IdentityId::PentagonalCrossCheck: return {{"max_c", r.max_c}};
  }
  return {};
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& [key, name] : kNames)
    if (key == id) return name;
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& [key, text] : kNames)
    if (text == name) return key;
  return std::nullopt;
}

SweepRanges default_ranges(IdentityId id) {
  SweepRanges r;
  switch (id) {
    case IdentityId::Eq3: r.max_mu = 10; r.min_j = 1; r.max_j = 30; break;
    case IdentityId::Eq4: r.min_j = 1; r.max_j = 30; break;
    case IdentityId::Eq5: r.min_k = 1; r.max_k = 8; r.max_j = 30; break;
    case IdentityId::BijectionRoundTrip: r.max_mu = 8; r.max_x = 8; r.min_j = 0; r.max_j = 32; break;
    case IdentityId::OracleEquivalence: r.max_part = 6; break;
    case IdentityId::GrassmannianTables: r.max_n = 24; break;
    case IdentityId::Sharpness: r.min_k = 1; r.max_k = 8; r.min_j = 1; r.max_j = 30; break;
    case IdentityId::PentagonalCrossCheck: r.max_c = 200; break;
  }
  return r;
}

VerificationReport verify_eq3(std::size_t nu, std::size_t mu, std::size_t j) {
  if (nu == 0 || mu < nu || j == 0) throw PreconditionViolation("eq3 needs 1 <= nu <= mu and j >= 1");
  return single(IdentityId::Eq3, {{"nu", nu}, {"mu", mu}, {"j", j}}, restricted_exact_sum(nu, mu, j),
                shifted_box_sum(nu, mu, j));
}

VerificationReport verify_eq4(std::size_t j) {
  if (j == 0) throw PreconditionViolation("eq4 needs j >= 1");
  return single(IdentityId::Eq4, {{"j", j}}, count_total(j), grassmann_tail_sum(j, 1, j));
}

VerificationReport verify_eq5(std::size_t k, std::size_t j) {
  if (k == 0 || j <= k) throw PreconditionViolation("eq5 needs k >= 1 and j > k");
  const PartsSet parts = PartsSet::range(1, k);
  Count lhs;
  for (std::size_t s = 1; s <= j; ++s) lhs += count_set_exact(parts, s, j);
  const ParamList params{{"k", k}, {"j", j}};
  VerificationReport report = single(IdentityId::Eq5, params, lhs, grassmann_tail_sum(k, (j + k - 1) / k, j));
  if (const Count any = count_set_any(parts, j); any != lhs) {
    report.failures.push_back({params, lhs, any, "exact-part sum vs unrestricted count"});
  }
  return report;
}

std::vector<Count> pentagonal_partition_numbers(std::size_t max_c) {
  std::vector<mpz_class> p(max_c + 1, 0);
  p[0] = 1;
  for (std::size_t n = 1; n <= max_c; ++n) {
    mpz_class sum = 0;
    // Generalized pentagonal numbers m(3m - 1)/2 and m(3m + 1)/2, sign (-1)^(m+1).
    for (std::size_t m = 1;; ++m) {
      const std::size_t g1 = m * (3 * m - 1) / 2;
      if (g1 > n) break;
      const bool plus = m % 2 == 1;
      const std::size_t g2 = g1 + m;
      if (plus) {
        sum += p[n - g1];
        if (g2 <= n) sum += p[n - g2];
      } else {
        sum -= p[n - g1];
        if (g2 <= n) sum -= p[n - g2];
      }
    }
    p[n] = sum;
  }
  std::vector<Count> out;
  out.reserve(p.size());
  for (auto& v : p) out.emplace_back(std::move(v));
  return out;
}

VerificationReport verify_sweep(IdentityId id, const SweepRanges& ranges, unsigned threads) {
  std::vector<Check> checks;
  switch (id) {
    case IdentityId::Eq3: checks = eq3_grid(ranges); break;
    case IdentityId::Eq4: checks = eq4_grid(ranges); break;
    case IdentityId::Eq5: checks = eq5_grid(ranges); break;
    case IdentityId::BijectionRoundTrip: checks = bijection_grid(ranges); break;
    case IdentityId::OracleEquivalence: checks = oracle_grid(ranges); break;
    case IdentityId::GrassmannianTables: checks = grassmann_grid(ranges); break;
    case IdentityId::Sharpness: checks = sharpness_grid(ranges); break;
    case IdentityId::PentagonalCrossCheck: checks = pentagonal_grid(ranges); break;
  }
  if (checks.empty()) {
    throw PreconditionViolation("empty grid for " + std::string(identity_name(id)));
  }
  VerificationReport report{id, describe(id, ranges), checks.size(), {}};
  report.failures = run_checks(checks, threads);
  return report;
}

std::vector<VerificationReport> verify_all(unsigned threads) {
  std::vector<VerificationReport> reports;
  for (const auto& [id, name] : kNames) reports.push_back(verify_sweep(id, default_ranges(id), threads));
  return reports;
}

}  // namespace charrank
