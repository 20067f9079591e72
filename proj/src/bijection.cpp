#include "charrank/bijection.hpp"

#include <algorithm>
#include <set>

#include "charrank/errors.hpp"

namespace charrank {

Partition reduce(const Partition& p, std::size_t x, std::size_t nu, std::size_t mu) {
  if (p.size() != x) {
    throw PreconditionViolation("reduce: " + p.to_string() + " does not have " +
                                std::to_string(x) + " parts");
  }
  std::vector<std::size_t> shifted;
  for (std::size_t part : p.parts()) {
    if (part < nu || part > mu) {
      throw PreconditionViolation("reduce: part " + std::to_string(part) + " outside [" +
                                  std::to_string(nu) + "," + std::to_string(mu) + "]");
    }
    if (part > nu) shifted.push_back(part - nu);
  }
  return Partition(std::move(shifted));
}

Partition expand(const Partition& q, std::size_t x, std::size_t nu) {
  if (q.size() > x) {
    throw PreconditionViolation("expand: " + q.to_string() + " has more than " +
                                std::to_string(x) + " parts");
  }
  std::vector<std::size_t> parts(x, nu);
  std::transform(q.parts().begin(), q.parts().end(), parts.begin(),
                 [nu](std::size_t b) { return b + nu; });
  return Partition(std::move(parts));
}

BijectionReport verify_bijection(std::size_t nu, std::size_t mu, std::size_t j, std::size_t x,
                                 std::size_t cap) {
  if (nu == 0 || mu < nu || x == 0) {
    throw PreconditionViolation("verify_bijection needs 1 <= nu <= mu and x >= 1");
  }
  BijectionReport report{nu, mu, j, x, 0, 0, {}};

  const auto domain = enumerate_set_exact(PartsSet::range(nu, mu), x, j, cap);
  std::vector<Partition> codomain;
  if (j >= nu * x) codomain = enumerate_box(mu - nu, x, j - nu * x, cap);
  report.domain_size = domain.size();
  report.codomain_size = codomain.size();

  const std::set<Partition> codomain_set(codomain.begin(), codomain.end());
  const std::set<Partition> domain_set(domain.begin(), domain.end());
  auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

  for (const auto& p : domain) {
    const Partition image = reduce(p, x, nu, mu);
    if (!codomain_set.contains(image)) {
      fail("reduce" + p.to_string() + " = " + image.to_string() + " is not in the codomain");
    }
    if (image.weight() + nu * x != p.weight()) fail("reduce" + p.to_string() + " has wrong weight");
    if (const Partition back = expand(image, x, nu); back != p) {
      fail("expand(reduce" + p.to_string() + ") = " + back.to_string());
    }
  }
  for (const auto& q : codomain) {
    const Partition image = expand(q, x, nu);
    if (!domain_set.contains(image)) {
      fail("expand" + q.to_string() + " = " + image.to_string() + " is not in the domain");
    }
    if (const Partition back = reduce(image, x, nu, mu); back != q) {
      fail("reduce(expand" + q.to_string() + ") = " + back.to_string());
    }
  }
  if (report.domain_size != report.codomain_size) {
    fail("cardinalities differ: " + std::to_string(report.domain_size) + " vs " +
         std::to_string(report.codomain_size));
  }
  return report;
}

}  // namespace charrank
