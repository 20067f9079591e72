// Acceptance suite: one line per criterion, exit status nonzero if any fails.
// Usage: charrank_acceptance <path-to-charrank-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "charrank/bounds.hpp"
#include "charrank/identities.hpp"
#include "charrank/partitions.hpp"

using namespace charrank;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string summary(const VerificationReport& r) {
  return "checked " + std::to_string(r.checked) + ", failures " + std::to_string(r.failures.size());
}

Outcome sweep(IdentityId id, double seconds_budget = 0) {
  const auto start = std::chrono::steady_clock::now();
  const auto report = verify_sweep(id, default_ranges(id));
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = report.passed();
  std::string detail = summary(report) + ", " + std::to_string(elapsed) + " s";
  if (seconds_budget > 0) {
    pass = pass && elapsed < seconds_budget;
    detail += " (budget " + std::to_string(static_cast<int>(seconds_budget)) + " s)";
  }
  return {pass, detail};
}

int exit_status(const std::string& command) {
  const int raw = std::system((command + " > /dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <charrank executable>\n";
    return 2;
  }
  const std::string cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 restricted-partition transport, 1<=nu<=mu<=10, nu<=j<=30, under 60 s",
       [] { return sweep(IdentityId::Eq3, 60.0); }},
      {"2 p(j) as a Grassmannian sum, 1<=j<=30, anchor j=3",
       [] {
         auto out = sweep(IdentityId::Eq4);
         const bool anchor = count_total(3) == Count(3) && count_box(2, 1, 2) == Count(1) &&
                             count_box(2, 2, 1) == Count(1) && count_box(2, 3, 0) == Count(1);
         out.pass = out.pass && anchor;
         out.detail += anchor ? ", anchor 3 = 1+1+1" : ", anchor FAILED";
         return out;
       }},
      {"3 parts <= k as a Grassmannian sum, 1<=k<=8, k<j<=30", [] { return sweep(IdentityId::Eq5); }},
      {"4 bijection round trips and cardinality transport, nu<=mu<=8, x<=8, j<=32",
       [] { return sweep(IdentityId::BijectionRoundTrip); }},
      {"5 DP counts equal enumeration sizes, a,b<=6, A within {1..6}, c<=36",
       [] { return sweep(IdentityId::OracleEquivalence); }},
      {"6 Poincare tables vs q-binomial, palindromic, sum binomial(n,k), n<=24",
       [] { return sweep(IdentityId::GrassmannianTables); }},
      {"7 bound attained for S={1..k}, k<=8, j<=30", [] { return sweep(IdentityId::Sharpness); }},
      {"8 p(c) vs pentagonal recurrence, c<=200, under 5 s",
       [] { return sweep(IdentityId::PentagonalCrossCheck, 5.0); }},
      {"9 CLI: verify all exits 0, each injected DP fault exits 1",
       [&cli] {
         const int clean = exit_status(cli + " verify all");
         std::string detail = "clean=" + std::to_string(clean);
         bool pass = clean == 0;
         for (const char* fault : {"box-recurrence", "set-exact-transition", "set-any-transition"}) {
           const int code = exit_status(cli + " verify all --inject-fault " + fault);
           detail += std::string(", ") + fault + "=" + std::to_string(code);
           pass = pass && code == 1;
         }
         return Outcome{pass, detail};
       }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome out;
    try {
      out = check();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << name << "  [" << out.detail << "]\n";
    failed += out.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
