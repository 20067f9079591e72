#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "charrank/bounds.hpp"
#include "charrank/errors.hpp"
#include "charrank/fault_injection.hpp"
#include "charrank/grassmannian.hpp"
#include "charrank/identities.hpp"
#include "charrank/kernels/limb_kernels.hpp"
#include "charrank/partitions.hpp"
#include "output.hpp"

namespace charrank::cli {
namespace {

// Bad input that is caught before reaching the library.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PartsSet parse_parts(const std::string& text) {
  std::vector<std::size_t> members;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw UsageError("--parts/--set expects comma-separated positive integers, got '" + text + "'");
    }
    if (!members.empty() && value <= members.back()) {
      throw UsageError("--parts/--set must be strictly ascending, got '" + text + "'");
    }
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return PartsSet(std::move(members));
}

Extent parse_extent(const std::string& text, const char* flag) {
  if (auto e = Extent::parse(text)) return *e;
  throw UsageError(std::string(flag) + " expects a nonnegative integer or 'inf', got '" + text + "'");
}

OutputRecord single_value(std::string command, std::vector<std::pair<std::string, std::string>> params,
                          const Count& value) {
  OutputRecord r;
  r.command = std::move(command);
  r.params = std::move(params);
  const std::string v = value.to_string();
  r.results["value"] = v;
  for (const auto& [key, _] : r.params) r.columns.push_back(key);
  r.columns.emplace_back("value");
  r.rows.emplace_back();
  for (const auto& [_, p] : r.params) r.rows.back().push_back(p);
  r.rows.back().push_back(v);
  r.text_lines.push_back(v);
  return r;
}

std::string to_text(const ParamList& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

nlohmann::ordered_json to_json(const ParamList& params) {
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) obj[key] = std::to_string(value);
  return obj;
}

OutputRecord verification_record(const std::string& identity, const std::vector<VerificationReport>& reports) {
  OutputRecord r;
  r.command = "verify";
  r.params = {{"identity", identity}};
  r.results = nlohmann::ordered_json::array();
  r.columns = {"identity", "kind", "checked", "params", "lhs", "rhs", "note"};
  bool all_pass = true;
  for (const auto& rep : reports) {
    const std::string name(identity_name(rep.identity));
    const std::string status = rep.passed() ? "pass" : "fail";
    all_pass = all_pass && rep.passed();

    nlohmann::ordered_json entry;
    entry["identity"] = name;
    entry["ranges"] = to_json(rep.swept_ranges);
    entry["checked"] = std::to_string(rep.checked);
    entry["status"] = status;
    entry["failures"] = nlohmann::ordered_json::array();

    r.rows.push_back({name, status, std::to_string(rep.checked), to_text(rep.swept_ranges), "", "", ""});
    r.text_lines.push_back(name + ": " + status + " (checked " + std::to_string(rep.checked) + ", " +
                           to_text(rep.swept_ranges) + ")");
    for (const auto& f : rep.failures) {
      entry["failures"].push_back({{"params", to_json(f.params)},
                                   {"lhs", f.lhs.to_string()},
                                   {"rhs", f.rhs.to_string()},
                                   {"note", f.note}});
      r.rows.push_back({name, "failure", "", to_text(f.params), f.lhs.to_string(), f.rhs.to_string(), f.note});
      r.text_lines.push_back("  FAIL " + to_text(f.params) + ": " + f.lhs.to_string() +
                             " != " + f.rhs.to_string() + (f.note.empty() ? "" : " (" + f.note + ")"));
    }
    r.results.push_back(std::move(entry));
  }
  r.status = all_pass ? "pass" : "fail";
  return r;
}

struct VerifyFlags {
  std::string identity;
  std::optional<std::size_t> max_nu, max_mu, min_j, max_j, k, min_k, max_k, max_x, max_part, max_n,
      max_c, cap;
  unsigned threads = 0;
  std::string fault = "none";

  SweepRanges ranges_for(IdentityId id) const {
    SweepRanges r = default_ranges(id);
    auto apply = [](std::size_t& field, const std::optional<std::size_t>& v) {
      if (v) field = *v;
    };
    apply(r.max_nu, max_nu);
    apply(r.max_mu, max_mu);
    apply(r.min_j, min_j);
    apply(r.max_j, max_j);
    apply(r.min_k, min_k);
    apply(r.max_k, max_k);
    if (k) r.min_k = r.max_k = *k;
    apply(r.max_x, max_x);
    apply(r.max_part, max_part);
    apply(r.max_n, max_n);
    apply(r.max_c, max_c);
    apply(r.cap, cap);
    return r;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partition counts, Grassmannian Betti numbers and characteristic-rank Betti bounds",
               "charrank"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output_path;
  std::string kernel_name = "auto";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output_path, "Write records to this file instead of stdout");
  app.add_option("--kernels", kernel_name, "Limb-addition backend: auto, scalar, avx2, neon")
      ->capture_default_str();

  std::function<OutputRecord()> action;
  int verify_exit = kExitOk;

  // count
  auto* count = app.add_subcommand("count", "Count partitions");
  count->require_subcommand(1);
  count->fallthrough();
  std::size_t a = 0, b = 0, c = 0;
  std::string parts_text;

  auto* box = count->add_subcommand("box", "Partitions of c into at most b parts, each <= a");
  box->fallthrough();
  box->add_option("a", a)->required();
  box->add_option("b", b)->required();
  box->add_option("c", c)->required();
  box->callback([&] {
    action = [&] {
      return single_value("count", {{"subject", "box"}, {"a", std::to_string(a)}, {"b", std::to_string(b)},
                                    {"c", std::to_string(c)}},
                          count_box(a, b, c));
    };
  });

  auto* set_exact = count->add_subcommand("set-exact", "Partitions of c into exactly b parts from a set");
  set_exact->fallthrough();
  set_exact->add_option("--parts", parts_text, "Ascending comma-separated parts, e.g. 1,2,4")->required();
  set_exact->add_option("b", b)->required();
  set_exact->add_option("c", c)->required();
  set_exact->callback([&] {
    action = [&] {
      return single_value("count", {{"subject", "set-exact"}, {"parts", parts_text}, {"b", std::to_string(b)},
                                    {"c", std::to_string(c)}},
                          count_set_exact(parse_parts(parts_text), b, c));
    };
  });

  auto* set_any = count->add_subcommand("set-any", "Partitions of c into parts from a set");
  set_any->fallthrough();
  set_any->add_option("--parts", parts_text, "Ascending comma-separated parts")->required();
  set_any->add_option("c", c)->required();
  set_any->callback([&] {
    action = [&] {
      return single_value("count", {{"subject", "set-any"}, {"parts", parts_text}, {"c", std::to_string(c)}},
                          count_set_any(parse_parts(parts_text), c));
    };
  });

  auto* total = count->add_subcommand("total", "p(c)");
  total->fallthrough();
  total->add_option("c", c)->required();
  total->callback([&] {
    action = [&] {
      return single_value("count", {{"subject", "total"}, {"c", std::to_string(c)}}, count_total(c));
    };
  });

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Mod-2 Betti numbers of the Grassmannian G(n,k)");
  betti_cmd->fallthrough();
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> degree;
  betti_cmd->add_option("n", n)->required();
  betti_cmd->add_option("k", k)->required();
  betti_cmd->add_option("c", degree, "Degree; omit for the whole Poincare table");
  betti_cmd->callback([&] {
    action = [&] {
      if (degree) {
        return single_value("betti", {{"n", std::to_string(n)}, {"k", std::to_string(k)},
                                      {"c", std::to_string(*degree)}},
                            betti(n, k, *degree));
      }
      const PoincareTable table = poincare(n, k);
      OutputRecord r;
      r.command = "betti";
      r.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
      r.columns = {"degree", "value"};
      auto values = nlohmann::ordered_json::array();
      std::string line;
      for (std::size_t d = 0; d < table.betti.size(); ++d) {
        const std::string v = table.betti[d].to_string();
        values.push_back(v);
        r.rows.push_back({std::to_string(d), v});
        line += (d ? " " : "") + v;
      }
      r.results["betti"] = std::move(values);
      r.results["dimension"] = std::to_string(table.dimension());
      r.results["total"] = table.total().to_string();
      r.text_lines.push_back(line);
      return r;
    };
  });

  // bound
  auto* bound = app.add_subcommand("bound", "Upper bound on b_j(X) from a characteristic-rank lower bound");
  bound->fallthrough();
  std::string set_text, dim_text, charrank_text;
  std::size_t bound_degree = 0;
  bool gapless = false;
  bound->add_option("--set", set_text, "Degrees of possibly nonzero Stiefel-Whitney classes")->required();
  bound->add_option("--dim", dim_text, "Mod-2 dimension of X, or inf")->required();
  bound->add_option("--charrank", charrank_text, "Lower bound t on the characteristic rank, or inf")->required();
  bound->add_option("--degree", bound_degree, "Degree j, 1 <= j <= t")->required();
  bound->add_flag("--gapless", gapless, "Evaluate the Grassmannian-sum form (needs a gapless truncated set)");
  bound->callback([&] {
    action = [&] {
      const BundleProfile profile(parse_extent(dim_text, "--dim"), parse_parts(set_text),
                                  parse_extent(charrank_text, "--charrank"));
      const Count value = gapless ? betti_upper_bound_gapless(profile, bound_degree)
                                  : betti_upper_bound(profile, bound_degree);
      return single_value("bound", {{"set", set_text}, {"dim", dim_text}, {"charrank", charrank_text},
                                    {"degree", std::to_string(bound_degree)},
                                    {"form", gapless ? "gapless" : "general"}},
                          value);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check identities over parameter grids");
  verify->fallthrough();
  VerifyFlags vf;
  verify->add_option("identity", vf.identity,
                     "eq3, eq4, eq5, bijection, oracle, grassmann, sharpness, pentagonal or all")
      ->required()
      ->check(CLI::IsMember(
          {"eq3", "eq4", "eq5", "bijection", "oracle", "grassmann", "sharpness", "pentagonal", "all"}));
  verify->add_option("--max-nu", vf.max_nu);
  verify->add_option("--max-mu", vf.max_mu);
  verify->add_option("--min-j", vf.min_j);
  verify->add_option("--max-j", vf.max_j);
  verify->add_option("--k", vf.k, "Fix k (sets both --min-k and --max-k)");
  verify->add_option("--min-k", vf.min_k);
  verify->add_option("--max-k", vf.max_k);
  verify->add_option("--max-x", vf.max_x);
  verify->add_option("--max-part", vf.max_part, "Oracle sweep: a, b <= N and sets within {1..N}");
  verify->add_option("--max-n", vf.max_n);
  verify->add_option("--max-c", vf.max_c);
  verify->add_option("--cap", vf.cap, "Largest weight an explicit enumeration may reach");
  verify->add_option("--threads", vf.threads, "Worker threads (0: one per core)");
  verify->add_option("--inject-fault", vf.fault, "Mutation testing: break one DP transition")
      ->check(CLI::IsMember({"none", "box-recurrence", "set-exact-transition", "set-any-transition"}))
      ->group("");
  verify->callback([&] {
    action = [&] {
      std::vector<VerificationReport> reports;
      if (vf.identity == "all") {
        for (std::size_t i = 0; i <= static_cast<std::size_t>(IdentityId::PentagonalCrossCheck); ++i) {
          const auto id = static_cast<IdentityId>(i);
          reports.push_back(verify_sweep(id, vf.ranges_for(id), vf.threads));
        }
      } else {
        const IdentityId id = *parse_identity(vf.identity);
        reports.push_back(verify_sweep(id, vf.ranges_for(id), vf.threads));
      }
      OutputRecord r = verification_record(vf.identity, reports);
      verify_exit = r.status == "pass" ? kExitOk : kExitVerificationFailed;
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto format = parse_format(format_name);
  const auto backend = kernel_name == "auto" ? std::nullopt : kernels::parse_backend(kernel_name);
  if (kernel_name != "auto" && !backend) {
    err << "error: unknown kernel backend '" << kernel_name << "'\n";
    return kExitUsage;
  }
  if (!kernels::set_preferred_backend(backend)) {
    err << "error: kernel backend '" << kernel_name << "' is not available on this machine\n";
    return kExitUsage;
  }
  faults::inject(*faults::parse(vf.fault));
  struct ResetHooks {
    ~ResetHooks() {
      faults::inject(faults::Fault::None);
      kernels::set_preferred_backend(std::nullopt);
    }
  } reset_hooks;

  std::string rendered;
  try {
    rendered = render(action(), *format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (output_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!(file << rendered)) {
      err << "error: cannot write " << output_path << "\n";
      return kExitUsage;
    }
  }
  if (verify_exit != kExitOk) err << "verification failed\n";
  return verify_exit;
}

}  // namespace charrank::cli
