// detsat: verification and computation front end for the cyclic determinantal family.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "detsat/errors.hpp"
#include "detsat/koszul_strand.hpp"
#include "detsat/verifier.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace detsat;

constexpr int kExitUsage = 2;

CyclicSpec load_spec(int m, const std::string& alpha) {
  if (alpha == "ones") {
    CyclicSpec s = CyclicSpec::ones(m);
    s.validate();
    return s;
  }
  if (alpha.empty() || alpha[0] != '@') throw InputError("--alpha expects 'ones' or @file.json");
  std::ifstream in(alpha.substr(1));
  if (!in) throw InputError("cannot read " + alpha.substr(1));
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad JSON in alpha file: ") + e.what());
  }
  if (j.is_object() && j.contains("alpha")) j = j["alpha"];
  CyclicSpec s = CyclicSpec::from_json(m, j);
  s.validate();
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json strings(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json compute_dump(const CyclicFamily& f, const std::vector<int>& ns, const std::string& csv_dir) {
  json xprime = json::array();
  for (const auto& row : f.beta.xprime) xprime.push_back(strings(row));
  json out{{"m", f.spec.m},
           {"alpha", f.spec.to_json()},
           {"field", f.ring->field().name()},
           {"variables", f.ring->names()},
           {"M", f.M.to_json()},
           {"a", strings(f.a)},
           {"I", strings(f.I.generators())},
           {"beta", f.beta.beta},
           {"selectors", f.beta.selector},
           {"x_prime", xprime},
           {"Q", strings(f.Q.generators())},
           {"Q_prime", strings(f.Qprime.generators())},
           {"A", f.A.to_json()},
           {"b", strings(f.delta.b)},
           {"delta", f.delta.delta.to_string()},
           {"alpha_sum", f.alpha_sum},
           {"sign_convention", "b_k = (-1)^(k-1) det A_k"}};
  json strands = json::array();
  for (int n : ns) {
    const StrandComplex c = strand(f, n);
    json ranks = json::array(), labels = json::array(), maps = json::array();
    for (int r = 0; r <= f.spec.m; ++r) {
      ranks.push_back(c.rank(r));
      json ls = json::array();
      for (const auto& l : c.labels[static_cast<std::size_t>(r)]) ls.push_back(l.to_string());
      labels.push_back(ls);
    }
    for (int r = 1; r <= c.top(); ++r) {
      maps.push_back(c.d(r).to_json());
      if (!csv_dir.empty()) {
        std::filesystem::create_directories(csv_dir);
        std::ofstream csv(std::filesystem::path(csv_dir) /
                          ("strand_n" + std::to_string(n) + "_d" + std::to_string(r) + ".csv"));
        csv << c.d(r).to_csv();
      }
    }
    strands.push_back({{"n", n}, {"ranks", ranks}, {"labels", labels}, {"boundary", maps},
                       {"augmentation", strings(c.augmentation)}});
  }
  out["strands"] = strands;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for saturations of powers of cyclic determinantal ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  int m = 2;
  std::string alpha = "ones";
  std::string field_text;
  std::string order = "grevlex";
  std::vector<int> ns;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Matrix size m (rows), 1..7")->check(CLI::Range(1, 7));
    sub->add_option("--alpha", alpha, "'ones' or @file.json holding an m x (m+1) array");
    sub->add_option("--field", field_text, "qq or fp:PRIME");
    sub->add_option("--order", order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--n", ns, "Degrees, comma separated")->delimiter(',');
    sub->add_option("--out", out_path, "Output file (stdout by default)");
  };

  auto* verify = app.add_subcommand("verify", "Run the check suites and emit a report");
  add_common(verify);
  std::string suites = "all", format = "json";
  std::uint64_t seed = 1;
  std::size_t budget_pairs = 20'000'000;
  double timeout_secs = 0;
  bool no_timings = false;
  verify->add_option("--suites", suites, "Comma separated suites or 'all'");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--seed", seed, "Seed for randomized searches");
  verify->add_option("--budget-pairs", budget_pairs, "S-pair budget per Groebner computation");
  verify->add_option("--timeout-secs", timeout_secs, "Wall-clock budget per check");
  verify->add_flag("--no-timings", no_timings, "Report every elapsed_ms as 0");

  auto* compute = app.add_subcommand("compute", "Dump the derived data and strand matrices as JSON");
  add_common(compute);
  std::string csv_dir;
  compute->add_option("--csv-dir", csv_dir, "Also write boundary matrices as CSV files here");

  auto* explain = app.add_subcommand("explain", "Describe a check id");
  std::string check_id;
  explain->add_option("check-id", check_id, "Check id, e.g. resolution.exact.n2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*explain) {
      const auto info = find_check(check_id);
      if (!info) {
        std::cerr << "unknown check id '" << check_id << "'\n";
        return kExitUsage;
      }
      std::cout << info->id << "  [" << info->suite << "]\n  statement: " << info->paper_anchor << "\n  "
                << info->description << "\n";
      return 0;
    }

    const CyclicSpec spec = load_spec(m, alpha);
    const std::optional<Field> field =
        field_text.empty() ? std::nullopt : std::optional<Field>(Field::parse(field_text));

    if (*compute) {
      const Field fld = field.value_or(default_field(m));
      const CyclicFamily f = build(spec, fld, parse_order(order));
      const std::vector<int> degrees = ns.empty() ? std::vector<int>{1, 2} : ns;
      for (int n : degrees)
        if (n < 1) throw InputError("--n values must be positive");
      write_output(out_path, compute_dump(f, degrees, csv_dir).dump(2) + "\n");
      return 0;
    }

    RunOptions opt;
    opt.spec = spec;
    opt.field = field;
    opt.order = order;
    opt.suites = split_list(suites);
    opt.ns = ns;
    opt.seed = seed;
    opt.budget_pairs = budget_pairs;
    if (timeout_secs > 0) opt.timeout_secs = timeout_secs;
    opt.timings = !no_timings;
    const Report report = run(opt);
    write_output(out_path, format == "json" ? report.to_json().dump(2) + "\n" : report.to_text());
    return report.exit_code();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
