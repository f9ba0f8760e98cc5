#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detsat/cyclic_family.hpp"
#include "json.hpp"

namespace detsat {

inline constexpr const char* kVersion = "0.3.0";

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string id;
  Status status = Status::Fail;
  double elapsed_ms = 0.0;
  std::string paper_anchor;
  nlohmann::json certificate = nlohmann::json::object();
  std::string detail;

  nlohmann::json to_json() const;
  static CheckResult from_json(const nlohmann::json& j);
};

struct Report {
  nlohmann::json meta = nlohmann::json::object();
  std::vector<CheckResult> checks;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string to_text() const;
  std::size_t count(Status s) const;
  /// 0 all pass, 1 any fail, 3 inconclusive without failures.
  int exit_code() const;
};

struct RunOptions {
  CyclicSpec spec = CyclicSpec::ones(2);
  /// Defaults to default_field(spec.m).
  std::optional<Field> field;
  /// "grevlex" or "lex".
  std::string order = "grevlex";
  std::vector<std::string> suites{"all"};
  /// Overrides the per-suite default degrees.
  std::vector<int> ns;
  std::uint64_t seed = 1;
  std::size_t budget_pairs = 20'000'000;
  /// Per-check wall-clock budget.
  std::optional<double> timeout_secs;
  /// When false every elapsed_ms is reported as 0.
  bool timings = true;
};

/// The rationals for m <= 2, GF(32003) above.
Field default_field(int m);
MonomialOrder parse_order(const std::string& name);

/// identities, saturation, resolution, heights, embedded, congruence.
const std::vector<std::string>& suite_names();
/// Expands "all" and validates names; throws InputError on an unknown suite.
std::vector<std::string> expand_suites(const std::vector<std::string>& suites);

/// Runs the selected suites in a fixed order. Errors inside a check are
/// captured in its result.
Report run(const RunOptions& options);

struct CheckInfo {
  std::string id;  // stem, without the .n<N> / .k<K> suffix
  std::string suite;
  std::string paper_anchor;
  std::string description;
};
const std::vector<CheckInfo>& check_catalog();
/// Looks up a full id such as "resolution.exact.n2"; nullopt if unknown.
std::optional<CheckInfo> find_check(const std::string& id);

}  // namespace detsat
