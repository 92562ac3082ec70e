#pragma once

#include "permpat/bigcount.hpp"
#include "permpat/enumeration.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace permpat::verify {

using ParamValue = std::variant<std::int64_t, std::string>;

/// Parameter bindings of one claim instance, in a fixed per-claim key order.
struct Binding {
  std::vector<std::pair<std::string, ParamValue>> params;

  std::int64_t integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  /// "k=3 m=1 n=5"
  std::string to_string() const;

  friend bool operator==(const Binding&, const Binding&) = default;
  friend bool operator<(const Binding& a, const Binding& b) { return a.params < b.params; }
};

enum class ClaimKind {
  assertion,  // a stated result; a failing record fails the suite
  probe,      // an empirical question; records are reported, never judged
};

/// One claim family: a closed form, the brute-force oracle it is checked
/// against, and the grid of bindings on which both are evaluated.
struct Claim {
  std::string id;
  std::string statement;
  std::string domain_note;
  ClaimKind kind = ClaimKind::assertion;
  int default_n_max = 9;
  std::function<std::vector<Binding>(int n_max)> grid;
  std::function<BigCount(const Binding&, const SearchOptions&)> oracle;
  std::function<BigCount(const Binding&, const SearchOptions&)> formula;
};

struct VerificationRecord {
  std::string claim;
  Binding binding;
  BigCount oracle;
  BigCount formula;
  bool pass = false;
  double ms = 0.0;
};

const std::vector<Claim>& builtin_claims();
const Claim& find_claim(const std::string& id);

/// Evaluates oracle and formula independently and compares them exactly.
/// Out-of-domain bindings surface as std::domain_error / std::invalid_argument.
VerificationRecord verify_claim(const Claim& claim, const Binding& binding,
                                const SearchOptions& options = {});

struct SuiteOptions {
  std::optional<int> n_max;  // replaces each claim's default ceiling when set
  bool parallel = false;
  bool allow_large = false;
  Strategy oracle_strategy = Strategy::pruned;
};

/// Runs every binding of the selected claims ("all" selects the registry).
/// Records are sorted by claim id, then binding.
std::vector<VerificationRecord> run_suite(const std::vector<std::string>& selection,
                                          const SuiteOptions& options = {});

struct Summary {
  std::size_t assertions = 0;
  std::size_t assertions_passed = 0;
  std::size_t probes = 0;
  std::size_t probes_holding = 0;
  std::vector<VerificationRecord> failures;  // failing assertion records

  bool ok() const { return failures.empty(); }
};

Summary summarize(const std::vector<VerificationRecord>& records);

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(const std::string& name);
std::string format_report(const std::vector<VerificationRecord>& records, ReportFormat format);
/// Throws std::runtime_error when the destination cannot be written.
void write_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                  const std::filesystem::path& destination);

}  // namespace permpat::verify
