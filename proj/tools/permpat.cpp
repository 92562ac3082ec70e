// permpat: count, enumerate and inspect permutations under pattern
// restrictions, and run the formula verification suite.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include "permpat/bijections.hpp"
#include "permpat/enumeration.hpp"
#include "permpat/occurrence.hpp"
#include "permpat/pattern_set.hpp"
#include "permpat/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kSetGrammar = R"(Set expressions:
  Tkm(k,m)        all length-k patterns whose first entry is m
  M(k,m;tau)      the exactly-once class: avoid Tkm(k,m) minus tau, contain tau once
  U(k;m1,m2,..)   union of Tkm(k,mi), mi strictly increasing
  {p1,p2,..}      explicit patterns of one length, e.g. {123,132} or {1 2 3,1 3 2})";

struct CountArgs {
  std::string set;
  int n = 0;
  std::size_t limit = 0;
  bool force = false;
  bool parallel = false;
  bool exhaustive = false;
};

permpat::SearchOptions search_options(const CountArgs& args) {
  permpat::SearchOptions options;
  options.allow_large = args.force;
  options.parallel = args.parallel;
  options.strategy =
      args.exhaustive ? permpat::Strategy::exhaustive : permpat::Strategy::pruned;
  return options;
}

const permpat::provenance::Mkm* as_exactly_once(const permpat::PatternSet& set) {
  return std::get_if<permpat::provenance::Mkm>(&set.provenance());
}

int run_count(const CountArgs& args) {
  const auto set = permpat::parse_set_expression(args.set);
  const auto options = search_options(args);
  if (const auto* m = as_exactly_once(set)) {
    std::cout << permpat::count_exactly_once(args.n, m->k, m->m, m->tau, options) << '\n';
  } else {
    std::cout << permpat::count_avoiders(args.n, set, options) << '\n';
  }
  return kExitOk;
}

int run_enumerate(const CountArgs& args) {
  const auto set = permpat::parse_set_expression(args.set);
  const auto options = search_options(args);
  std::size_t printed = 0;
  auto print = [&](std::span<const int> p) {
    std::cout << permpat::make_permutation(p).to_compact_string() << '\n';
    return args.limit == 0 || ++printed < args.limit;
  };
  if (const auto* m = as_exactly_once(set)) {
    permpat::for_each_exactly_once(args.n, m->k, m->m, m->tau, print, options);
  } else {
    permpat::for_each_avoider(args.n, set, print, options);
  }
  return kExitOk;
}

int run_occurrences(const std::string& host_text, const std::string& pattern_text,
                    std::size_t limit) {
  const auto host = permpat::parse_pattern_token(host_text);
  const auto pattern = permpat::parse_pattern_token(pattern_text);
  std::cout << permpat::count_occurrences(host, pattern) << '\n';
  const auto list = permpat::find_occurrences(host, pattern, limit);
  for (const auto& tuple : list.positions) {
    std::cout << '(';
    for (std::size_t i = 0; i < tuple.size(); ++i) std::cout << (i ? "," : "") << tuple[i];
    std::cout << ")\n";
  }
  if (list.truncated) std::cout << "... truncated at " << limit << '\n';
  return kExitOk;
}

int run_histogram(const std::string& pattern_text, int n, bool force) {
  permpat::SearchOptions options;
  options.allow_large = force;
  const auto hist = permpat::occurrence_histogram(n, permpat::parse_pattern_token(pattern_text),
                                                  options);
  std::cout << permpat::histogram_to_json(hist) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string claims = "all";
  int n_max = 0;
  std::string format = "json";
  std::string out;
  bool parallel = false;
  bool force = false;
  bool list = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_verify(const VerifyArgs& args) {
  namespace v = permpat::verify;
  if (args.list) {
    for (const auto& claim : v::builtin_claims()) {
      std::cout << claim.id << (claim.kind == v::ClaimKind::probe ? " [probe]" : "") << "\n  "
                << claim.statement << "\n  " << claim.domain_note << '\n';
    }
    return kExitOk;
  }
  const auto format = v::parse_report_format(args.format);
  v::SuiteOptions options;
  if (args.n_max > 0) options.n_max = args.n_max;
  options.parallel = args.parallel;
  options.allow_large = args.force;
  const auto records = v::run_suite(split_list(args.claims), options);

  std::map<std::string, std::pair<std::size_t, std::size_t>> per_claim;
  for (const auto& r : records) {
    auto& [passed, total] = per_claim[r.claim];
    ++total;
    if (r.pass) ++passed;
  }
  for (const auto& [id, tally] : per_claim) {
    const bool probe = v::find_claim(id).kind == v::ClaimKind::probe;
    std::printf("%-24s %zu/%zu %s\n", id.c_str(), tally.first, tally.second,
                probe ? "hold (probe)" : "pass");
  }
  const auto summary = v::summarize(records);
  for (const auto& r : summary.failures) {
    std::cout << "FAIL " << r.claim << ' ' << r.binding.to_string() << " oracle=" << r.oracle
              << " formula=" << r.formula << '\n';
  }
  std::cout << summary.assertions_passed << '/' << summary.assertions << " pass";
  if (summary.probes > 0) {
    std::cout << "; probes " << summary.probes_holding << '/' << summary.probes << " hold";
  }
  std::cout << '\n';
  if (!args.out.empty()) v::write_report(records, format, args.out);
  return summary.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation pattern engine: restricted pattern families, avoidance classes, "
               "exactly-once classes and formula verification"};
  app.footer(kSetGrammar);
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count S_n(set), or the exactly-once class for M(...)");
  count->add_option("--set", count_args.set, "Set expression")->required();
  count->add_option("-n", count_args.n, "Permutation length")->required();
  count->add_flag("--force", count_args.force, "Allow n above the desk-scale limit");
  count->add_flag("--parallel", count_args.parallel, "Split the search by first entry");
  count->add_flag("--exhaustive", count_args.exhaustive, "Unpruned scan of all of S_n");

  CountArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List S_n(set) in lexicographic order");
  enumerate->add_option("--set", enum_args.set, "Set expression")->required();
  enumerate->add_option("-n", enum_args.n, "Permutation length")->required();
  enumerate->add_option("--limit", enum_args.limit, "Stop after this many (0 = no limit)");
  enumerate->add_flag("--force", enum_args.force, "Allow n above the desk-scale limit");

  std::string host, pattern;
  std::size_t occ_limit = 100;
  auto* occurrences = app.add_subcommand("occurrences", "Count and list pattern occurrences");
  occurrences->add_option("--host", host, "Host permutation, e.g. 1,3,2,4")->required();
  occurrences->add_option("--pattern", pattern, "Pattern, e.g. 1,2,3")->required();
  occurrences->add_option("--limit", occ_limit, "Maximum index tuples to list")
      ->check(CLI::PositiveNumber);

  std::string hist_pattern;
  int hist_n = 0;
  bool hist_force = false;
  auto* histogram =
      app.add_subcommand("histogram", "Distribution of occurrence counts over S_n (JSON)");
  histogram->add_option("--pattern", hist_pattern, "Pattern, e.g. 1,2,3")->required();
  histogram->add_option("-n", hist_n, "Permutation length")->required();
  histogram->add_flag("--force", hist_force, "Allow n above the desk-scale limit");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check closed forms against brute-force counts");
  verify->add_option("--claims", verify_args.claims, "Comma-separated claim ids or 'all'");
  verify->add_option("--n-max", verify_args.n_max, "Largest n on every claim grid");
  verify->add_option("--format", verify_args.format, "Report format: json or csv");
  verify->add_option("--out", verify_args.out, "Report destination");
  verify->add_flag("--parallel", verify_args.parallel, "Run bindings on worker threads");
  verify->add_flag("--force", verify_args.force, "Allow n-max above the desk-scale limit");
  verify->add_flag("--list", verify_args.list, "List the claim registry and exit");

  auto* map = app.add_subcommand("map", "Apply one of the insertion/removal maps");
  map->require_subcommand(1);
  std::string beta, alpha;
  int h = 0;
  auto* prepend = map->add_subcommand("prepend", "Prepend h, shift entries >= h up");
  prepend->set_help_flag("--help", "Print this help message and exit");
  prepend->add_option("--beta", beta, "Permutation")->required();
  prepend->add_option("--h", h, "Prepended value, 1..n+1")->required();
  auto* insertbottom = map->add_subcommand("insertbottom", "Shift up, insert 1 at position h");
  insertbottom->set_help_flag("--help", "Print this help message and exit");
  insertbottom->add_option("--beta", beta, "Permutation")->required();
  insertbottom->add_option("--h", h, "Insertion position, 1..n+1")->required();
  auto* removebottom = map->add_subcommand("removebottom", "Remove the 1, shift down");
  removebottom->add_option("--alpha", alpha, "Permutation of length >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*occurrences) return run_occurrences(host, pattern, occ_limit);
    if (*histogram) return run_histogram(hist_pattern, hist_n, hist_force);
    if (*verify) return run_verify(verify_args);
    if (*prepend) {
      std::cout << permpat::prepend_insert(permpat::parse_permutation(beta), h).to_string() << '\n';
    } else if (*insertbottom) {
      std::cout << permpat::insert_bottom(permpat::parse_permutation(beta), h).to_string() << '\n';
    } else if (*removebottom) {
      const auto [result, position] = permpat::remove_bottom(permpat::parse_permutation(alpha));
      std::cout << result.to_string() << " (h=" << position << ")\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
