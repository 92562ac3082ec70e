#include "permpat/verify.hpp"

#include "permpat/formulas.hpp"
#include "permpat/pattern_set.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

namespace permpat::verify {

namespace {

using formulas::Intro;

Binding bind(std::vector<std::pair<std::string, ParamValue>> params) {
  return Binding{std::move(params)};
}

int as_int(const Binding& b, const char* key) { return static_cast<int>(b.integer(key)); }

Permutation tau_of(const Binding& b) { return parse_pattern_token(b.text("tau")); }

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    out.push_back(std::stoi(s.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

// Nonempty subsets of 1..k as strictly increasing lists.
std::vector<std::vector<int>> index_subsets(int k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) subset.push_back(i + 1);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

std::vector<Binding> exactly_once_grid(int n_max, std::initializer_list<int> ks,
                                       const std::function<std::vector<int>(int)>& ms_for) {
  std::vector<Binding> out;
  for (int k : ks) {
    for (int m : ms_for(k)) {
      const auto family = build_Tkm(k, m);
      for (const auto& tau : family.patterns()) {
        for (int n = k; n <= n_max; ++n) {
          out.push_back(bind({{"k", k}, {"m", m}, {"tau", tau.to_compact_string()}, {"n", n}}));
        }
      }
    }
  }
  return out;
}

BigCount exactly_once_oracle(const Binding& b, const SearchOptions& o) {
  return count_exactly_once(as_int(b, "n"), as_int(b, "k"), as_int(b, "m"), tau_of(b), o);
}

BigCount histogram_entry(const Binding& b, const SearchOptions& o, const Permutation& tau) {
  return occurrence_histogram(as_int(b, "n"), tau, o).at(1);
}

std::vector<Claim> make_registry() {
  std::vector<Claim> claims;

  claims.push_back(Claim{
      "theorem1", "|S_n(T_k^m)| = (k-2)! (k-1)^(n+2-k)", "2 < k <= n, 1 <= m <= k",
      ClaimKind::assertion, 9,
      [](int n_max) {
        std::vector<Binding> out;
        for (int k : {3, 4, 5}) {
          for (int m = 1; m <= k; ++m) {
            for (int n = k; n <= n_max; ++n) out.push_back(bind({{"k", k}, {"m", m}, {"n", n}}));
          }
        }
        return out;
      },
      [](const Binding& b, const SearchOptions& o) {
        return count_avoiders(as_int(b, "n"), build_Tkm(as_int(b, "k"), as_int(b, "m")), o);
      },
      [](const Binding& b, const SearchOptions&) {
        return formulas::theorem1(as_int(b, "n"), as_int(b, "k"));
      }});

  claims.push_back(Claim{
      "simion_schmidt", "|S_n(T_3^1)| = |S_n(T_3^2)| = 2^(n-1)", "n >= 1, m in {1,2}",
      ClaimKind::assertion, 9,
      [](int n_max) {
        std::vector<Binding> out;
        for (int m : {1, 2}) {
          for (int n = 1; n <= n_max; ++n) out.push_back(bind({{"m", m}, {"n", n}}));
        }
        return out;
      },
      [](const Binding& b, const SearchOptions& o) {
        return count_avoiders(as_int(b, "n"), build_Tkm(3, as_int(b, "m")), o);
      },
      [](const Binding& b, const SearchOptions&) {
        return formulas::simion_schmidt(as_int(b, "n"));
      }});

  auto interval_grid = [](int n_lo_offset, bool base_only) {
    return [=](int n_max) {
      std::vector<Binding> out;
      for (int k : {3, 4}) {
        for (int a = 1; a <= k; ++a) {
          for (int b = a; b <= k; ++b) {
            const int hi = base_only ? std::min(k, n_max) : n_max;
            for (int n = k + n_lo_offset; n <= hi; ++n) {
              out.push_back(bind({{"k", k}, {"a", a}, {"b", b}, {"n", n}}));
            }
          }
        }
      }
      return out;
    };
  };
  auto interval_oracle = [](const Binding& b, const SearchOptions& o) {
    std::vector<int> ms;
    for (int m = as_int(b, "a"); m <= as_int(b, "b"); ++m) ms.push_back(m);
    return count_avoiders(as_int(b, "n"), build_union_Tkm(as_int(b, "k"), ms), o);
  };

  claims.push_back(Claim{
      "corollary_interval", "|S_n(T_k^a u ... u T_k^b)| = (k-1)! (k+a-b-1)^(n+1-k)",
      "1 <= a <= b <= k, 2 < k <= n", ClaimKind::assertion, 9, interval_grid(0, false),
      interval_oracle, [](const Binding& b, const SearchOptions&) {
        return formulas::corollary_interval(as_int(b, "n"), as_int(b, "k"), as_int(b, "a"),
                                            as_int(b, "b"));
      }});

  claims.push_back(Claim{
      "corollary_interval_base",
      "base case constant used in the interval-union argument: |G_k| = (k+a-b+1) (k-1)!",
      "n = k; compared against the formula's own (k+a-b-1) (k-1)!", ClaimKind::probe, 9,
      interval_grid(0, true), interval_oracle, [](const Binding& b, const SearchOptions&) {
        const int k = as_int(b, "k");
        return BigCount(k + as_int(b, "a") - as_int(b, "b") + 1) * formulas::factorial(k - 1);
      }});

  auto recurrence_grid = [](bool probe) {
    return [=](int n_max) {
      std::vector<Binding> out;
      for (int k : {3, 4}) {
        for (const auto& subset : index_subsets(k)) {
          const int lo = probe ? k + 1 : 2 * k + 1;
          const int hi = probe ? std::min(2 * k, n_max) : n_max;
          for (int n = lo; n <= hi; ++n) {
            out.push_back(bind({{"k", k}, {"indices", join(subset)}, {"n", n}}));
          }
        }
      }
      return out;
    };
  };
  auto recurrence_oracle = [](const Binding& b, const SearchOptions& o) {
    const auto set = build_union_Tkm(as_int(b, "k"), split_ints(b.text("indices")));
    return count_avoiders(as_int(b, "n"), set, o);
  };
  auto recurrence_rhs = [](const Binding& b, const SearchOptions& o) {
    const int k = as_int(b, "k");
    const auto indices = split_ints(b.text("indices"));
    const auto previous = count_avoiders(as_int(b, "n") - 1, build_union_Tkm(k, indices), o);
    return BigCount(formulas::recurrence_coefficient(k, indices)) * previous;
  };

  claims.push_back(Claim{
      "corollary2", "|S_n(T_k^{i_1} u ... u T_k^{i_d})| = (k+i_1-i_d-1) |S_{n-1}(...)|",
      "n >= 2k+1; stated without proof, checked empirically", ClaimKind::assertion, 9,
      recurrence_grid(false), recurrence_oracle, recurrence_rhs});

  claims.push_back(Claim{"corollary2_probe",
                         "same recurrence below its stated range",
                         "k+1 <= n <= 2k; reported, not judged", ClaimKind::probe, 9,
                         recurrence_grid(true), recurrence_oracle, recurrence_rhs});

  auto theorem3_formula = [](const Binding& b, const SearchOptions&) {
    return formulas::theorem3(as_int(b, "n"), as_int(b, "k"));
  };
  claims.push_back(Claim{
      "theorem3", "|S_n(T_k^1; tau)| = (n+1-k) (k-1)^(n-k)", "3 <= k <= n, tau in T_k^1",
      ClaimKind::assertion, 9,
      [](int n_max) {
        return exactly_once_grid(n_max, {3, 4}, [](int) { return std::vector<int>{1}; });
      },
      exactly_once_oracle, theorem3_formula});

  claims.push_back(Claim{
      "theorem3_complement", "|S_n(T_k^k; tau)| = (n+1-k) (k-1)^(n-k)",
      "3 <= k <= n, tau in T_k^k", ClaimKind::assertion, 9,
      [](int n_max) {
        return exactly_once_grid(n_max, {3, 4}, [](int k) { return std::vector<int>{k}; });
      },
      exactly_once_oracle, theorem3_formula});

  claims.push_back(Claim{
      "theorem4", "|S_n(T_k^m; tau)| = (k-1)^(n-k)", "2 <= m <= k-1, k <= n, tau in T_k^m",
      ClaimKind::assertion, 9,
      [](int n_max) {
        return exactly_once_grid(n_max, {3, 4}, [](int k) {
          std::vector<int> ms;
          for (int m = 2; m <= k - 1; ++m) ms.push_back(m);
          return ms;
        });
      },
      exactly_once_oracle, [](const Binding& b, const SearchOptions&) {
        return formulas::theorem4(as_int(b, "n"), as_int(b, "k"));
      }});

  claims.push_back(Claim{
      "catalan", "|S_n(tau)| = C(2n,n)/(n+1) for every tau in S_3", "n >= 1",
      ClaimKind::assertion, 8,
      [](int n_max) {
        std::vector<Binding> out;
        for (const auto& tau : all_permutations(3)) {
          for (int n = 1; n <= n_max; ++n) {
            out.push_back(bind({{"tau", tau.to_compact_string()}, {"n", n}}));
          }
        }
        return out;
      },
      [](const Binding& b, const SearchOptions& o) {
        return count_avoiders(as_int(b, "n"), PatternSet::adhoc({tau_of(b)}), o);
      },
      [](const Binding& b, const SearchOptions&) {
        return formulas::intro(Intro::catalan, as_int(b, "n"));
      }});

  auto n_range = [](int lo) {
    return [=](int n_max) {
      std::vector<Binding> out;
      for (int n = lo; n <= n_max; ++n) out.push_back(bind({{"n", n}}));
      return out;
    };
  };
  auto intro_formula = [](Intro which) {
    return [=](const Binding& b, const SearchOptions&) {
      return formulas::intro(which, as_int(b, "n"));
    };
  };

  claims.push_back(Claim{
      "noonan", "permutations with exactly one 123: (3/n) C(2n, n+3)", "n >= 3",
      ClaimKind::assertion, 8, n_range(3),
      [](const Binding& b, const SearchOptions& o) {
        return histogram_entry(b, o, Permutation{1, 2, 3});
      },
      intro_formula(Intro::noonan)});

  claims.push_back(Claim{
      "bona", "permutations with exactly one 132: C(2n-3, n-3)", "n >= 3", ClaimKind::assertion,
      8, n_range(3),
      [](const Binding& b, const SearchOptions& o) {
        return histogram_entry(b, o, Permutation{1, 3, 2});
      },
      intro_formula(Intro::bona)});

  claims.push_back(Claim{
      "robertson_single", "avoid 123, exactly one 132: (n-2) 2^(n-3)", "n >= 3",
      ClaimKind::assertion, 8, n_range(3),
      [](const Binding& b, const SearchOptions& o) {
        return count_exactly_once(as_int(b, "n"), 3, 1, Permutation{1, 3, 2}, o);
      },
      intro_formula(Intro::robertson_single)});

  claims.push_back(Claim{
      "robertson_both", "exactly one 123 and exactly one 132: (n-3)(n-4) 2^(n-5)", "n >= 5",
      ClaimKind::assertion, 8, n_range(5),
      [](const Binding& b, const SearchOptions& o) {
        static const std::vector<int> p123{1, 2, 3};
        static const std::vector<int> p132{1, 3, 2};
        return count_matching(
            as_int(b, "n"),
            [](std::span<const int> p) {
              return count_occurrences_naive(p, p123) == 1 &&
                     count_occurrences_naive(p, p132) == 1;
            },
            o);
      },
      intro_formula(Intro::robertson_both)});

  std::sort(claims.begin(), claims.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

struct Task {
  const Claim* claim;
  Binding binding;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json params_json(const Binding& b) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : b.params) {
    std::visit([&](const auto& v) { j[key] = v; }, value);
  }
  return j;
}

}  // namespace

std::int64_t Binding::integer(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) {
      if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
      throw std::invalid_argument("parameter " + key + " is not an integer");
    }
  }
  throw std::invalid_argument("binding has no parameter " + key);
}

const std::string& Binding::text(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) {
      if (const auto* s = std::get_if<std::string>(&v)) return *s;
      throw std::invalid_argument("parameter " + key + " is not text");
    }
  }
  throw std::invalid_argument("binding has no parameter " + key);
}

std::string Binding::to_string() const {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + '=';
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
            out += v;
          } else {
            out += std::to_string(v);
          }
        },
        value);
  }
  return out;
}

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

const Claim& find_claim(const std::string& id) {
  for (const auto& claim : builtin_claims()) {
    if (claim.id == id) return claim;
  }
  throw std::invalid_argument("unknown claim \"" + id + "\"");
}

VerificationRecord verify_claim(const Claim& claim, const Binding& binding,
                                const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord record;
  record.claim = claim.id;
  record.binding = binding;
  record.formula = claim.formula(binding, options);
  record.oracle = claim.oracle(binding, options);
  record.pass = record.oracle == record.formula;
  record.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return record;
}

std::vector<VerificationRecord> run_suite(const std::vector<std::string>& selection,
                                          const SuiteOptions& options) {
  if (selection.empty()) throw std::invalid_argument("empty claim selection");
  std::set<std::string> ids;
  for (const auto& id : selection) {
    if (id == "all") {
      for (const auto& claim : builtin_claims()) ids.insert(claim.id);
    } else {
      ids.insert(find_claim(id).id);
    }
  }
  if (options.n_max) check_size(*options.n_max, options.allow_large);

  std::vector<Task> tasks;
  for (const auto& id : ids) {
    const auto& claim = find_claim(id);
    for (auto& binding : claim.grid(options.n_max.value_or(claim.default_n_max))) {
      tasks.push_back(Task{&claim, std::move(binding)});
    }
  }

  // Bindings run serially inside each task; parallelism is across tasks.
  SearchOptions search;
  search.strategy = options.oracle_strategy;
  search.allow_large = options.allow_large;

  std::vector<std::optional<VerificationRecord>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto work = [&](std::size_t i) {
    try {
      slots[i] = verify_claim(*tasks[i].claim, tasks[i].binding, search);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (options.parallel) {
    const unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) work(i);
      });
    }
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<VerificationRecord> records;
  records.reserve(slots.size());
  for (auto& slot : slots) records.push_back(std::move(*slot));
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.claim != b.claim) return a.claim < b.claim;
    return a.binding < b.binding;
  });
  return records;
}

Summary summarize(const std::vector<VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    if (find_claim(r.claim).kind == ClaimKind::probe) {
      ++s.probes;
      if (r.pass) ++s.probes_holding;
    } else {
      ++s.assertions;
      if (r.pass) {
        ++s.assertions_passed;
      } else {
        s.failures.push_back(r);
      }
    }
  }
  return s;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format \"" + name + "\" (expected json or csv)");
}

std::string format_report(const std::vector<VerificationRecord>& records, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json j;
      j["claim"] = r.claim;
      j["params"] = params_json(r.binding);
      j["oracle"] = r.oracle.str();
      j["formula"] = r.formula.str();
      j["pass"] = r.pass;
      j["ms"] = r.ms;
      out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }
  std::string out = "claim,params,oracle,formula,pass,ms\r\n";
  for (const auto& r : records) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    out += csv_field(r.claim) + ',' + csv_field(params_json(r.binding).dump()) + ',' +
           r.oracle.str() + ',' + r.formula.str() + ',' + (r.pass ? "true" : "false") + ',' +
           ms + "\r\n";
  }
  return out;
}

void write_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                  const std::filesystem::path& destination) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + destination.string() + " for writing");
  file << format_report(records, format);
  if (!file.flush()) throw std::runtime_error("failed writing " + destination.string());
}

}  // namespace permpat::verify
