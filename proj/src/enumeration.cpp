#include "permpat/enumeration.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>
#include <numeric>

namespace permpat {

namespace {

std::string factorial_text(int n) {
  BigCount f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f.str();
}

// Depth-first prefix extension. A prefix is abandoned as soon as a forbidden
// pattern occurs in it or the tracked pattern occurs twice; both conditions are
// inherited by every extension. Only occurrences ending at the newly placed
// entry are searched, the older ones were ruled out at shallower depths.
class PrefixSearch {
 public:
  PrefixSearch(int n, std::span<const PatternMatcher> forbidden, const PatternMatcher* once)
      : n_(n), forbidden_(forbidden), once_(once), used_(static_cast<std::size_t>(n) + 1, 0) {
    prefix_.reserve(static_cast<std::size_t>(n));
    tau_counts_.reserve(static_cast<std::size_t>(n));
  }

  bool seed(std::span<const int> prefix) {
    if (prefix.size() > static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("prefix longer than n");
    }
    for (int v : prefix) {
      if (v < 1 || v > n_ || used_[v]) {
        throw std::invalid_argument("prefix is not a partial permutation of 1..n");
      }
      if (!try_place(v)) return false;
    }
    return true;
  }

  template <class Visit>
  bool run(Visit& visit) {
    if (prefix_.size() == static_cast<std::size_t>(n_)) {
      if (once_ != nullptr && tau_counts_.back() != 1) return true;
      return visit(std::span<const int>(prefix_));
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[v] || !try_place(v)) continue;
      const bool keep_going = run(visit);
      pop();
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  bool try_place(int v) {
    prefix_.push_back(v);
    used_[v] = 1;
    const std::span<const int> host(prefix_);
    for (const auto& matcher : forbidden_) {
      if (matcher.count_ending_at_last(host, 1) != 0) {
        pop_value();
        return false;
      }
    }
    if (once_ != nullptr) {
      const std::uint64_t before = tau_counts_.empty() ? 0 : tau_counts_.back();
      const std::uint64_t after = before + once_->count_ending_at_last(host, 2 - before);
      if (after >= 2) {
        pop_value();
        return false;
      }
      tau_counts_.push_back(after);
    }
    return true;
  }

  void pop() {
    if (once_ != nullptr) tau_counts_.pop_back();
    pop_value();
  }

  void pop_value() {
    used_[prefix_.back()] = 0;
    prefix_.pop_back();
  }

  int n_;
  std::span<const PatternMatcher> forbidden_;
  const PatternMatcher* once_;
  std::vector<int> prefix_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint64_t> tau_counts_;
};

// Every permutation of 1..n starting with `prefix`, in lexicographic order.
template <class Visit>
void for_each_completion(int n, std::span<const int> prefix, Visit&& visit) {
  std::vector<std::uint8_t> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> current(prefix.begin(), prefix.end());
  for (int v : prefix) {
    if (v < 1 || v > n || used[v]) {
      throw std::invalid_argument("prefix is not a partial permutation of 1..n");
    }
    used[v] = 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[v]) current.push_back(v);
  }
  const auto tail = current.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    if (!visit(std::span<const int>(current))) return;
  } while (std::next_permutation(tail, current.end()));
}

bool avoids_naive(std::span<const int> host, const PatternSet& set) {
  return std::all_of(set.patterns().begin(), set.patterns().end(), [&](const Permutation& p) {
    return count_occurrences_naive(host, p.values()) == 0;
  });
}

bool exactly_once_naive(std::span<const int> host, const Permutation& tau,
                        const PatternSet& others) {
  return avoids_naive(host, others) && count_occurrences_naive(host, tau.values()) == 1;
}

std::uint64_t count_avoiders_serial(int n, const PatternSet& set, std::span<const int> prefix,
                                    Strategy strategy) {
  std::uint64_t total = 0;
  if (strategy == Strategy::exhaustive) {
    for_each_completion(n, prefix, [&](std::span<const int> p) {
      if (avoids_naive(p, set)) ++total;
      return true;
    });
    return total;
  }
  PrefixSearch search(n, set.matchers(), nullptr);
  if (!search.seed(prefix)) return 0;
  auto visit = [&](std::span<const int>) {
    ++total;
    return true;
  };
  search.run(visit);
  return total;
}

std::uint64_t count_exactly_once_serial(int n, const PatternSet& others,
                                        const PatternMatcher& tau, std::span<const int> prefix,
                                        Strategy strategy) {
  std::uint64_t total = 0;
  if (strategy == Strategy::exhaustive) {
    for_each_completion(n, prefix, [&](std::span<const int> p) {
      if (exactly_once_naive(p, tau.pattern(), others)) ++total;
      return true;
    });
    return total;
  }
  PrefixSearch search(n, others.matchers(), &tau);
  if (!search.seed(prefix)) return 0;
  auto visit = [&](std::span<const int>) {
    ++total;
    return true;
  };
  search.run(visit);
  return total;
}

// Runs task(first_entry) for every first entry, on worker threads when
// requested, and sums the partial counts in first-entry order.
template <class Task>
BigCount sum_over_first_entry(int n, bool parallel, Task task) {
  BigCount total = 0;
  if (!parallel) {
    for (int v = 1; v <= n; ++v) total += task(v);
    return total;
  }
  std::vector<std::future<std::uint64_t>> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) parts.push_back(std::async(std::launch::async, task, v));
  for (auto& part : parts) total += part.get();
  return total;
}

void check_membership(int k, int m, const Permutation& tau) {
  if (static_cast<int>(tau.size()) != k || tau.front() != m) {
    throw std::invalid_argument("tau=" + tau.to_string() + " does not start with m=" +
                                std::to_string(m) + " or has length other than k=" +
                                std::to_string(k));
  }
}

}  // namespace

SizeGuardError::SizeGuardError(int n)
    : std::invalid_argument("n=" + std::to_string(n) + " exceeds the desk-scale limit of " +
                            std::to_string(kDeskScaleLimit) + ": the search space is " +
                            std::to_string(n) + "! = " + factorial_text(n) +
                            " permutations; pass --force to run anyway") {}

void check_size(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kDeskScaleLimit && !allow_large) throw SizeGuardError(n);
}

void for_each_avoider(int n, const PatternSet& set, const PermutationVisitor& visit,
                      const SearchOptions& options) {
  check_size(n, options.allow_large);
  if (options.strategy == Strategy::exhaustive) {
    for_each_completion(n, {}, [&](std::span<const int> p) {
      return !avoids_naive(p, set) || visit(p);
    });
    return;
  }
  PrefixSearch search(n, set.matchers(), nullptr);
  auto forward = [&](std::span<const int> p) { return visit(p); };
  search.run(forward);
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& set,
                                            std::optional<std::size_t> limit,
                                            const SearchOptions& options) {
  std::vector<Permutation> out;
  if (limit && *limit == 0) return out;
  for_each_avoider(
      n, set,
      [&](std::span<const int> p) {
        out.push_back(make_permutation(p));
        return !limit || out.size() < *limit;
      },
      options);
  return out;
}

BigCount count_avoiders(int n, const PatternSet& set, const SearchOptions& options) {
  check_size(n, options.allow_large);
  return sum_over_first_entry(n, options.parallel, [&](int first) {
    const int prefix[] = {first};
    return count_avoiders_serial(n, set, prefix, options.strategy);
  });
}

BigCount count_avoiders_from(int n, const PatternSet& set, std::span<const int> prefix,
                             const SearchOptions& options) {
  check_size(n, options.allow_large);
  return BigCount(count_avoiders_serial(n, set, prefix, options.strategy));
}

void for_each_exactly_once(int n, int k, int m, const Permutation& tau,
                           const PermutationVisitor& visit, const SearchOptions& options) {
  check_size(n, options.allow_large);
  check_membership(k, m, tau);
  const auto others = build_M(k, m, tau);
  if (options.strategy == Strategy::exhaustive) {
    for_each_completion(n, {}, [&](std::span<const int> p) {
      return !exactly_once_naive(p, tau, others) || visit(p);
    });
    return;
  }
  const PatternMatcher once(tau);
  PrefixSearch search(n, others.matchers(), &once);
  auto forward = [&](std::span<const int> p) { return visit(p); };
  search.run(forward);
}

std::vector<Permutation> enumerate_exactly_once(int n, int k, int m, const Permutation& tau,
                                                std::optional<std::size_t> limit,
                                                const SearchOptions& options) {
  std::vector<Permutation> out;
  if (limit && *limit == 0) return out;
  for_each_exactly_once(
      n, k, m, tau,
      [&](std::span<const int> p) {
        out.push_back(make_permutation(p));
        return !limit || out.size() < *limit;
      },
      options);
  return out;
}

BigCount count_exactly_once(int n, int k, int m, const Permutation& tau,
                            const SearchOptions& options) {
  check_size(n, options.allow_large);
  check_membership(k, m, tau);
  const auto others = build_M(k, m, tau);
  const PatternMatcher once(tau);
  return sum_over_first_entry(n, options.parallel, [&](int first) {
    const int prefix[] = {first};
    return count_exactly_once_serial(n, others, once, prefix, options.strategy);
  });
}

BigCount Histogram::at(std::uint64_t r) const {
  const auto it = counts.find(r);
  return it == counts.end() ? BigCount(0) : it->second;
}

BigCount Histogram::total() const {
  BigCount sum = 0;
  for (const auto& [r, c] : counts) sum += c;
  return sum;
}

Histogram occurrence_histogram(int n, const Permutation& tau, const SearchOptions& options) {
  check_size(n, options.allow_large);
  using Partial = std::map<std::uint64_t, std::uint64_t>;
  auto scan = [&](int first) {
    Partial partial;
    const int prefix[] = {first};
    for_each_completion(n, prefix, [&](std::span<const int> p) {
      ++partial[count_occurrences_naive(p, tau.values())];
      return true;
    });
    return partial;
  };
  std::vector<Partial> partials;
  if (options.parallel) {
    std::vector<std::future<Partial>> futures;
    for (int v = 1; v <= n; ++v) futures.push_back(std::async(std::launch::async, scan, v));
    for (auto& f : futures) partials.push_back(f.get());
  } else {
    for (int v = 1; v <= n; ++v) partials.push_back(scan(v));
  }
  Histogram out{tau, n, {}};
  for (const auto& partial : partials) {
    for (const auto& [r, c] : partial) out.counts[r] += c;
  }
  return out;
}

std::string histogram_to_json(const Histogram& histogram) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [r, c] : histogram.counts) j[std::to_string(r)] = c.str();
  return j.dump();
}

BigCount count_matching(int n, const std::function<bool(std::span<const int>)>& predicate,
                        const SearchOptions& options) {
  check_size(n, options.allow_large);
  return sum_over_first_entry(n, options.parallel, [&](int first) {
    std::uint64_t total = 0;
    const int prefix[] = {first};
    for_each_completion(n, prefix, [&](std::span<const int> p) {
      if (predicate(p)) ++total;
      return true;
    });
    return total;
  });
}

}  // namespace permpat
