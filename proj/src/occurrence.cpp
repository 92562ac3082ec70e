#include "permpat/occurrence.hpp"

#include <stdexcept>

namespace permpat {

PatternMatcher::PatternMatcher(const Permutation& pattern)
    : pattern_(pattern), lower_ref_(pattern.size(), -1), upper_ref_(pattern.size(), -1) {
  if (pattern_.is_empty()) throw std::invalid_argument("pattern must be nonempty");
  const auto values = pattern_.values();
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (values[i] < values[j] &&
          (lower_ref_[j] < 0 || values[i] > values[lower_ref_[j]])) {
        lower_ref_[j] = static_cast<int>(i);
      }
      if (values[i] > values[j] &&
          (upper_ref_[j] < 0 || values[i] < values[upper_ref_[j]])) {
        upper_ref_[j] = static_cast<int>(i);
      }
    }
  }
}

std::uint64_t PatternMatcher::count(std::span<const int> host, std::uint64_t cap) const {
  if (cap == 0 || host.size() < pattern_.size()) return 0;
  std::uint64_t found = 0;
  for_each(host, [&](std::span<const int>) { return ++found < cap; });
  return found;
}

std::uint64_t PatternMatcher::count_ending_at_last(std::span<const int> host,
                                                   std::uint64_t cap) const {
  if (cap == 0 || host.size() < pattern_.size()) return 0;
  std::vector<int> indices(pattern_.size());
  std::vector<int> chosen(pattern_.size());
  std::uint64_t found = 0;
  auto visit = [&](std::span<const int>) { return ++found < cap; };
  search(host, 0, 0, true, indices, chosen, visit);
  return found;
}

BigCount count_occurrences(const Permutation& host, const Permutation& pattern,
                           std::optional<std::uint64_t> cap) {
  if (cap && *cap == 0) throw std::invalid_argument("cap must be positive");
  const PatternMatcher matcher(pattern);
  return BigCount(matcher.count(host.values(), cap.value_or(PatternMatcher::kNoCap)));
}

OccurrenceList find_occurrences(const Permutation& host, const Permutation& pattern,
                                std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  const PatternMatcher matcher(pattern);
  OccurrenceList out{pattern, host.size(), {}, false};
  matcher.for_each(host.values(), [&](std::span<const int> indices) {
    if (out.positions.size() == limit) {
      out.truncated = true;
      return false;
    }
    std::vector<int> tuple(indices.begin(), indices.end());
    for (int& i : tuple) ++i;
    out.positions.push_back(std::move(tuple));
    return true;
  });
  return out;
}

std::uint64_t count_occurrences_naive(std::span<const int> host,
                                      std::span<const int> pattern) {
  const std::size_t n = host.size();
  const std::size_t k = pattern.size();
  if (k == 0 || k > n) return 0;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::uint64_t total = 0;
  while (true) {
    bool same_order = true;
    for (std::size_t a = 0; a < k && same_order; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if ((host[idx[a]] < host[idx[b]]) != (pattern[a] < pattern[b])) {
          same_order = false;
          break;
        }
      }
    }
    if (same_order) ++total;
    // Advance to the next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

}  // namespace permpat
