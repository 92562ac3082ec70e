#pragma once

#include "permpat/bigcount.hpp"
#include "permpat/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace permpat {

/// Occurrence index tuples of a pattern in a host, 1-based, lexicographic.
struct OccurrenceList {
  Permutation pattern;
  std::size_t host_length = 0;
  std::vector<std::vector<int>> positions;
  bool truncated = false;
};

/// A pattern compiled for depth-first subsequence search.
///
/// Element j of the pattern must land strictly between the host values chosen
/// for its value-predecessor and value-successor among elements 0..j-1. Hosts
/// are raw spans of distinct integers, so prefixes of a permutation under
/// construction can be searched without standardizing them first.
class PatternMatcher {
 public:
  static constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

  explicit PatternMatcher(const Permutation& pattern);

  std::size_t length() const { return pattern_.size(); }
  const Permutation& pattern() const { return pattern_; }

  std::uint64_t count(std::span<const int> host, std::uint64_t cap = kNoCap) const;

  /// Counts only the occurrences that use the last host entry.
  std::uint64_t count_ending_at_last(std::span<const int> host,
                                     std::uint64_t cap = kNoCap) const;

  /// Calls visit(indices) for each occurrence in lexicographic order of the
  /// 0-based index tuple; stops as soon as visit returns false.
  template <class Visit>
  void for_each(std::span<const int> host, Visit&& visit) const {
    if (host.size() < pattern_.size()) return;
    std::vector<int> indices(pattern_.size());
    std::vector<int> chosen(pattern_.size());
    search(host, 0, 0, false, indices, chosen, visit);
  }

 private:
  template <class Visit>
  bool search(std::span<const int> host, std::size_t depth, std::size_t start,
              bool anchored, std::vector<int>& indices, std::vector<int>& chosen,
              Visit& visit) const;

  Permutation pattern_;
  // Index of the earlier pattern element that bounds element j from below
  // (resp. above), or -1.
  std::vector<int> lower_ref_;
  std::vector<int> upper_ref_;
};

template <class Visit>
bool PatternMatcher::search(std::span<const int> host, std::size_t depth,
                            std::size_t start, bool anchored, std::vector<int>& indices,
                            std::vector<int>& chosen, Visit& visit) const {
  const std::size_t k = pattern_.size();
  if (depth == k) return visit(std::span<const int>(indices));
  const std::size_t n = host.size();
  std::size_t last = n - k + depth;
  if (anchored && depth + 1 == k) start = std::max(start, n - 1);
  const int lo = lower_ref_[depth] >= 0 ? chosen[lower_ref_[depth]]
                                        : std::numeric_limits<int>::min();
  const int hi = upper_ref_[depth] >= 0 ? chosen[upper_ref_[depth]]
                                        : std::numeric_limits<int>::max();
  for (std::size_t pos = start; pos <= last; ++pos) {
    const int v = host[pos];
    if (v <= lo || v >= hi) continue;
    indices[depth] = static_cast<int>(pos);
    chosen[depth] = v;
    if (!search(host, depth + 1, pos + 1, anchored, indices, chosen, visit)) return false;
  }
  return true;
}

/// Number of occurrences of pattern in host; with a cap, min(count, cap).
BigCount count_occurrences(const Permutation& host, const Permutation& pattern,
                           std::optional<std::uint64_t> cap = std::nullopt);

/// Lists up to `limit` occurrences (1-based tuples); truncated iff more exist.
OccurrenceList find_occurrences(const Permutation& host, const Permutation& pattern,
                                std::size_t limit);

/// Reference counter: scans every index tuple and compares all pairwise
/// orders. No pruning; used as the oracle for the searched paths.
std::uint64_t count_occurrences_naive(std::span<const int> host,
                                      std::span<const int> pattern);

}  // namespace permpat
