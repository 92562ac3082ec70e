#pragma once

#include "permpat/bigcount.hpp"
#include "permpat/pattern_set.hpp"
#include "permpat/permutation.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permpat {

/// Largest n the counting and enumeration routines accept without an override.
inline constexpr int kDeskScaleLimit = 12;

enum class Strategy {
  pruned,      // prefix backtracking with incremental containment checks
  exhaustive,  // every permutation of S_n, naive occurrence scan
};

struct SearchOptions {
  Strategy strategy = Strategy::pruned;
  bool parallel = false;     // split by first entry across threads
  bool allow_large = false;  // lift the kDeskScaleLimit guard
};

/// Raised when n exceeds kDeskScaleLimit without allow_large.
class SizeGuardError : public std::invalid_argument {
 public:
  explicit SizeGuardError(int n);
};

/// Throws std::invalid_argument for n < 1 and SizeGuardError above the limit.
void check_size(int n, bool allow_large);

/// Visitor receives each permutation; returning false stops the stream.
using PermutationVisitor = std::function<bool(std::span<const int>)>;

/// Streams S_n(set) in lexicographic order (single consumer).
void for_each_avoider(int n, const PatternSet& set, const PermutationVisitor& visit,
                      const SearchOptions& options = {});

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& set,
                                            std::optional<std::size_t> limit = std::nullopt,
                                            const SearchOptions& options = {});

BigCount count_avoiders(int n, const PatternSet& set, const SearchOptions& options = {});

/// Counts the avoiders of length n whose first entries equal `prefix`.
/// Summing over any partition of the first entry reproduces count_avoiders.
BigCount count_avoiders_from(int n, const PatternSet& set, std::span<const int> prefix,
                             const SearchOptions& options = {});

/// Streams S_n(T_k^m; tau): avoid Tkm(k,m) minus tau, contain tau exactly once.
void for_each_exactly_once(int n, int k, int m, const Permutation& tau,
                           const PermutationVisitor& visit, const SearchOptions& options = {});

std::vector<Permutation> enumerate_exactly_once(int n, int k, int m, const Permutation& tau,
                                                std::optional<std::size_t> limit = std::nullopt,
                                                const SearchOptions& options = {});

BigCount count_exactly_once(int n, int k, int m, const Permutation& tau,
                            const SearchOptions& options = {});

/// Number of permutations of S_n with exactly r occurrences of a pattern.
struct Histogram {
  Permutation pattern;
  int n = 0;
  std::map<std::uint64_t, BigCount> counts;  // nonzero entries only

  BigCount at(std::uint64_t r) const;
  BigCount total() const;
};

/// Exhaustive scan of S_n with the naive occurrence counter.
Histogram occurrence_histogram(int n, const Permutation& tau, const SearchOptions& options = {});

/// {"0":"14","1":"6",...} with keys in increasing numeric order.
std::string histogram_to_json(const Histogram& histogram);

/// Exhaustive count of the permutations in S_n satisfying a predicate.
BigCount count_matching(int n, const std::function<bool(std::span<const int>)>& predicate,
                        const SearchOptions& options = {});

}  // namespace permpat
