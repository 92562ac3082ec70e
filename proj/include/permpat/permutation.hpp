#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// A permutation of {1,...,n} in one-line notation. Also used as a pattern.
///
/// Construction validates that the values are a rearrangement of 1..n.
/// The empty permutation can only be obtained through Permutation::empty().
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation empty() { return Permutation(); }
  static Permutation identity(int n);

  std::size_t size() const { return values_.size(); }
  bool is_empty() const { return values_.empty(); }

  /// 1-based access, matching one-line notation.
  int at(std::size_t position) const { return values_.at(position - 1); }
  int front() const { return values_.front(); }

  std::span<const int> values() const { return values_; }
  const std::vector<int>& vector() const { return values_; }

  /// "2,1,3"
  std::string to_string() const;
  /// "213" when every entry is a single digit, otherwise the comma form.
  std::string to_compact_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation flatten(std::span<const int>);
  friend Permutation complement(const Permutation&);
  friend Permutation reverse(const Permutation&);

  std::vector<int> values_;
};

/// Sequence of distinct integers with arbitrary values (an element of S_{b1..bn}).
class Word {
 public:
  explicit Word(std::vector<int> entries);
  Word(std::initializer_list<int> entries);

  std::span<const int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<int> entries_;
};

Permutation make_permutation(std::span<const int> values);

/// Order-isomorphic standardization: the entry of rank r becomes r.
/// Throws std::invalid_argument on empty input or repeated entries.
Permutation flatten(std::span<const int> entries);
inline Permutation flatten(const Word& word) { return flatten(word.entries()); }

Permutation complement(const Permutation& p);
Permutation reverse(const Permutation& p);

/// Parses comma- or whitespace-separated positive integers ("2,1,3", "2 1 3").
Permutation parse_permutation(std::string_view text);

/// Parses a pattern token. A bare digit string such as "2143" is read one
/// digit per entry; anything containing separators is read as parse_permutation.
Permutation parse_pattern_token(std::string_view text);

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace permpat
