#pragma once

#include "permpat/occurrence.hpp"
#include "permpat/permutation.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace permpat {

namespace provenance {

/// All patterns of length k whose first entry is m.
struct Tkm {
  int k;
  int m;
};
/// Tkm(k, m) with the single pattern tau removed.
struct Mkm {
  int k;
  int m;
  Permutation tau;
};
/// Union of Tkm(k, m) over the listed first entries.
struct UnionTkm {
  int k;
  std::vector<int> ms;
};
struct AdHoc {};

}  // namespace provenance

using Provenance =
    std::variant<provenance::Tkm, provenance::Mkm, provenance::UnionTkm, provenance::AdHoc>;

/// Finite set of patterns sharing one length, with a record of how it was built.
class PatternSet {
 public:
  /// Ad hoc set. Rejects empty input, mixed lengths and repeated patterns.
  static PatternSet adhoc(std::vector<Permutation> patterns);

  int k() const { return k_; }
  std::size_t size() const { return patterns_.size(); }
  const std::vector<Permutation>& patterns() const& { return patterns_; }
  std::vector<Permutation> patterns() && { return std::move(patterns_); }
  const std::vector<PatternMatcher>& matchers() const { return matchers_; }
  const Provenance& provenance() const { return provenance_; }
  bool contains(const Permutation& p) const;

  /// Round-trippable expression: "Tkm(4,2)", "M(4,2;2143)", "U(4;1,3)", "{123,132}".
  std::string describe() const;

 private:
  PatternSet(int k, std::vector<Permutation> patterns, Provenance provenance);

  friend PatternSet build_Tkm(int, int);
  friend PatternSet build_M(int, int, const Permutation&);
  friend PatternSet build_union_Tkm(int, const std::vector<int>&);

  int k_ = 0;
  std::vector<Permutation> patterns_;  // sorted lexicographically
  std::vector<PatternMatcher> matchers_;
  Provenance provenance_;
};

PatternSet build_Tkm(int k, int m);
PatternSet build_M(int k, int m, const Permutation& tau);
PatternSet build_union_Tkm(int k, const std::vector<int>& ms);

bool avoids_all(const Permutation& p, const PatternSet& set);

/// True iff p avoids every pattern of `avoid` and contains tau exactly once.
/// When `avoid` is an Mkm set it must have been built from tau.
bool contains_exactly_once(const Permutation& p, const Permutation& tau,
                           const PatternSet& avoid);

/// Parses the set-expression grammar:
///   Tkm(k,m)         all length-k patterns starting with m
///   M(k,m;tau)       Tkm(k,m) without tau (exactly-once class of tau)
///   U(k;m1,m2,...)   union of Tkm(k,mi), mi strictly increasing
///   {p1,p2,...}      explicit patterns, digit strings or space-separated
PatternSet parse_set_expression(std::string_view text);

}  // namespace permpat
