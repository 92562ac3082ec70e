#pragma once

#include "permpat/bigcount.hpp"

#include <map>
#include <string>
#include <vector>

namespace permpat::formulas {

// Closed-form counts for the pattern families. Every evaluator is exact and
// throws std::domain_error outside the range on which the count is stated.

BigCount factorial(int n);
BigCount binomial(int n, int r);
BigCount power(int base, int exponent);

/// |S_n(T_k^m)| = (k-2)! (k-1)^(n+2-k), 2 < k <= n. Independent of m.
BigCount theorem1(int n, int k);

/// |S_n(T_k^a u ... u T_k^b)| = (k-1)! (k+a-b-1)^(n+1-k), 1 <= a <= b <= k, 2 < k <= n.
BigCount corollary_interval(int n, int k, int a, int b);

/// k + i_1 - i_d - 1 for strictly increasing indices in 1..k. May be zero.
int recurrence_coefficient(int k, const std::vector<int>& indices);

/// |S_n(T_k^1; tau)| = |S_n(T_k^k; tau)| = (n+1-k) (k-1)^(n-k), 3 <= k <= n.
BigCount theorem3(int n, int k);

/// |S_n(T_k^m; tau)| = (k-1)^(n-k) for 2 <= m <= k-1, 3 <= k <= n.
BigCount theorem4(int n, int k);

/// |S_n(T_3^1)| = |S_n(T_3^2)| = 2^(n-1), n >= 1.
BigCount simion_schmidt(int n);

enum class Intro {
  catalan,           // (1/(n+1)) C(2n, n)
  noonan,            // (3/n) C(2n, n+3): exactly one 123
  bona,              // C(2n-3, n-3): exactly one 132
  robertson_single,  // (n-2) 2^(n-3): avoid 123, exactly one 132
  robertson_both,    // (n-3)(n-4) 2^(n-5): exactly one 123 and exactly one 132
};

BigCount intro(Intro name, int n);
std::string to_string(Intro name);
Intro parse_intro(const std::string& name);

/// A named formula with its integer parameter bindings.
struct FormulaId {
  enum class Name {
    theorem1,
    corollary_interval,
    recurrence_coefficient,
    theorem3,
    theorem3_complement,
    theorem4,
    catalan,
    noonan,
    bona,
    robertson_single,
    robertson_both,
    simion_schmidt,
  };
  Name name;
  std::map<std::string, int> params;
  std::vector<int> indices;  // recurrence_coefficient only
};

/// Dispatches to the evaluator named by id; throws std::invalid_argument if a
/// required parameter is missing.
BigCount evaluate(const FormulaId& id);

}  // namespace permpat::formulas
