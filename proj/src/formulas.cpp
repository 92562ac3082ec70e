#include "permpat/formulas.hpp"

#include <stdexcept>

namespace permpat::formulas {

namespace {

[[noreturn]] void out_of_domain(const std::string& what) { throw std::domain_error(what); }

void require(bool ok, const char* formula, const std::string& condition) {
  if (!ok) out_of_domain(std::string(formula) + " requires " + condition);
}

BigCount exact_divide(const BigCount& numerator, const BigCount& denominator) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw std::logic_error("inexact division " + numerator.str() + " / " + denominator.str());
  }
  return numerator / denominator;
}

int param(const FormulaId& id, const std::string& key) {
  const auto it = id.params.find(key);
  if (it == id.params.end()) throw std::invalid_argument("missing formula parameter " + key);
  return it->second;
}

}  // namespace

BigCount factorial(int n) {
  require(n >= 0, "factorial", "n >= 0");
  BigCount out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigCount binomial(int n, int r) {
  require(n >= 0, "binomial", "n >= 0");
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigCount out = 1;
  for (int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;  // exact: out is C(n-r+i, i) after this step
  }
  return out;
}

BigCount power(int base, int exponent) {
  require(exponent >= 0, "power", "a non-negative exponent");
  BigCount out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigCount theorem1(int n, int k) {
  require(k > 2 && k <= n, "theorem1", "2 < k <= n");
  return factorial(k - 2) * power(k - 1, n + 2 - k);
}

BigCount corollary_interval(int n, int k, int a, int b) {
  require(k > 2 && k <= n, "corollary_interval", "2 < k <= n");
  require(1 <= a && a <= b && b <= k, "corollary_interval", "1 <= a <= b <= k");
  return factorial(k - 1) * power(k + a - b - 1, n + 1 - k);
}

int recurrence_coefficient(int k, const std::vector<int>& indices) {
  require(!indices.empty(), "recurrence_coefficient", "a nonempty index list");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] >= 1 && indices[i] <= k, "recurrence_coefficient", "indices in 1..k");
    require(i == 0 || indices[i] > indices[i - 1], "recurrence_coefficient",
            "strictly increasing indices");
  }
  return k + indices.front() - indices.back() - 1;
}

BigCount theorem3(int n, int k) {
  require(k >= 3 && k <= n, "theorem3", "3 <= k <= n");
  return BigCount(n + 1 - k) * power(k - 1, n - k);
}

BigCount theorem4(int n, int k) {
  require(k >= 3 && k <= n, "theorem4", "3 <= k <= n");
  return power(k - 1, n - k);
}

BigCount simion_schmidt(int n) {
  require(n >= 1, "simion_schmidt", "n >= 1");
  return power(2, n - 1);
}

BigCount intro(Intro name, int n) {
  switch (name) {
    case Intro::catalan:
      require(n >= 0, "catalan", "n >= 0");
      return exact_divide(binomial(2 * n, n), n + 1);
    case Intro::noonan:
      require(n >= 3, "noonan", "n >= 3");
      return exact_divide(3 * binomial(2 * n, n + 3), n);
    case Intro::bona:
      require(n >= 3, "bona", "n >= 3");
      return binomial(2 * n - 3, n - 3);
    case Intro::robertson_single:
      require(n >= 3, "robertson_single", "n >= 3");
      return BigCount(n - 2) * power(2, n - 3);
    case Intro::robertson_both:
      require(n >= 5, "robertson_both", "n >= 5");
      return BigCount(n - 3) * (n - 4) * power(2, n - 5);
  }
  throw std::logic_error("unknown intro formula");
}

std::string to_string(Intro name) {
  switch (name) {
    case Intro::catalan: return "catalan";
    case Intro::noonan: return "noonan";
    case Intro::bona: return "bona";
    case Intro::robertson_single: return "robertson_single";
    case Intro::robertson_both: return "robertson_both";
  }
  return "?";
}

Intro parse_intro(const std::string& name) {
  for (auto v : {Intro::catalan, Intro::noonan, Intro::bona, Intro::robertson_single,
                 Intro::robertson_both}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown formula " + name);
}

BigCount evaluate(const FormulaId& id) {
  using N = FormulaId::Name;
  switch (id.name) {
    case N::theorem1: return theorem1(param(id, "n"), param(id, "k"));
    case N::corollary_interval:
      return corollary_interval(param(id, "n"), param(id, "k"), param(id, "a"), param(id, "b"));
    case N::recurrence_coefficient: return recurrence_coefficient(param(id, "k"), id.indices);
    case N::theorem3:
    case N::theorem3_complement: return theorem3(param(id, "n"), param(id, "k"));
    case N::theorem4: return theorem4(param(id, "n"), param(id, "k"));
    case N::catalan: return intro(Intro::catalan, param(id, "n"));
    case N::noonan: return intro(Intro::noonan, param(id, "n"));
    case N::bona: return intro(Intro::bona, param(id, "n"));
    case N::robertson_single: return intro(Intro::robertson_single, param(id, "n"));
    case N::robertson_both: return intro(Intro::robertson_both, param(id, "n"));
    case N::simion_schmidt: return simion_schmidt(param(id, "n"));
  }
  throw std::logic_error("unknown formula id");
}

}  // namespace permpat::formulas
