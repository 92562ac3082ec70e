#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/enumeration.hpp"
#include "permpat/formulas.hpp"

namespace f = permpat::formulas;
using permpat::BigCount;

TEST_CASE("helpers") {
  CHECK(f::factorial(0) == 1);
  CHECK(f::factorial(20) == BigCount("2432902008176640000"));
  CHECK(f::factorial(25) == BigCount("15511210043330985984000000"));
  CHECK(f::binomial(8, 7) == 8);
  CHECK(f::binomial(60, 30) == BigCount("118264581564861424"));
  CHECK(f::binomial(3, 5) == 0);
  CHECK(f::power(3, 0) == 1);
  CHECK(f::power(2, 100) == BigCount("1267650600228229401496703205376"));
}

TEST_CASE("theorem1") {
  CHECK(f::theorem1(5, 3) == 16);
  CHECK(f::theorem1(6, 4) == 162);
  CHECK(f::theorem1(5, 5) == 96);
  CHECK(f::theorem1(5, 5) == 3 * f::power(2, 2 * 5 - 5));
  CHECK_THROWS_AS(f::theorem1(5, 2), std::domain_error);
  CHECK_THROWS_AS(f::theorem1(3, 4), std::domain_error);
  for (int k = 3; k <= 7; ++k) {
    for (int n = k + 1; n <= 14; ++n) CHECK(f::theorem1(n, k) == (k - 1) * f::theorem1(n - 1, k));
  }
  for (int n = 3; n <= 14; ++n) CHECK(f::theorem1(n, 3) == f::power(2, n - 1));
}

TEST_CASE("corollary_interval") {
  CHECK(f::corollary_interval(5, 3, 1, 2) == 2);
  CHECK(f::corollary_interval(6, 4, 1, 2) == 48);
  // Full union: the base n = k gives zero as well.
  CHECK(f::corollary_interval(3, 3, 1, 3) == 0);
  for (int k = 3; k <= 6; ++k) {
    for (int m = 1; m <= k; ++m) {
      for (int n = k; n <= 12; ++n) CHECK(f::corollary_interval(n, k, m, m) == f::theorem1(n, k));
    }
  }
  CHECK_THROWS_AS(f::corollary_interval(5, 3, 2, 1), std::domain_error);
  CHECK_THROWS_AS(f::corollary_interval(5, 3, 0, 1), std::domain_error);
  CHECK_THROWS_AS(f::corollary_interval(5, 3, 1, 4), std::domain_error);
  CHECK_THROWS_AS(f::corollary_interval(2, 3, 1, 1), std::domain_error);
}

TEST_CASE("recurrence_coefficient") {
  CHECK(f::recurrence_coefficient(4, {1, 3}) == 1);
  CHECK(f::recurrence_coefficient(3, {1, 2, 3}) == 0);
  CHECK(f::recurrence_coefficient(4, {2, 3}) == 2);
  CHECK(f::recurrence_coefficient(4, {2}) == 3);
  CHECK_THROWS_AS(f::recurrence_coefficient(4, {}), std::domain_error);
  CHECK_THROWS_AS(f::recurrence_coefficient(4, {3, 2}), std::domain_error);
  CHECK_THROWS_AS(f::recurrence_coefficient(4, {1, 5}), std::domain_error);
}

TEST_CASE("theorem3 and theorem4") {
  CHECK(f::theorem3(6, 3) == 32);
  CHECK(f::theorem3(7, 4) == 108);
  CHECK(f::theorem4(5, 3) == 4);
  CHECK(f::theorem4(7, 4) == 27);
  for (int k = 3; k <= 7; ++k) {
    CHECK(f::theorem3(k, k) == 1);
    CHECK(f::theorem4(k, k) == 1);
    for (int n = k + 1; n <= 14; ++n) {
      CHECK(f::theorem3(n, k) == (k - 1) * f::theorem3(n - 1, k) + f::power(k - 1, n - k));
    }
  }
  for (int n = 3; n <= 14; ++n) {
    CHECK(f::theorem3(n, 3) == (n - 2) * f::power(2, n - 3));
    CHECK(f::theorem4(n, 3) == f::power(2, n - 3));
  }
  CHECK_THROWS_AS(f::theorem3(3, 4), std::domain_error);
  CHECK_THROWS_AS(f::theorem4(2, 2), std::domain_error);
}

TEST_CASE("theorem3/theorem4 frozen values agree with brute force at n = 7, k = 4") {
  for (const auto& tau : permpat::build_Tkm(4, 1).patterns()) {
    CHECK(permpat::count_exactly_once(7, 4, 1, tau) == 108);
  }
  for (const auto& tau : permpat::build_Tkm(4, 2).patterns()) {
    CHECK(permpat::count_exactly_once(7, 4, 2, tau) == 27);
  }
  CHECK(permpat::count_avoiders(6, permpat::build_union_Tkm(4, {1, 2})) == 48);
  CHECK(permpat::count_avoiders(5, permpat::build_union_Tkm(3, {1, 2})) == 2);
}

TEST_CASE("intro formulas") {
  CHECK(f::intro(f::Intro::catalan, 0) == 1);
  CHECK(f::intro(f::Intro::catalan, 4) == 14);
  CHECK(f::intro(f::Intro::noonan, 4) == 6);
  CHECK(f::intro(f::Intro::bona, 5) == 21);
  CHECK(f::intro(f::Intro::robertson_single, 3) == 1);
  CHECK(f::intro(f::Intro::robertson_both, 6) == 12);
  CHECK(f::intro(f::Intro::robertson_both, 5) == 2);
  CHECK_THROWS_AS(f::intro(f::Intro::noonan, 2), std::domain_error);
  CHECK_THROWS_AS(f::intro(f::Intro::robertson_both, 4), std::domain_error);
  CHECK_THROWS_AS(f::intro(f::Intro::catalan, -1), std::domain_error);
  // Divisions stay exact far beyond the verification grid.
  for (int n = 3; n <= 60; ++n) {
    CHECK_NOTHROW(f::intro(f::Intro::catalan, n));
    CHECK_NOTHROW(f::intro(f::Intro::noonan, n));
  }
  CHECK(f::parse_intro("bona") == f::Intro::bona);
  CHECK_THROWS_AS(f::parse_intro("wilf"), std::invalid_argument);
}

TEST_CASE("evaluate dispatches by id") {
  using N = f::FormulaId::Name;
  CHECK(f::evaluate({N::theorem1, {{"n", 6}, {"k", 4}, {"m", 1}}, {}}) == 162);
  CHECK(f::evaluate({N::corollary_interval, {{"n", 6}, {"k", 4}, {"a", 1}, {"b", 2}}, {}}) == 48);
  CHECK(f::evaluate({N::recurrence_coefficient, {{"k", 4}}, {1, 3}}) == 1);
  CHECK(f::evaluate({N::theorem3_complement, {{"n", 6}, {"k", 3}}, {}}) == 32);
  CHECK(f::evaluate({N::simion_schmidt, {{"n", 5}}, {}}) == 16);
  CHECK(f::evaluate({N::robertson_both, {{"n", 6}}, {}}) == 12);
  CHECK_THROWS_AS(f::evaluate({N::theorem4, {{"n", 6}}, {}}), std::invalid_argument);
}
