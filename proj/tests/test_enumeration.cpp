#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/enumeration.hpp"
#include "support/brute.hpp"

#include <random>

using permpat::Permutation;
using permpat::PatternSet;
using permpat::SearchOptions;
using permpat::Strategy;

namespace {

std::vector<std::vector<int>> as_vectors(const PatternSet& set) {
  std::vector<std::vector<int>> out;
  for (const auto& p : set.patterns()) out.push_back(p.vector());
  return out;
}

SearchOptions exhaustive() {
  SearchOptions o;
  o.strategy = Strategy::exhaustive;
  return o;
}

SearchOptions parallel() {
  SearchOptions o;
  o.parallel = true;
  return o;
}

}  // namespace

TEST_CASE("enumerate_avoiders examples") {
  const auto t31 = permpat::build_Tkm(3, 1);
  CHECK(permpat::enumerate_avoiders(3, t31) ==
        std::vector<Permutation>{{2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
  CHECK(permpat::enumerate_avoiders(2, t31) == std::vector<Permutation>{{1, 2}, {2, 1}});
  const auto inc = PatternSet::adhoc({Permutation{1, 2}});
  CHECK(permpat::enumerate_avoiders(4, inc) == std::vector<Permutation>{{4, 3, 2, 1}});
  CHECK(permpat::enumerate_avoiders(3, t31, 2) == std::vector<Permutation>{{2, 1, 3}, {2, 3, 1}});
  CHECK(permpat::enumerate_avoiders(3, t31, 0).empty());
}

TEST_CASE("count_avoiders examples") {
  CHECK(permpat::count_avoiders(5, permpat::build_Tkm(3, 1)) == 16);
  // 54 frozen from brute::count_avoiders over S_5.
  CHECK(brute::count_avoiders(5, as_vectors(permpat::build_Tkm(4, 2))) == 54);
  CHECK(permpat::count_avoiders(5, permpat::build_Tkm(4, 2)) == 54);
  CHECK(permpat::count_avoiders(3, permpat::build_union_Tkm(3, {1, 2, 3})) == 0);
}

TEST_CASE("guards and argument checks") {
  const auto t31 = permpat::build_Tkm(3, 1);
  CHECK_THROWS_AS(permpat::count_avoiders(0, t31), std::invalid_argument);
  CHECK_THROWS_AS(permpat::count_avoiders(13, t31), permpat::SizeGuardError);
  SearchOptions large;
  large.allow_large = true;
  // T_3^1 avoiders are cheap to reach even at n = 13 with pruning: 2^12.
  CHECK(permpat::count_avoiders(13, t31, large) == 4096);
  CHECK_THROWS_AS(permpat::count_exactly_once(4, 3, 2, Permutation{1, 3, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(permpat::occurrence_histogram(13, Permutation{1, 2}), permpat::SizeGuardError);
}

TEST_CASE("enumeration stream: sorted, distinct, avoiding, matches brute force, n <= 8") {
  const std::vector<PatternSet> sets{
      permpat::build_Tkm(3, 1), permpat::build_Tkm(3, 2), permpat::build_Tkm(4, 2),
      permpat::build_union_Tkm(4, {1, 3}), PatternSet::adhoc({Permutation{2, 4, 1, 3}}),
      PatternSet::adhoc({Permutation{1, 2, 3}, Permutation{3, 2, 1}})};
  for (const auto& set : sets) {
    for (int n = 1; n <= 8; ++n) {
      const auto list = permpat::enumerate_avoiders(n, set);
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
      for (const auto& p : list) CHECK(permpat::avoids_all(p, set));
      CHECK(permpat::count_avoiders(n, set) == list.size());
      CHECK(permpat::enumerate_avoiders(n, set, std::nullopt, exhaustive()) == list);
      if (n <= 6) CHECK(brute::count_avoiders(n, as_vectors(set)) == list.size());
    }
  }
}

TEST_CASE("prefix pruning is sound: extensions of a containing prefix still contain") {
  std::mt19937 rng(3);
  const auto set = permpat::build_Tkm(4, 2);
  int flagged = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = brute::random_perm(9, rng);
    for (std::size_t len = 4; len <= p.size(); ++len) {
      const std::vector<int> prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len));
      if (brute::avoids(brute::standardize(prefix), as_vectors(set))) continue;
      ++flagged;
      CHECK_FALSE(brute::avoids(p, as_vectors(set)));
      break;
    }
  }
  CHECK(flagged > 0);
}

TEST_CASE("count_exactly_once examples and brute-force filter, n <= 7") {
  CHECK(permpat::count_exactly_once(4, 3, 1, Permutation{1, 3, 2}) == 4);
  CHECK(permpat::count_exactly_once(3, 3, 2, Permutation{2, 3, 1}) == 1);
  for (int k : {3, 4}) {
    for (int m = 1; m <= k; ++m) {
      for (const auto& tau : permpat::build_Tkm(k, m).patterns()) {
        CHECK(permpat::count_exactly_once(k, k, m, tau) == 1);
        CHECK(permpat::enumerate_exactly_once(k, k, m, tau) == std::vector<Permutation>{tau});
        for (int n = 1; n <= (k == 3 ? 7 : 6); ++n) {
          const auto pruned = permpat::count_exactly_once(n, k, m, tau);
          CHECK(pruned == permpat::count_exactly_once(n, k, m, tau, exhaustive()));
          if (n <= 6) CHECK(pruned == brute::count_exactly_once(n, tau.vector()));
          const auto list = permpat::enumerate_exactly_once(n, k, m, tau);
          CHECK(pruned == list.size());
          CHECK(std::is_sorted(list.begin(), list.end()));
          const auto avoid = permpat::build_M(k, m, tau);
          for (const auto& p : list) CHECK(permpat::contains_exactly_once(p, tau, avoid));
        }
      }
    }
  }
}

TEST_CASE("occurrence_histogram") {
  // Frozen from the bitmask oracle over S_4.
  const auto h4 = permpat::occurrence_histogram(4, Permutation{1, 2, 3});
  CHECK(h4.counts == std::map<std::uint64_t, permpat::BigCount>{{0, 14}, {1, 6}, {2, 3}, {4, 1}});
  CHECK(permpat::histogram_to_json(h4) == R"({"0":"14","1":"6","2":"3","4":"1"})");
  CHECK(permpat::occurrence_histogram(2, Permutation{1, 2, 3}).counts ==
        std::map<std::uint64_t, permpat::BigCount>{{0, 2}});
  CHECK(permpat::occurrence_histogram(3, Permutation{1, 2, 3}).counts ==
        std::map<std::uint64_t, permpat::BigCount>{{0, 5}, {1, 1}});

  for (const auto& tau : permpat::all_permutations(3)) {
    for (int n = 1; n <= 7; ++n) {
      const auto h = permpat::occurrence_histogram(n, tau);
      CHECK(h.total() == permpat::BigCount(brute::all_perms(n).size()));
      CHECK(h.at(0) == permpat::count_avoiders(n, PatternSet::adhoc({tau})));
      CHECK(permpat::occurrence_histogram(n, tau, parallel()).counts == h.counts);
    }
  }
  // Spot check against the bitmask oracle on a length-4 pattern.
  const Permutation p2413{2, 4, 1, 3};
  std::map<std::uint64_t, permpat::BigCount> expected;
  for (const auto& p : brute::all_perms(6)) expected[brute::count(p, p2413.vector())] += 1;
  CHECK(permpat::occurrence_histogram(6, p2413).counts == expected);
}

TEST_CASE("partitioned counting is deterministic") {
  const auto set = permpat::build_union_Tkm(4, {1, 2});
  for (int n = 4; n <= 8; ++n) {
    const auto whole = permpat::count_avoiders(n, set);
    CHECK(permpat::count_avoiders(n, set, parallel()) == whole);
    CHECK(permpat::count_avoiders_from(n, set, {}) == whole);
    // First-entry partition and a two-entry refinement of it.
    permpat::BigCount by_first = 0, by_two = 0;
    for (int a = 1; a <= n; ++a) {
      const int one[] = {a};
      by_first += permpat::count_avoiders_from(n, set, one);
      for (int b = 1; b <= n; ++b) {
        if (b == a) continue;
        const int two[] = {a, b};
        by_two += permpat::count_avoiders_from(n, set, two);
      }
    }
    CHECK(by_first == whole);
    CHECK(by_two == whole);
  }
  const int bad[] = {1, 1};
  CHECK_THROWS_AS(permpat::count_avoiders_from(4, set, bad), std::invalid_argument);
}

TEST_CASE("count_matching") {
  const auto all = permpat::count_matching(5, [](std::span<const int>) { return true; });
  CHECK(all == 120);
  const auto starts_low =
      permpat::count_matching(5, [](std::span<const int> p) { return p[0] == 1; }, parallel());
  CHECK(starts_low == 24);
}
