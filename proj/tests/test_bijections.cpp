#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permpat/bijections.hpp"
#include "permpat/enumeration.hpp"

#include <set>

using permpat::Permutation;

TEST_CASE("prepend_insert") {
  CHECK(permpat::prepend_insert(Permutation{1, 2}, 2) == Permutation{2, 1, 3});
  CHECK(permpat::prepend_insert(Permutation{1}, 1) == Permutation{1, 2});
  CHECK(permpat::prepend_insert(Permutation{2, 1, 3}, 4) == Permutation{4, 2, 1, 3});
  CHECK_THROWS_AS(permpat::prepend_insert(Permutation{1, 2}, 0), std::out_of_range);
  CHECK_THROWS_AS(permpat::prepend_insert(Permutation{1, 2}, 4), std::out_of_range);
}

TEST_CASE("insert_bottom / remove_bottom") {
  CHECK(permpat::insert_bottom(Permutation{2, 1, 3}, 2) == Permutation{3, 1, 2, 4});
  CHECK(permpat::insert_bottom(Permutation{1}, 2) == Permutation{2, 1});
  CHECK(permpat::insert_bottom(Permutation{2, 1}, 1) == Permutation{1, 3, 2});
  CHECK_THROWS_AS(permpat::insert_bottom(Permutation{2, 1}, 4), std::out_of_range);

  CHECK(permpat::remove_bottom(Permutation{3, 1, 2, 4}) == std::pair{Permutation{2, 1, 3}, 2});
  CHECK(permpat::remove_bottom(Permutation{1, 2}) == std::pair{Permutation{1}, 1});
  CHECK(permpat::remove_bottom(Permutation{2, 1}) == std::pair{Permutation{1}, 2});
  CHECK_THROWS_AS(permpat::remove_bottom(Permutation{1}), std::invalid_argument);
}

TEST_CASE("round trips over S_n, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& beta : permpat::all_permutations(n)) {
      for (int h = 1; h <= n + 1; ++h) {
        const auto up = permpat::insert_bottom(beta, h);
        CHECK(permpat::remove_bottom(up) == std::pair{beta, h});
      }
    }
    if (n >= 2) {
      for (const auto& alpha : permpat::all_permutations(n)) {
        const auto [down, h] = permpat::remove_bottom(alpha);
        CHECK(permpat::insert_bottom(down, h) == alpha);
      }
    }
  }
}

TEST_CASE("prepend_insert is injective per h with disjoint images across h") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> images;
    std::size_t produced = 0;
    for (int h = 1; h <= n + 1; ++h) {
      for (const auto& beta : permpat::all_permutations(n)) {
        const auto img = permpat::prepend_insert(beta, h);
        CHECK(img.front() == h);
        images.insert(img);
        ++produced;
      }
    }
    CHECK(images.size() == produced);
    CHECK(images.size() == permpat::all_permutations(n + 1).size());
  }
}

TEST_CASE("avoider maps of the T_k^m argument partition the next level (small grid)") {
  for (int k : {3, 4}) {
    for (int m = 1; m <= k; ++m) {
      const auto set = permpat::build_Tkm(k, m);
      for (int n = k; n <= 6; ++n) {
        const auto level = permpat::enumerate_avoiders(n, set);
        const auto next = permpat::enumerate_avoiders(n + 1, set);
        std::vector<int> hs;
        for (int h = n + m - k + 2; h <= n + 1; ++h) hs.push_back(h);
        for (int h = 1; h <= m - 1; ++h) hs.push_back(h);
        REQUIRE(hs.size() == static_cast<std::size_t>(k - 1));
        std::set<Permutation> images;
        for (const auto& sigma : level) {
          for (int h : hs) {
            const auto img = permpat::prepend_insert(sigma, h);
            CHECK(permpat::avoids_all(img, set));
            CHECK(images.insert(img).second);
          }
        }
        CHECK(images == std::set<Permutation>(next.begin(), next.end()));
      }
    }
  }
}
