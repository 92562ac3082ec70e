#include "permpat/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace permpat {

namespace {

void check_h(const Permutation& beta, int h) {
  const int limit = static_cast<int>(beta.size()) + 1;
  if (h < 1 || h > limit) {
    throw std::out_of_range("h=" + std::to_string(h) + " outside 1.." + std::to_string(limit));
  }
}

}  // namespace

Permutation prepend_insert(const Permutation& beta, int h) {
  check_h(beta, h);
  std::vector<int> out{h};
  out.reserve(beta.size() + 1);
  for (int v : beta.values()) out.push_back(v < h ? v : v + 1);
  return Permutation(std::move(out));
}

Permutation insert_bottom(const Permutation& beta, int h) {
  check_h(beta, h);
  std::vector<int> out;
  out.reserve(beta.size() + 1);
  for (int v : beta.values()) out.push_back(v + 1);
  out.insert(out.begin() + (h - 1), 1);
  return Permutation(std::move(out));
}

std::pair<Permutation, int> remove_bottom(const Permutation& alpha) {
  if (alpha.size() < 2) throw std::invalid_argument("remove_bottom requires length >= 2");
  const auto values = alpha.values();
  const auto it = std::find(values.begin(), values.end(), 1);
  const int h = static_cast<int>(it - values.begin()) + 1;
  std::vector<int> out;
  out.reserve(alpha.size() - 1);
  for (int v : values) {
    if (v != 1) out.push_back(v - 1);
  }
  return {Permutation(std::move(out)), h};
}

}  // namespace permpat
