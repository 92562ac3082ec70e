#include "permpat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace permpat {

namespace {

void validate_permutation(std::span<const int> values) {
  if (values.empty()) {
    throw std::invalid_argument("permutation must be nonempty");
  }
  const auto n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate_permutation(values_);
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity requires n >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::to_compact_string() const {
  if (values_.size() > 9) return to_string();
  std::string out;
  for (int v : values_) out += static_cast<char>('0' + v);
  return out;
}

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
  std::unordered_set<int> seen;
  for (int e : entries_) {
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate entry " + std::to_string(e) + " in word");
    }
  }
}

Word::Word(std::initializer_list<int> entries) : Word(std::vector<int>(entries)) {}

Permutation make_permutation(std::span<const int> values) {
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation flatten(std::span<const int> entries) {
  if (entries.empty()) throw std::invalid_argument("cannot flatten an empty word");
  std::vector<int> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return entries[a] < entries[b]; });
  std::vector<int> ranks(entries.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && entries[order[r]] == entries[order[r - 1]]) {
      throw std::invalid_argument("duplicate entry " + std::to_string(entries[order[r]]) +
                                  " in word");
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks), Permutation::Unchecked{});
}

Permutation complement(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(p.values_);
  for (int& v : out) v = n + 1 - v;
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.values_.rbegin(), p.values_.rend());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                  "' in permutation \"" + std::string(text) + "\"");
    }
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw std::invalid_argument("permutation entry too large");
      ++i;
    }
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

Permutation parse_pattern_token(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const bool bare_digits =
      !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
  if (!bare_digits) return parse_permutation(text);
  std::vector<int> values;
  for (char c : text) values.push_back(c - '0');
  return Permutation(std::move(values));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto current = Permutation::identity(n).vector();
  do {
    out.emplace_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
  return out;
}

}  // namespace permpat
