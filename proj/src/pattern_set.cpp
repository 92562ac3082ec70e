#include "permpat/pattern_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permpat {

namespace {

std::vector<PatternMatcher> compile(const std::vector<Permutation>& patterns) {
  std::vector<PatternMatcher> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.emplace_back(p);
  return out;
}

std::vector<Permutation> starting_with(int k, int m) {
  std::vector<int> rest;
  for (int v = 1; v <= k; ++v) {
    if (v != m) rest.push_back(v);
  }
  std::vector<Permutation> out;
  do {
    std::vector<int> values{m};
    values.insert(values.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(values));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("pattern length k must be at least 2");
}

void check_m(int k, int m) {
  if (m < 1 || m > k) {
    throw std::invalid_argument("m=" + std::to_string(m) + " outside 1.." + std::to_string(k));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("expected an integer, got \"" + std::string(s) + "\"");
  }
  return std::stoi(std::string(s));
}

// Returns the text between "name(" and the closing ")", or nullopt if the
// expression is not a call to `name`.
std::optional<std::string_view> call_arguments(std::string_view expr, std::string_view name) {
  if (expr.substr(0, name.size()) != name) return std::nullopt;
  auto rest = trim(expr.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  return rest.substr(1, rest.size() - 2);
}

}  // namespace

PatternSet::PatternSet(int k, std::vector<Permutation> patterns, Provenance provenance)
    : k_(k), patterns_(std::move(patterns)), provenance_(std::move(provenance)) {
  std::sort(patterns_.begin(), patterns_.end());
  matchers_ = compile(patterns_);
}

PatternSet PatternSet::adhoc(std::vector<Permutation> patterns) {
  if (patterns.empty()) throw std::invalid_argument("pattern set must be nonempty");
  const auto k = patterns.front().size();
  for (const auto& p : patterns) {
    if (p.size() != k) {
      throw std::invalid_argument("mixed pattern lengths in set (" + std::to_string(k) +
                                  " and " + std::to_string(p.size()) + ")");
    }
  }
  auto sorted = patterns;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("repeated pattern in set");
  }
  return PatternSet(static_cast<int>(k), std::move(patterns), provenance::AdHoc{});
}

bool PatternSet::contains(const Permutation& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

std::string PatternSet::describe() const {
  struct Visitor {
    const PatternSet& self;
    std::string operator()(const provenance::Tkm& t) const {
      return "Tkm(" + std::to_string(t.k) + "," + std::to_string(t.m) + ")";
    }
    std::string operator()(const provenance::Mkm& t) const {
      return "M(" + std::to_string(t.k) + "," + std::to_string(t.m) + ";" +
             t.tau.to_compact_string() + ")";
    }
    std::string operator()(const provenance::UnionTkm& t) const {
      std::string out = "U(" + std::to_string(t.k) + ";";
      for (std::size_t i = 0; i < t.ms.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.ms[i]);
      }
      return out + ")";
    }
    std::string operator()(const provenance::AdHoc&) const {
      std::string out = "{";
      for (std::size_t i = 0; i < self.patterns_.size(); ++i) {
        if (i) out += ',';
        const auto& p = self.patterns_[i];
        out += p.size() > 9 ? p.to_string() : p.to_compact_string();
      }
      return out + "}";
    }
  };
  return std::visit(Visitor{*this}, provenance_);
}

PatternSet build_Tkm(int k, int m) {
  check_k(k);
  check_m(k, m);
  return PatternSet(k, starting_with(k, m), provenance::Tkm{k, m});
}

PatternSet build_M(int k, int m, const Permutation& tau) {
  check_k(k);
  check_m(k, m);
  if (static_cast<int>(tau.size()) != k || tau.front() != m) {
    throw std::invalid_argument("tau=" + tau.to_string() + " is not in Tkm(" +
                                std::to_string(k) + "," + std::to_string(m) + ")");
  }
  auto patterns = starting_with(k, m);
  std::erase(patterns, tau);
  return PatternSet(k, std::move(patterns), provenance::Mkm{k, m, tau});
}

PatternSet build_union_Tkm(int k, const std::vector<int>& ms) {
  check_k(k);
  if (ms.empty()) throw std::invalid_argument("union needs at least one m");
  std::vector<Permutation> patterns;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    check_m(k, ms[i]);
    if (i > 0 && ms[i] <= ms[i - 1]) {
      throw std::invalid_argument("union indices must be strictly increasing");
    }
    auto part = starting_with(k, ms[i]);
    patterns.insert(patterns.end(), part.begin(), part.end());
  }
  return PatternSet(k, std::move(patterns), provenance::UnionTkm{k, ms});
}

bool avoids_all(const Permutation& p, const PatternSet& set) {
  for (const auto& matcher : set.matchers()) {
    if (matcher.count(p.values(), 1) != 0) return false;
  }
  return true;
}

bool contains_exactly_once(const Permutation& p, const Permutation& tau,
                           const PatternSet& avoid) {
  if (const auto* m = std::get_if<provenance::Mkm>(&avoid.provenance())) {
    if (m->tau != tau) {
      throw std::invalid_argument("avoidance set " + avoid.describe() +
                                  " was not built from tau=" + tau.to_string());
    }
  }
  if (!avoids_all(p, avoid)) return false;
  return PatternMatcher(tau).count(p.values(), 2) == 1;
}

PatternSet parse_set_expression(std::string_view text) {
  const auto expr = trim(text);
  if (expr.empty()) throw std::invalid_argument("empty set expression");

  if (expr.front() == '{') {
    if (expr.back() != '}') throw std::invalid_argument("unterminated brace list");
    std::vector<Permutation> patterns;
    for (auto token : split(expr.substr(1, expr.size() - 2), ',')) {
      patterns.push_back(parse_pattern_token(token));
    }
    return PatternSet::adhoc(std::move(patterns));
  }
  if (auto args = call_arguments(expr, "Tkm")) {
    auto parts = split(*args, ',');
    if (parts.size() != 2) throw std::invalid_argument("Tkm expects (k,m)");
    return build_Tkm(parse_int(parts[0]), parse_int(parts[1]));
  }
  if (auto args = call_arguments(expr, "M")) {
    auto halves = split(*args, ';');
    if (halves.size() != 2) throw std::invalid_argument("M expects (k,m;tau)");
    auto km = split(halves[0], ',');
    if (km.size() != 2) throw std::invalid_argument("M expects (k,m;tau)");
    return build_M(parse_int(km[0]), parse_int(km[1]), parse_pattern_token(halves[1]));
  }
  if (auto args = call_arguments(expr, "U")) {
    auto halves = split(*args, ';');
    if (halves.size() != 2) throw std::invalid_argument("U expects (k;m1,m2,...)");
    std::vector<int> ms;
    for (auto token : split(halves[1], ',')) ms.push_back(parse_int(token));
    return build_union_Tkm(parse_int(halves[0]), ms);
  }
  throw std::invalid_argument("unrecognized set expression \"" + std::string(expr) + "\"");
}

}  // namespace permpat
