#pragma once

// Naive reference computations used as oracles by the tests. They work from
// the multiplication table only and share no code with the library.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamwalk/builtin.hpp"
#include "hamwalk/digraph.hpp"
#include "hamwalk/group.hpp"

namespace naive {

using hamwalk::Elem;
using hamwalk::Group;

inline Elem el(const Group& g, const std::string& label) {
  auto x = g.find(label);
  if (!x) throw std::runtime_error("no element " + label + " in " + g.name());
  return *x;
}

inline std::vector<Elem> els(const Group& g, const std::vector<std::string>& labels) {
  std::vector<Elem> out;
  for (const auto& l : labels) out.push_back(el(g, l));
  return out;
}

inline std::set<std::string> label_set(const Group& g, const std::vector<Elem>& xs) {
  std::set<std::string> out;
  for (Elem x : xs) out.insert(g.label(x));
  return out;
}

inline std::size_t order(const Group& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

inline Elem inverse(const Group& g, Elem x) {
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == 0) return y;
  throw std::runtime_error("no inverse");
}

// Fixpoint of pairwise products, starting from {e} + xs.
inline std::vector<Elem> closure(const Group& g, std::vector<Elem> xs) {
  std::set<Elem> s(xs.begin(), xs.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

inline bool contains(const std::vector<Elem>& sorted, Elem x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline bool normal_in(const Group& g, const std::vector<Elem>& n, const std::vector<Elem>& k) {
  for (Elem x : k)
    for (Elem h : n)
      if (!contains(n, g.mul(g.mul(inverse(g, x), h), x))) return false;
  return true;
}

inline std::vector<Elem> all(const Group& g) {
  std::vector<Elem> out(g.order());
  for (Elem i = 0; i < g.order(); ++i) out[i] = i;
  return out;
}

inline bool is_prime_power(std::size_t n) {
  if (n < 2) return n == 1;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Elements reached by following the steps from the identity, right
// multiplying; a path needs all |G| distinct, a cycle also returns home.
inline bool ham_on_elements(const Group& g, const std::vector<Elem>& steps, bool cycle) {
  std::vector<Elem> seen{0};
  Elem cur = 0;
  for (Elem s : steps) {
    cur = g.mul(cur, s);
    seen.push_back(cur);
  }
  if (cycle) {
    if (steps.size() != g.order() || seen.back() != 0) return false;
    seen.pop_back();
  } else if (steps.size() + 1 != g.order()) {
    return false;
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

inline std::vector<Elem> step_elements(const hamwalk::GenSet& s, const hamwalk::Walk& w) {
  std::vector<Elem> out;
  for (auto e : w.steps) out.push_back(s[e].element);
  return out;
}

inline std::vector<std::string> steps(const hamwalk::GenSet& s, const hamwalk::Walk& w) {
  return hamwalk::step_labels(s, w);
}

inline std::vector<std::string> words(std::initializer_list<const char*> xs) {
  return {xs.begin(), xs.end()};
}

template <class F>
std::optional<hamwalk::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const hamwalk::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace naive
