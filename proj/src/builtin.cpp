#include "hamwalk/builtin.hpp"

#include <array>
#include <charconv>
#include <map>
#include <numeric>

namespace hamwalk::builtin {

namespace {

// Breadth-first closure of `gens` from `id` under `mul`; indices follow
// discovery order, identity first.
template <class T, class Mul, class Label>
Group close(std::string name, const T& id, const std::vector<T>& gens, Mul mul, Label label,
            std::size_t cap) {
  std::map<T, Elem> index{{id, 0}};
  std::vector<T> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const T& s : gens) {
      T z = mul(elems[head], s);
      if (index.contains(z)) continue;
      if (elems.size() >= cap)
        throw Error(ErrorKind::OrderCapExceeded, name + " exceeds cap " + std::to_string(cap));
      index.emplace(z, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(z));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = index.at(mul(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(label(e));
  return Group::trusted(n, std::move(flat), std::move(labels), std::move(name));
}

std::string power(std::string_view sym, unsigned k) {
  if (k == 0) return {};
  if (k == 1) return std::string(sym);
  return std::string(sym) + "^" + std::to_string(k);
}

std::string or_identity(std::string s, std::string_view id = "e") {
  return s.empty() ? std::string(id) : s;
}

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::FormatError, "bad number in builtin group name '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

using Pair = std::pair<unsigned, unsigned>;

}  // namespace

Group cyclic(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  return close<unsigned>(
      "cyclic:" + std::to_string(n), 0u, {n == 1 ? 0u : 1u},
      [n](unsigned a, unsigned b) { return (a + b) % n; },
      [](unsigned a) { return std::to_string(a); }, n);
}

Group dihedral(unsigned order) {
  if (order < 4 || order % 2)
    throw Error(ErrorKind::InvalidArgument, "dihedral order must be even and >= 4");
  const unsigned n = order / 2;
  auto mul = [n](const Pair& x, const Pair& y) {
    unsigned k = x.second ? (x.first + n - y.first) % n : (x.first + y.first) % n;
    return Pair{k, x.second ^ y.second};
  };
  auto label = [](const Pair& x) {
    return or_identity(power("r", x.first) + (x.second ? "f" : ""));
  };
  return close<Pair>("dihedral:" + std::to_string(order), {0, 0}, {{1, 0}, {0, 1}}, mul, label,
                     order);
}

Group quaternion(unsigned order) {
  if (order < 8 || (order & (order - 1)))
    throw Error(ErrorKind::InvalidArgument, "quaternion order must be a power of 2, >= 8");
  const unsigned n = order / 4;  // x has order 2n, y^2 = x^n
  auto mul = [n](const Pair& a, const Pair& b) {
    unsigned k = a.second ? (a.first + 2 * n - b.first) % (2 * n) : (a.first + b.first) % (2 * n);
    unsigned e = a.second + b.second;
    if (e == 2) {
      k = (k + n) % (2 * n);
      e = 0;
    }
    return Pair{k, e};
  };
  auto label = [order](const Pair& a) -> std::string {
    if (order == 8) {
      static const char* names[2][4] = {{"1", "i", "-1", "-i"}, {"j", "k", "-j", "-k"}};
      return names[a.second][a.first];
    }
    return or_identity(power("x", a.first) + (a.second ? "y" : ""));
  };
  return close<Pair>(order == 8 ? "q8" : "quaternion:" + std::to_string(order), {0, 0},
                     {{1, 0}, {0, 1}}, mul, label, order);
}

Group modular(unsigned order) {
  if (order < 16 || (order & (order - 1)))
    throw Error(ErrorKind::InvalidArgument, "modular order must be a power of 2, >= 16");
  const unsigned n = order / 2;
  const unsigned s = order / 4 + 1;
  auto mul = [n, s](const Pair& a, const Pair& b) {
    unsigned k = a.second ? (a.first + s * b.first) % n : (a.first + b.first) % n;
    return Pair{k, a.second ^ b.second};
  };
  auto label = [](const Pair& a) {
    return or_identity(power("a", a.first) + (a.second ? "b" : ""));
  };
  return close<Pair>("modular:" + std::to_string(order), {0, 0}, {{1, 0}, {0, 1}}, mul, label,
                     order);
}

Group heisenberg(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "heisenberg group needs a prime");
  using Triple = std::array<unsigned, 3>;
  auto mul = [p](const Triple& a, const Triple& b) {
    return Triple{(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p};
  };
  auto label = [](const Triple& a) {
    return or_identity(power("x", a[0]) + power("y", a[1]) + power("z", a[2]));
  };
  return close<Triple>("heisenberg:" + std::to_string(p), {0, 0, 0}, {{1, 0, 0}, {0, 1, 0}}, mul,
                       label, static_cast<std::size_t>(p) * p * p);
}

Group elementary(unsigned p, unsigned k) {
  Group g = direct_product(std::vector<Group>(k, cyclic(p)));
  g.set_name("elementary:" + std::to_string(p) + "," + std::to_string(k));
  return g;
}

Group symmetric(unsigned n, std::size_t cap) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "symmetric group needs n >= 2");
  std::vector<std::uint32_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return group_from_permutations({swap, cycle}, cap, "symmetric:" + std::to_string(n));
}

Group direct_product(const std::vector<Group>& factors) {
  if (factors.empty()) return cyclic(1);
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.order();
  // first factor is the most significant digit
  auto digits = [&](Elem x) {
    std::vector<Elem> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = x % factors[i].order();
      x /= factors[i].order();
    }
    return d;
  };
  auto compose = [&](const std::vector<Elem>& d) {
    Elem x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i].order() + d[i];
    return x;
  };
  std::vector<std::vector<Elem>> all(n);
  for (Elem x = 0; x < n; ++x) all[x] = digits(x);
  std::vector<Elem> flat(n * n);
  std::vector<Elem> d(factors.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i)
        d[i] = factors[i].mul(all[a][i], all[b][i]);
      flat[a * n + b] = compose(d);
    }
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += factors[i].label(all[x][i]);
    }
    labels[x] = s + ")";
  }
  std::string name = "product:";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) name += ",";
    name += factors[i].name();
  }
  return Group::trusted(n, std::move(flat), std::move(labels), std::move(name));
}

SemidirectFixture semidirect_fixture(unsigned p, std::size_t cap) {
  if (!is_prime(p) || p % 6 != 1)
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not a prime congruent to 1 mod 6");
  if (6ull * p > cap)
    throw Error(ErrorKind::OrderCapExceeded, "fixture order exceeds cap " + std::to_string(cap));
  unsigned zeta = 0;
  for (unsigned z = 2; z < p && !zeta; ++z) {
    std::uint64_t w = 1;
    unsigned ord = 0;
    do {
      w = w * z % p;
      ++ord;
    } while (w != 1);
    if (ord == 6) zeta = z;
  }
  std::vector<unsigned> zpow(6, 1);
  for (unsigned i = 1; i < 6; ++i) zpow[i] = static_cast<unsigned>(std::uint64_t(zpow[i - 1]) * zeta % p);
  // (x1, y1)(x2, y2) = (x1 + x2, y1 zeta^x2 + y2)
  auto mul = [p, zpow](const Pair& a, const Pair& b) {
    return Pair{(a.first + b.first) % 6,
                static_cast<unsigned>((std::uint64_t(a.second) * zpow[b.first] + b.second) % p)};
  };
  auto label = [](const Pair& a) { return or_identity(power("u", a.first) + power("t", a.second)); };
  SemidirectFixture f{close<Pair>("semidirect:" + std::to_string(p), {0, 0}, {{1, 0}, {0, 1}},
                                  mul, label, cap),
                      0, 0};
  f.a = *f.group.find(label(Pair{3, 0}));
  f.b = *f.group.find(label(Pair{2, 1}));
  return f;
}

namespace {

Group short_name(std::string_view s, std::string_view whole, std::size_t cap) {
  if (s == "q8") return quaternion(8);
  if (s.size() < 2) throw Error(ErrorKind::FormatError, "unknown builtin group '" + std::string(whole) + "'");
  const char c = s.front();
  auto rest = s.substr(1);
  switch (c) {
    case 'z': return cyclic(parse_unsigned(rest, whole));
    case 'd': return dihedral(parse_unsigned(rest, whole));
    case 'q': return quaternion(parse_unsigned(rest, whole));
    case 'm': return modular(parse_unsigned(rest, whole));
    case 's': return symmetric(parse_unsigned(rest, whole), cap);
    case 'h': {
      unsigned n = parse_unsigned(rest, whole);
      for (unsigned p = 2; p * p * p <= n; ++p)
        if (p * p * p == n && is_prime(p)) return heisenberg(p);
      break;
    }
    case 'e': {  // e2^3
      auto parts = split(rest, '^');
      if (parts.size() == 2) return elementary(parse_unsigned(parts[0], whole), parse_unsigned(parts[1], whole));
      break;
    }
    default: break;
  }
  throw Error(ErrorKind::FormatError, "unknown builtin group '" + std::string(whole) + "'");
}

}  // namespace

Group by_name(std::string_view whole, std::size_t cap) {
  std::string_view name = whole;
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  auto colon = name.find(':');
  Group g;
  if (colon == std::string_view::npos) {
    g = short_name(name, whole, cap);
  } else {
    auto kind = name.substr(0, colon);
    auto arg = name.substr(colon + 1);
    if (kind == "cyclic") g = cyclic(parse_unsigned(arg, whole));
    else if (kind == "dihedral") g = dihedral(parse_unsigned(arg, whole));
    else if (kind == "quaternion") g = quaternion(parse_unsigned(arg, whole));
    else if (kind == "modular") g = modular(parse_unsigned(arg, whole));
    else if (kind == "heisenberg") g = heisenberg(parse_unsigned(arg, whole));
    else if (kind == "symmetric") g = symmetric(parse_unsigned(arg, whole), cap);
    else if (kind == "semidirect") g = semidirect_fixture(parse_unsigned(arg, whole), cap).group;
    else if (kind == "elementary") {
      auto parts = split(arg, ',');
      if (parts.size() != 2) throw Error(ErrorKind::FormatError, "elementary:p,k expected");
      g = elementary(parse_unsigned(parts[0], whole), parse_unsigned(parts[1], whole));
    } else if (kind == "product") {
      std::vector<Group> factors;
      for (auto part : split(arg, ',')) factors.push_back(short_name(part, whole, cap));
      g = direct_product(factors);
    } else {
      throw Error(ErrorKind::FormatError, "unknown builtin group '" + std::string(whole) + "'");
    }
  }
  if (g.order() > cap)
    throw Error(ErrorKind::OrderCapExceeded, std::string(whole) + " exceeds cap " + std::to_string(cap));
  g.set_name(std::string(name));
  return g;
}

}  // namespace hamwalk::builtin
