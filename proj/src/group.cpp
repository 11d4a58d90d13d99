#include "hamwalk/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace hamwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::EmptyGenSet: return "EmptyGenSet";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::StructureNotPxA: return "StructureNotPxA";
    case ErrorKind::ValenceTooLarge: return "ValenceTooLarge";
    case ErrorKind::CosetConditionViolated: return "CosetConditionViolated";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::EmptyWalk: return "EmptyWalk";
    case ErrorKind::NoPivotFound: return "NoPivotFound";
    case ErrorKind::SpliceVerificationFailed: return "SpliceVerificationFailed";
    case ErrorKind::ProviderFailed: return "ProviderFailed";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::UnsupportedByPaper: return "UnsupportedByPaper";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Arithmetic

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::optional<unsigned> prime_power_base(std::uint64_t n) {
  auto ps = prime_factors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

// ---------------------------------------------------------------------------
// Group

Group Group::trusted(std::size_t order, std::vector<Elem> table,
                     std::vector<std::string> labels, std::string name) {
  Group g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.fill_inverses();
  return g;
}

void Group::fill_inverses() {
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == kIdentity) {
        inverse_[a] = b;
        break;
      }
}

Group Group::from_table(const std::vector<std::vector<Elem>>& table,
                        std::vector<std::string> labels, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw Error(ErrorKind::NotAGroup, "table is not square (row " + std::to_string(r) + ")");
    for (Elem x : table[r])
      if (x >= n)
        throw Error(ErrorKind::NotAGroup, "entry " + std::to_string(x) + " out of range");
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != n)
    throw Error(ErrorKind::NotAGroup, "label count does not match table order");

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::NotAGroup, "no identity element");

  // swap the identity into slot 0
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[*identity]);
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[perm[a] * n + perm[b]] = perm[table[a][b]];
  std::swap(labels[0], labels[*identity]);

  Group g = trusted(n, std::move(flat), std::move(labels), std::move(name));
  if (auto why = g.validate(); !why.empty()) throw Error(ErrorKind::NotAGroup, why);
  return g;
}

std::string Group::validate() const {
  const std::size_t n = order_;
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[mul(a, b)]) return "row " + labels_[a] + " is not a permutation";
      seen[mul(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[mul(b, a)]) return "column " + labels_[a] + " is not a permutation";
      seen[mul(b, a)] = 1;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) return "element 0 is not the identity";
    if (mul(a, inverse_[a]) != 0 || mul(inverse_[a], a) != 0)
      return "element " + labels_[a] + " has no two-sided inverse";
  }
  auto check = [&](Elem a, Elem b, Elem c) -> std::string {
    if (mul(mul(a, b), c) == mul(a, mul(b, c))) return {};
    return "associativity fails for (" + labels_[a] + ", " + labels_[b] + ", " +
           labels_[c] + ")";
  };
  if (n <= 512) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = mul(a, b);
        for (Elem c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return check(a, b, c);
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (int i = 0; i < (1 << 20); ++i)
      if (auto why = check(pick(rng), pick(rng), pick(rng)); !why.empty()) return why;
  }
  return {};
}

Elem Group::pow(Elem a, std::uint64_t k) const {
  Elem result = kIdentity;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> Group::find(std::string_view label) const {
  for (Elem a = 0; a < order_; ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

bool Group::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Elem>> Group::table() const {
  std::vector<std::vector<Elem>> out(order_, std::vector<Elem>(order_));
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

Group group_from_table(const std::vector<std::vector<Elem>>& table,
                       std::vector<std::string> labels, std::string name) {
  return Group::from_table(table, std::move(labels), std::move(name));
}

std::string cycle_notation(std::span<const std::uint32_t> perm) {
  std::vector<char> done(perm.size());
  std::ostringstream out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

Group group_from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                              std::size_t cap, std::string name) {
  using Perm = std::vector<std::uint32_t>;
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != degree)
      throw Error(ErrorKind::InvalidArgument, "generators act on different degrees");
    std::vector<char> hit(degree);
    for (auto x : p) {
      if (x >= degree || hit[x])
        throw Error(ErrorKind::InvalidArgument, "generator is not a bijection");
      hit[x] = 1;
    }
  }
  // x * y means "apply x, then y": (x*y)[i] = y[x[i]]
  auto compose = [](const Perm& x, const Perm& y) {
    Perm z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = y[x[i]];
    return z;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      Perm z = compose(elems[head], s);
      if (index.contains(z)) continue;
      if (elems.size() >= cap)
        throw Error(ErrorKind::OrderCapExceeded,
                    "closure exceeds cap " + std::to_string(cap));
      index.emplace(z, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(z));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return Group::trusted(n, std::move(flat), std::move(labels), std::move(name));
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::from_members(std::size_t parent_order, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h;
  h.mask_.assign(parent_order, false);
  for (Elem x : members) h.mask_[x] = true;
  h.members_ = std::move(members);
  return h;
}

Subgroup Subgroup::trivial(std::size_t parent_order) {
  return from_members(parent_order, {kIdentity});
}

Subgroup Subgroup::whole(std::size_t parent_order) {
  std::vector<Elem> all(parent_order);
  std::iota(all.begin(), all.end(), 0);
  return from_members(parent_order, std::move(all));
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem x) { return other.contains(x); });
}

// ---------------------------------------------------------------------------
// GenSet

GenSet::GenSet(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i].label == entries_[j].label)
        throw Error(ErrorKind::InvalidArgument, "duplicate generator label " + entries_[i].label);
}

GenSet GenSet::from_labels(const Group& g, std::span<const std::string> labels) {
  std::vector<Entry> entries;
  for (const auto& l : labels) {
    auto x = g.find(l);
    if (!x) throw Error(ErrorKind::InvalidArgument, "unknown element label '" + l + "'");
    entries.push_back({l, *x});
  }
  return GenSet(std::move(entries));
}

GenSet GenSet::from_elements(const Group& g, std::span<const Elem> elements) {
  std::vector<Entry> entries;
  for (Elem x : elements) {
    if (x >= g.order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    entries.push_back({g.label(x), x});
  }
  return GenSet(std::move(entries));
}

std::vector<Elem> GenSet::elements() const {
  std::vector<Elem> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.element);
  return out;
}

std::vector<std::string> GenSet::labels() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

std::optional<std::size_t> GenSet::find(std::string_view label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label == label) return i;
  return std::nullopt;
}

GenSet GenSet::subset(std::span<const std::size_t> positions) const {
  std::vector<Entry> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(entries_.at(p));
  return GenSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Kernel operations

std::uint64_t element_order(const Group& g, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != kIdentity; y = g.mul(y, x)) ++k;
  return k;
}

Subgroup generated_subgroup(const Group& g, std::span<const Elem> xs) {
  const std::size_t n = g.order();
  std::vector<char> in(n);
  std::vector<Elem> members{kIdentity};
  in[kIdentity] = 1;
  std::vector<Elem> gens;
  for (Elem x : xs) {
    if (in[x]) continue;
    gens.push_back(x);
    // Re-close: right-multiplying the current subgroup by every generator.
    std::deque<Elem> queue(members.begin(), members.end());
    while (!queue.empty()) {
      Elem y = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        Elem z = g.mul(y, s);
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }
  return Subgroup::from_members(n, std::move(members));
}

namespace {

// A short generating list for `h`, found greedily in member order.
std::vector<Elem> small_generators(const Group& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup cur = Subgroup::trivial(g.order());
  for (Elem x : h.members()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generated_subgroup(g, gens);
    if (cur.order() == h.order()) break;
  }
  return gens;
}

bool normalizes(const Group& g, Elem x, const Subgroup& h, std::span<const Elem> hgens) {
  return std::all_of(hgens.begin(), hgens.end(),
                     [&](Elem y) { return h.contains(g.conj(y, x)); });
}

}  // namespace

bool generates(const Group& g, std::span<const Elem> xs) {
  return generated_subgroup(g, xs).order() == g.order();
}

Subgroup arc_forcing_subgroup(const Group& g, const GenSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenSet, "arc-forcing subgroup of an empty set");
  std::vector<Elem> diffs;
  for (const auto& a : s.entries())
    for (const auto& b : s.entries()) diffs.push_back(g.mul(g.inv(a.element), b.element));
  Subgroup h = generated_subgroup(g, diffs);
  for (const auto& a : s.entries()) {
    std::vector<Elem> shifted;
    for (const auto& b : s.entries()) shifted.push_back(g.mul(g.inv(a.element), b.element));
    if (!(generated_subgroup(g, shifted) == h))
      throw Error(ErrorKind::InternalInvariantViolation,
                  "<a^-1 S> differs from <S^-1 S> for a = " + a.label);
  }
  return h;
}

CosetTable right_cosets(const Group& g, const Subgroup& h) {
  const std::size_t n = g.order();
  CosetTable t;
  constexpr Elem unset = static_cast<Elem>(-1);
  t.coset_of.assign(n, unset);
  for (Elem x = 0; x < n; ++x) {
    if (t.coset_of[x] != unset) continue;
    const auto c = static_cast<Elem>(t.representative.size());
    t.representative.push_back(x);
    for (Elem y : h.members()) t.coset_of[g.mul(y, x)] = c;
  }
  return t;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  auto hgens = small_generators(g, h);
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (normalizes(g, x, h, hgens)) out.push_back(x);
  return Subgroup::from_members(g.order(), std::move(out));
}

Subgroup normal_closure(const Group& g, const Subgroup& h) {
  auto hgens = small_generators(g, h);
  std::vector<Elem> conjugates;
  for (Elem y : hgens)
    for (Elem x = 0; x < g.order(); ++x) conjugates.push_back(g.conj(y, x));
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return generated_subgroup(g, conjugates);
}

Subgroup commutator_subgroup(const Group& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generated_subgroup(g, comms);
}

bool is_normal_in(const Group& g, const Subgroup& n, const Subgroup& k) {
  auto ngens = small_generators(g, n);
  auto kgens = small_generators(g, k);
  return std::all_of(kgens.begin(), kgens.end(),
                     [&](Elem x) { return normalizes(g, x, n, ngens); });
}

SylowDecomposition sylow_decomposition(const Group& g) {
  const std::size_t n = g.order();
  SylowDecomposition d;
  std::vector<std::uint64_t> orders(n);
  for (Elem x = 0; x < n; ++x) orders[x] = element_order(g, x);

  std::uint64_t product = 1;
  bool closed_all = true;
  for (unsigned p : prime_factors(n)) {
    SylowFactor f{p, {}, std::nullopt};
    for (Elem x = 0; x < n; ++x) {
      auto o = orders[x];
      while (o % p == 0) o /= p;
      if (o == 1) f.elements.push_back(x);
    }
    std::vector<char> in(n);
    for (Elem x : f.elements) in[x] = 1;
    bool closed = true;
    for (Elem a : f.elements) {
      for (Elem b : f.elements)
        if (!in[g.mul(a, b)]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) {
      f.subgroup = Subgroup::from_members(n, f.elements);
      product *= f.elements.size();
    }
    closed_all = closed_all && closed;
    d.factors.push_back(std::move(f));
  }

  bool commute = closed_all;
  for (std::size_t i = 0; commute && i < d.factors.size(); ++i)
    for (std::size_t j = i + 1; commute && j < d.factors.size(); ++j)
      for (Elem a : d.factors[i].elements) {
        for (Elem b : d.factors[j].elements)
          if (g.mul(a, b) != g.mul(b, a)) {
            commute = false;
            break;
          }
        if (!commute) break;
      }
  d.nilpotent = closed_all && commute && product == n;
  return d;
}

Elem prime_component(const Group& g, Elem x, unsigned p) {
  const std::uint64_t ord = element_order(g, x);
  std::uint64_t pa = 1;
  std::uint64_t m = ord;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  if (pa == 1) return kIdentity;
  // e = m * (m^-1 mod p^a): e = 1 mod p^a, e = 0 mod m
  std::uint64_t minv = 1;
  while ((m * minv) % pa != 1 % pa) ++minv;
  return g.pow(x, m * minv);
}

QuotientGroup quotient_group(const Group& g, const Subgroup& k, const Subgroup& n) {
  if (!n.subset_of(k))
    throw Error(ErrorKind::InvalidArgument, "kernel is not contained in the base subgroup");
  {
    auto ngens = small_generators(g, n);
    for (Elem x : k.members())
      for (Elem y : ngens)
        if (!n.contains(g.conj(y, x)))
          throw Error(ErrorKind::NotNormal, "conjugating " + g.label(y) + " by " + g.label(x) +
                                                " leaves the subgroup");
  }
  QuotientGroup q;
  q.base = k;
  q.kernel = n;
  q.project.assign(g.order(), QuotientGroup::kNone);
  for (Elem x : k.members()) {
    if (q.project[x] != QuotientGroup::kNone) continue;
    const auto c = static_cast<Elem>(q.section.size());
    q.section.push_back(x);
    for (Elem y : n.members()) q.project[g.mul(y, x)] = c;
  }
  const std::size_t m = q.section.size();
  std::vector<Elem> flat(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      flat[a * m + b] = q.project[g.mul(q.section[a], q.section[b])];
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem rep : q.section)
    labels.push_back(n.is_trivial() ? g.label(rep) : "[" + g.label(rep) + "]");
  std::string name = g.name().empty() ? "quotient" : g.name() + "/N";
  q.group = Group::trusted(m, std::move(flat), std::move(labels), std::move(name));
  return q;
}

QuotientGroup quotient_group(const Group& g, const Subgroup& n) {
  return quotient_group(g, Subgroup::whole(g.order()), n);
}

QuotientGroup subgroup_as_group(const Group& g, const Subgroup& k) {
  return quotient_group(g, k, Subgroup::trivial(g.order()));
}

GenSet reduce_generating_set(const Group& g, const GenSet& s) {
  auto elems = s.elements();
  if (!generates(g, elems))
    throw Error(ErrorKind::NotGenerating, "the generating set does not generate the group");
  std::vector<std::size_t> scan(s.size());
  std::iota(scan.begin(), scan.end(), 0);
  std::stable_sort(scan.begin(), scan.end(),
                   [&](std::size_t a, std::size_t b) { return s[a].element < s[b].element; });
  std::vector<char> keep(s.size(), 1);
  for (std::size_t pos : scan) {
    keep[pos] = 0;
    std::vector<Elem> rest;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (keep[i]) rest.push_back(s[i].element);
    if (!generates(g, rest)) keep[pos] = 1;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (keep[i]) kept.push_back(i);
  return s.subset(kept);
}

}  // namespace hamwalk
