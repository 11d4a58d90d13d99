#include "hamwalk/engine.hpp"

#include <algorithm>
#include <bit>

namespace hamwalk {

namespace {

[[noreturn]] void invariant(const std::string& what) {
  throw Error(ErrorKind::InternalInvariantViolation, what);
}

Walk verified(const Group& g, const Subgroup& h, const GenSet& s, std::vector<std::size_t> steps,
              WalkKind kind, ErrorKind on_fail, const std::string& what) {
  CosetCayleyDigraph d(g, h, s);
  Walk w = trace_walk(d, 0, std::move(steps));
  if (!verify_hamiltonian(d, w, kind))
    throw Error(on_fail, what + " did not produce a hamiltonian " + std::string(to_string(kind)));
  return w;
}

Walk verified_top(const Group& g, const GenSet& s, std::vector<std::size_t> steps, WalkKind kind,
                  const std::string& what) {
  return verified(g, Subgroup::trivial(g.order()), s, std::move(steps), kind,
                  ErrorKind::SpliceVerificationFailed, what);
}

std::vector<std::size_t> repeat(std::size_t entry, std::size_t count) {
  return std::vector<std::size_t>(count, entry);
}

// Re-expresses steps over `from` as steps over `to`, matching labels.
std::vector<std::size_t> relabel(const std::vector<std::size_t>& steps, const GenSet& from,
                                 const GenSet& to) {
  std::vector<std::size_t> map(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto j = to.find(from[i].label);
    if (!j) invariant("label " + from[i].label + " lost while relabeling");
    map[i] = *j;
  }
  std::vector<std::size_t> out;
  out.reserve(steps.size());
  for (auto e : steps) out.push_back(map[e]);
  return out;
}

// The same entries, with elements pushed through a quotient projection.
GenSet project(const GenSet& s, const QuotientGroup& q) {
  std::vector<GenSet::Entry> out;
  for (const auto& e : s.entries()) {
    const Elem x = q.project[e.element];
    if (x == QuotientGroup::kNone) invariant("generator " + e.label + " lies outside the base subgroup");
    out.push_back({e.label, x});
  }
  return GenSet(std::move(out));
}

std::size_t least_entry(const GenSet& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].element < s[best].element) best = i;
  return best;
}

void require_generating(const Group& g, const GenSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenSet, "empty generating set");
  if (!generates(g, s.elements()))
    throw Error(ErrorKind::NotGenerating, "the generators do not generate " + g.name());
}

std::vector<Elem> prefix_products(const Group& g, const GenSet& s, const Walk& w) {
  std::vector<Elem> p{kIdentity};
  for (auto e : w.steps) p.push_back(g.mul(p.back(), s[e].element));
  return p;
}

std::size_t floor_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n) - 1; }

struct PGroupDepth {
  std::size_t depth = 0;
  std::size_t limit = 0;
};

Walk pgroup_impl(const Group& g, const GenSet& s, EngineStats* stats, PGroupDepth depth);

WalkSolver pgroup_solver(EngineStats* stats) {
  return [stats](const Group& q, const GenSet& t, WalkKind kind) {
    Walk w = pgroup_impl(q, t, stats, {0, floor_log2(q.order())});
    return kind == WalkKind::Path ? trim_last(w) : w;
  };
}

// Base a-cycle on G/H^G, then the skewed lift down the series, then the
// final lift onto Cay(G;S) using `provider` on Cay(H; skewed generators).
Walk fold(const Group& g, const GenSet& s, const Subgroup& h, SeriesMode mode,
          const WalkSolver& provider, WalkKind kind, EngineStats* stats,
          const WalkSolver& layer_solver) {
  SubnormalSeries series;
  try {
    series = build_subnormal_series(g, h, mode);
  } catch (const Error& e) {
    if (stats && e.kind() == ErrorKind::InternalInvariantViolation) ++stats->series_violations;
    throw;
  }
  if (stats) {
    ++stats->series_built;
    stats->ledger_fallbacks += series.ledger_fallbacks;
  }

  const std::size_t a = least_entry(s);
  const Subgroup& top = series.top();
  Walk base = verified(g, top, s, repeat(a, g.order() / top.order()), WalkKind::Cycle,
                       ErrorKind::InternalInvariantViolation, "the a-cycle on G/H^G");
  for (std::size_t k = series.length() - 1; k-- > 0;)
    base = skewed_splice(g, s, series.chain[k + 1], series.chain[k], base, layer_solver,
                         WalkKind::Cycle, stats);
  return skewed_splice(g, s, series.chain.front(), Subgroup::trivial(g.order()), base, provider,
                       kind, stats);
}

Walk pgroup_impl(const Group& g, const GenSet& s, EngineStats* stats, PGroupDepth depth) {
  if (g.order() > 1 && !prime_power_base(g.order()))
    throw Error(ErrorKind::NotPrimePower, "order " + std::to_string(g.order()) + " is not a prime power");
  require_generating(g, s);
  if (depth.depth > depth.limit) invariant("p-group recursion deeper than log2|G|");
  if (stats) stats->max_pgroup_depth = std::max(stats->max_pgroup_depth, depth.depth);

  if (g.order() == 1) return verified_top(g, s, {0}, WalkKind::Cycle, "trivial p-group cycle");

  const GenSet r = reduce_generating_set(g, s);
  std::vector<std::size_t> steps;
  if (r.size() == 1) {
    steps = repeat(0, g.order());
  } else {
    const Subgroup h = arc_forcing_subgroup(g, r);
    if (h.is_whole()) invariant("arc-forcing subgroup of a minimal p-group generating set is everything");
    WalkSolver recurse = [stats, depth, &g](const Group& q, const GenSet& t, WalkKind kind) {
      if (q.order() >= g.order()) invariant("p-group recursion did not shrink the group");
      Walk w = pgroup_impl(q, t, stats, {depth.depth + 1, depth.limit});
      return kind == WalkKind::Path ? trim_last(w) : w;
    };
    steps = fold(g, r, h, SeriesMode::Nilpotent, recurse, WalkKind::Cycle, stats, recurse).steps;
  }
  return verified_top(g, s, relabel(steps, r, s), WalkKind::Cycle, "pgroup_ham_cycle");
}

Walk pxa_impl(const Group& g, const GenSet& s, EngineStats* stats);

}  // namespace

// ---------------------------------------------------------------------------

Walk product_splice(const Group& g, const GenSet& s, const Subgroup& n,
                    const std::vector<std::string>& n_path,
                    const std::vector<std::string>& q_path) {
  if (!is_normal_in(g, n, Subgroup::whole(g.order())))
    throw Error(ErrorKind::NotNormal, "product splice needs a normal subgroup");
  auto index = [&](const std::string& label) {
    auto i = s.find(label);
    if (!i) throw Error(ErrorKind::InvalidArgument, "label " + label + " is not a generator");
    return *i;
  };
  std::vector<std::size_t> inner;
  for (const auto& l : n_path) inner.push_back(index(l));
  std::vector<std::size_t> steps;
  for (std::size_t j = 0; j <= q_path.size(); ++j) {
    steps.insert(steps.end(), inner.begin(), inner.end());
    if (j < q_path.size()) steps.push_back(index(q_path[j]));
  }
  return verified_top(g, s, std::move(steps), WalkKind::Path, "product_splice");
}

Walk abelian_ham_path(const Group& g, const GenSet& s) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, g.name() + " is not abelian");
  require_generating(g, s);
  if (g.order() == 1) return verified_top(g, s, {}, WalkKind::Path, "abelian_ham_path");

  // A single generating entry gives the directed path outright.
  for (std::size_t i = 0; i < s.size(); ++i)
    if (element_order(g, s[i].element) == g.order())
      return verified_top(g, s, repeat(i, g.order() - 1), WalkKind::Path, "abelian_ham_path");

  std::vector<std::size_t> head(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) head[i] = i;
  const GenSet rest = s.subset(head);
  const Subgroup n = generated_subgroup(g, rest.elements());
  const QuotientGroup nq = subgroup_as_group(g, n);
  const GenSet rest_n = project(rest, nq);
  const Walk n_walk = abelian_ham_path(nq.group, rest_n);

  const std::vector<std::string> q_path(g.order() / n.order() - 1, s[s.size() - 1].label);
  return product_splice(g, s, n, step_labels(rest_n, n_walk), q_path);
}

GenSet skewed_generators(const Group& g, const GenSet& s, const QuotientGroup& q,
                         const Walk& base, std::size_t j) {
  const auto p = prefix_products(g, s, base);
  const std::size_t m = base.steps.size();
  // suffix s_{j+1} ... s_m
  const Elem suffix = g.mul(g.inv(p[j]), p[m]);
  std::vector<GenSet::Entry> out;
  for (const auto& e : s.entries()) {
    const Elem x = g.mul(g.mul(p[j - 1], e.element), suffix);
    const Elem img = q.project[x];
    if (img == QuotientGroup::kNone) invariant("skewed generator " + e.label + " leaves H+");
    out.push_back({e.label, img});
  }
  return GenSet(std::move(out));
}

Walk skewed_splice(const Group& g, const GenSet& s, const Subgroup& h_plus,
                   const Subgroup& h_minus, const Walk& base, const WalkSolver& solver,
                   WalkKind kind, EngineStats* stats) {
  const Subgroup h = arc_forcing_subgroup(g, s);
  if (!h.subset_of(h_plus))
    throw Error(ErrorKind::PreconditionFailed, "arc-forcing subgroup is not inside H+");
  if (kind == WalkKind::Path && !h_minus.is_trivial())
    throw Error(ErrorKind::PreconditionFailed, "path lifting needs a trivial H-");
  {
    CosetCayleyDigraph d(g, h_plus, s);
    if (base.start != 0 || !verify_hamiltonian(d, trace_walk(d, 0, base.steps), WalkKind::Cycle))
      throw Error(ErrorKind::PreconditionFailed, "base walk is not a hamiltonian cycle of H+\\Cay(G;S)");
  }
  const QuotientGroup q = quotient_group(g, h_plus, h_minus);
  if (stats) ++stats->splices;

  if (q.group.order() == 1) {
    Walk same = kind == WalkKind::Cycle ? base : trim_last(base);
    return verified(g, h_minus, s, same.steps, kind, ErrorKind::SpliceVerificationFailed,
                    "skewed_splice");
  }

  const auto p = prefix_products(g, s, base);
  const std::size_t m = base.steps.size();
  std::vector<Elem> hgens;
  for (const auto& e : s.entries()) hgens.push_back(g.mul(g.inv(s[0].element), e.element));

  // Pivot j: p_j H p_j^-1 lies in H+ and its image generates H+/H-.
  std::optional<std::size_t> pivot;
  const std::size_t lowest = kind == WalkKind::Path ? m : 1;
  for (std::size_t j = m; j >= lowest && !pivot; --j) {
    std::vector<Elem> gens = h_minus.members();
    bool inside = true;
    for (Elem x : hgens) {
      const Elem c = g.conj(x, g.inv(p[j]));  // p_j x p_j^-1
      inside = inside && h_plus.contains(c);
      gens.push_back(c);
    }
    if (inside && generated_subgroup(g, gens) == h_plus) pivot = j;
  }
  if (!pivot)
    throw Error(ErrorKind::NoPivotFound,
                "no prefix conjugate of the arc-forcing subgroup generates H+/H-");
  const std::size_t j = *pivot;

  const GenSet skewed = skewed_generators(g, s, q, base, j);
  Walk inner;
  try {
    inner = solver(q.group, skewed, kind);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InternalInvariantViolation) throw;
    throw Error(ErrorKind::ProviderFailed, e.what());
  }
  {
    CosetCayleyDigraph dq(q.group, Subgroup::trivial(q.group.order()), skewed);
    if (inner.start != 0 || !verify_hamiltonian(dq, inner, kind))
      throw Error(ErrorKind::ProviderFailed, "quotient solver returned an invalid walk");
  }

  const std::size_t n = q.group.order();
  std::vector<std::size_t> steps;
  steps.reserve(n * m);
  const auto& bs = base.steps;
  if (kind == WalkKind::Cycle) {
    for (std::size_t t = 0; t < n; ++t) {
      steps.insert(steps.end(), bs.begin(), bs.begin() + (j - 1));
      steps.push_back(inner.steps[t]);
      steps.insert(steps.end(), bs.begin() + j, bs.end());
    }
  } else {
    for (std::size_t t = 0; t + 1 < n; ++t) {
      steps.insert(steps.end(), bs.begin(), bs.end() - 1);
      steps.push_back(inner.steps[t]);
    }
    steps.insert(steps.end(), bs.begin(), bs.end() - 1);
  }
  return verified(g, h_minus, s, std::move(steps), kind, ErrorKind::SpliceVerificationFailed,
                  "skewed_splice");
}

Walk pgroup_ham_cycle(const Group& g, const GenSet& s, EngineStats* stats) {
  return pgroup_impl(g, s, stats, {0, floor_log2(g.order())});
}

Walk arc_forcing_engine(const Group& g, const GenSet& s, const WalkSolver& provider,
                        WalkKind kind, EngineStats* stats) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenSet, "empty generating set");
  if (!sylow_decomposition(g).nilpotent)
    throw Error(ErrorKind::NotNilpotent, g.name() + " is not nilpotent");
  require_generating(g, s);
  const Subgroup h = arc_forcing_subgroup(g, s);
  Walk w = fold(g, s, h, SeriesMode::Nilpotent, provider, kind, stats, pgroup_solver(stats));
  return verified_top(g, s, w.steps, kind, "arc_forcing_engine");
}

Walk ham_path_2gen(const Group& g, const GenSet& ab, EngineStats* stats) {
  if (ab.size() != 2) throw Error(ErrorKind::InvalidArgument, "exactly two generators expected");
  if (!sylow_decomposition(g).nilpotent)
    throw Error(ErrorKind::NotNilpotent, g.name() + " is not nilpotent");
  require_generating(g, ab);
  // <a^-1 b> is cyclic, so the abelian construction serves as provider
  WalkSolver provider = [](const Group& q, const GenSet& t, WalkKind) {
    return abelian_ham_path(q, t);
  };
  return arc_forcing_engine(g, ab, provider, WalkKind::Path, stats);
}

bool is_p_times_abelian(const Group& g) {
  if (!sylow_decomposition(g).nilpotent) return false;
  const auto d = commutator_subgroup(g).order();
  return d == 1 || prime_power_base(d).has_value();
}

namespace {

Walk pxa_impl(const Group& g, const GenSet& s, EngineStats* stats) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenSet, "empty generating set");
  if (!is_p_times_abelian(g))
    throw Error(ErrorKind::StructureNotPxA, g.name() + " is not (p-group) x (abelian)");
  require_generating(g, s);
  if (g.order() == 1) return verified_top(g, s, {}, WalkKind::Path, "ham_path_pxa");

  const GenSet r = reduce_generating_set(g, s);
  const Subgroup h = arc_forcing_subgroup(g, r);
  std::vector<std::size_t> steps;

  if (!h.is_whole()) {
    WalkSolver provider = [stats](const Group& q, const GenSet& t, WalkKind) {
      return pxa_impl(q, t, stats);
    };
    steps = arc_forcing_engine(g, r, provider, WalkKind::Path, stats).steps;
  } else {
    // P: the Sylow subgroup carrying the commutators; any Sylow if abelian.
    const auto comm = commutator_subgroup(g).order();
    const unsigned p = comm > 1 ? *prime_power_base(comm) : prime_factors(g.order()).front();
    const auto sylow = sylow_decomposition(g);
    const auto it = std::find_if(sylow.factors.begin(), sylow.factors.end(),
                                 [p](const SylowFactor& f) { return f.prime == p; });
    const Subgroup& big_p = *it->subgroup;

    // smallest proper subset S0 (then lexicographic) projecting onto P
    std::optional<std::vector<std::size_t>> s0;
    for (std::size_t size = 1; size < r.size() && !s0; ++size) {
      std::vector<char> pick(r.size(), 0);
      std::fill(pick.begin(), pick.begin() + size, 1);
      do {
        std::vector<std::size_t> idx;
        std::vector<Elem> proj;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (pick[i]) {
            idx.push_back(i);
            proj.push_back(prime_component(g, r[i].element, p));
          }
        if (generated_subgroup(g, proj) == big_p) s0 = idx;
      } while (!s0 && std::prev_permutation(pick.begin(), pick.end()));
    }
    if (!s0) invariant("no proper subset of a minimal generating set projects onto P");

    const GenSet sub = r.subset(*s0);
    const Subgroup n = generated_subgroup(g, sub.elements());
    if (!is_normal_in(g, n, Subgroup::whole(g.order()))) invariant("<S0> is not normal");
    if (n.is_whole() || n.is_trivial()) invariant("<S0> is trivial or everything");

    const QuotientGroup nq = subgroup_as_group(g, n);
    const GenSet sub_n = project(sub, nq);
    const Walk n_walk = pxa_impl(nq.group, sub_n, stats);

    const QuotientGroup gq = quotient_group(g, n);
    const GenSet r_q = project(r, gq);
    const Walk q_walk = pxa_impl(gq.group, r_q, stats);

    steps = product_splice(g, r, n, step_labels(sub_n, n_walk), step_labels(r_q, q_walk)).steps;
  }
  return verified_top(g, s, relabel(steps, r, s), WalkKind::Path, "ham_path_pxa");
}

}  // namespace

Walk ham_path_pxa(const Group& g, const GenSet& s, EngineStats* stats) {
  return pxa_impl(g, s, stats);
}

Walk ham_path_valence4(const Group& g, const GenSet& s, EngineStats* stats) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenSet, "empty generating set");
  const auto sylow = sylow_decomposition(g);
  if (!sylow.nilpotent) throw Error(ErrorKind::NotNilpotent, g.name() + " is not nilpotent");
  require_generating(g, s);
  if (g.order() == 1) return verified_top(g, s, {}, WalkKind::Path, "ham_path_valence4");

  const GenSet r = reduce_generating_set(g, s);
  std::vector<Elem> sym;
  for (const auto& e : r.entries()) {
    sym.push_back(e.element);
    sym.push_back(g.inv(e.element));
  }
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());
  if (sym.size() > 4)
    throw Error(ErrorKind::ValenceTooLarge,
                "Cayley graph valence " + std::to_string(sym.size()) + " exceeds 4");

  std::size_t involutions = 0;
  for (const auto& e : r.entries())
    if (element_order(g, e.element) == 2) ++involutions;

  Walk w;
  if (r.size() - involutions <= 1) {
    // the odd part K = G/P is cyclic
    std::size_t two_part = 1;
    for (const auto& f : sylow.factors)
      if (f.prime == 2) two_part = f.elements.size();
    const std::size_t k_order = g.order() / two_part;
    bool cyclic = k_order == 1;
    for (Elem x = 0; x < g.order() && !cyclic; ++x) cyclic = element_order(g, x) == k_order;
    if (!cyclic) invariant("odd part is not cyclic");
    w = ham_path_pxa(g, r, stats);
  } else {
    if (r.size() != 2 || involutions != 0) invariant("valence bound forces two non-involutions");
    w = ham_path_2gen(g, r, stats);
  }
  return verified_top(g, s, relabel(w.steps, r, s), WalkKind::Path, "ham_path_valence4");
}

Walk ham_cycle_coset_generators(const Group& g, const Subgroup& n, const GenSet& s,
                                EngineStats* stats) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenSet, "empty generating set");
  if (!is_normal_in(g, n, Subgroup::whole(g.order())))
    throw Error(ErrorKind::NotNormal, "N is not normal in G");
  if (n.order() > 1 && !prime_power_base(n.order()))
    throw Error(ErrorKind::NotPrimePower, "N is not a p-group");
  for (const auto& e : s.entries())
    if (!n.contains(g.mul(g.inv(s[0].element), e.element)))
      throw Error(ErrorKind::CosetConditionViolated,
                  "generators " + s[0].label + " and " + e.label + " lie in different cosets of N");
  require_generating(g, s);

  const Subgroup h = arc_forcing_subgroup(g, s);
  const WalkSolver solver = pgroup_solver(stats);
  Walk w = fold(g, s, h, SeriesMode::PGroupClosure, solver, WalkKind::Cycle, stats, solver);
  return verified_top(g, s, w.steps, WalkKind::Cycle, "ham_cycle_coset_generators");
}

}  // namespace hamwalk
