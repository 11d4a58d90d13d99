#include "hamwalk/series.hpp"

#include <algorithm>

namespace hamwalk {

namespace {

std::vector<Elem> conjugate_members(const Group& g, const Subgroup& h, Elem x) {
  std::vector<Elem> out;
  out.reserve(h.order());
  for (Elem y : h.members()) out.push_back(g.conj(y, x));
  return out;
}

bool all_in(const Subgroup& k, std::span<const Elem> xs) {
  return std::all_of(xs.begin(), xs.end(), [&](Elem x) { return k.contains(x); });
}

Subgroup join(const Group& g, const Subgroup& k, std::span<const Elem> xs) {
  std::vector<Elem> gens = k.members();
  gens.insert(gens.end(), xs.begin(), xs.end());
  return generated_subgroup(g, gens);
}

Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.members())
    if (b.contains(x)) out.push_back(x);
  return Subgroup::from_members(g.order(), std::move(out));
}

[[noreturn]] void invariant(const std::string& what) {
  throw Error(ErrorKind::InternalInvariantViolation, what);
}

// One step of the construction for a subgroup `hk` that is not normal in
// `ambient` (a nilpotent subgroup containing every conjugate in play).
Elem nilpotent_step(const Group& g, const Subgroup& h, const Subgroup& hk,
                    const Subgroup& ambient, const std::vector<Elem>& ledger,
                    bool sylow_adjust, std::size_t& fallbacks) {
  const Subgroup norm = intersect(g, normalizer(g, hk), ambient);
  const Subgroup norm2 = intersect(g, normalizer(g, norm), ambient);
  // proper subgroups of nilpotent groups are never self-normalizing
  auto x_it = std::find_if(norm2.members().begin(), norm2.members().end(),
                           [&](Elem x) { return !norm.contains(x); });
  if (x_it == norm2.members().end()) invariant("normalizer of a proper subgroup is self-normalizing");
  const Elem x = *x_it;

  const Subgroup shifted = Subgroup::from_members(g.order(), conjugate_members(g, hk, x));
  std::optional<Elem> chosen;
  std::vector<Elem> sorted_ledger = ledger;
  std::sort(sorted_ledger.begin(), sorted_ledger.end());
  for (Elem c : sorted_ledger) {
    const Elem cand = g.mul(c, x);
    if (!all_in(hk, conjugate_members(g, h, cand))) {
      chosen = cand;
      break;
    }
  }
  if (!chosen) {
    ++fallbacks;
    for (Elem cand = 0; cand < g.order() && !chosen; ++cand) {
      auto conj = conjugate_members(g, h, cand);
      if (!all_in(hk, conj) && all_in(shifted, conj)) chosen = cand;
    }
    if (!chosen) invariant("no conjugate of H escapes the current term");
  }
  if (!all_in(shifted, conjugate_members(g, h, *chosen)))
    invariant("chosen conjugate is not inside x^-1 H_k x");

  if (sylow_adjust) {
    std::optional<Elem> best;
    for (unsigned p : prime_factors(g.order())) {
      const Elem part = prime_component(g, *chosen, p);
      if (!all_in(hk, conjugate_members(g, h, part)) && (!best || part < *best)) best = part;
    }
    if (!best) invariant("no prime component of the conjugator escapes the current term");
    chosen = best;
  }
  return *chosen;
}

}  // namespace

std::vector<std::size_t> SubnormalSeries::quotient_orders() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    out.push_back(chain[k + 1].order() / chain[k].order());
  return out;
}

SubnormalSeries build_subnormal_series(const Group& g, const Subgroup& h, SeriesMode mode) {
  const Subgroup closure = normal_closure(g, h);
  if (mode == SeriesMode::Nilpotent && !sylow_decomposition(g).nilpotent)
    throw Error(ErrorKind::PreconditionFailed, "nilpotent series requested for a non-nilpotent group");
  if (mode == SeriesMode::PGroupClosure && closure.order() > 1 && !prime_power_base(closure.order()))
    throw Error(ErrorKind::PreconditionFailed, "normal closure of H is not a p-group");

  SubnormalSeries s;
  s.chain.push_back(h);
  s.ledger.push_back({kIdentity});
  const Subgroup whole = Subgroup::whole(g.order());

  while (!(s.chain.back() == closure)) {
    const Subgroup& hk = s.chain.back();
    Elem conj;
    if (mode == SeriesMode::Nilpotent) {
      conj = nilpotent_step(g, h, hk, whole, s.ledger.back(), true, s.ledger_fallbacks);
    } else if (!is_normal_in(g, hk, closure)) {
      conj = nilpotent_step(g, h, hk, closure, s.ledger.back(), false, s.ledger_fallbacks);
    } else {
      // every conjugate of H lies in H^G and so normalizes hk
      std::optional<Elem> least;
      for (Elem c = 0; c < g.order() && !least; ++c)
        if (!all_in(hk, conjugate_members(g, h, c))) least = c;
      if (!least) invariant("H_k is a proper subgroup of H^G yet contains every conjugate of H");
      conj = *least;
    }
    Subgroup next = join(g, hk, conjugate_members(g, h, conj));
    if (next.order() <= hk.order()) invariant("series failed to grow");
    auto ledger = s.ledger.back();
    ledger.push_back(conj);
    s.conjugators.push_back(conj);
    s.ledger.push_back(std::move(ledger));
    s.chain.push_back(std::move(next));
  }

  if (auto bad = check_series(g, h, s); !bad.empty()) invariant(bad.front());
  return s;
}

std::vector<std::string> check_series(const Group& g, const Subgroup& h,
                                      const SubnormalSeries& s) {
  std::vector<std::string> bad;
  if (s.chain.empty()) return {"empty chain"};
  if (!(s.chain.front() == h)) bad.push_back("first term differs from H");
  if (!(s.chain.back() == normal_closure(g, h))) bad.push_back("last term differs from H^G");
  if (s.conjugators.size() + 1 != s.chain.size() || s.ledger.size() != s.chain.size())
    bad.push_back("conjugator or ledger length mismatch");
  for (std::size_t k = 0; k + 1 < s.chain.size(); ++k) {
    const auto& lo = s.chain[k];
    const auto& hi = s.chain[k + 1];
    const std::string at = " at step " + std::to_string(k + 1);
    if (!lo.subset_of(hi) || !is_normal_in(g, lo, hi)) bad.push_back("not subnormal" + at);
    if (hi.order() % lo.order() != 0 || !prime_power_base(hi.order() / lo.order()))
      bad.push_back("quotient order is not a prime power" + at);
    if (k < s.conjugators.size()) {
      auto conj = conjugate_members(g, h, s.conjugators[k]);
      if (!all_in(hi, conj) || !(join(g, lo, conj) == hi))
        bad.push_back("quotient not generated by the recorded conjugate of H" + at);
    }
  }
  for (std::size_t k = 0; k < s.ledger.size() && k < s.chain.size(); ++k) {
    std::vector<Elem> gens;
    for (Elem c : s.ledger[k]) {
      auto conj = conjugate_members(g, h, c);
      gens.insert(gens.end(), conj.begin(), conj.end());
    }
    if (!(generated_subgroup(g, gens) == s.chain[k]))
      bad.push_back("ledger does not generate term " + std::to_string(k + 1));
  }
  return bad;
}

}  // namespace hamwalk
