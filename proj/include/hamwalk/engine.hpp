#pragma once

#include <cstddef>
#include <functional>

#include "hamwalk/digraph.hpp"
#include "hamwalk/group.hpp"
#include "hamwalk/series.hpp"

namespace hamwalk {

/// Counters filled in by the constructions; pass one per call tree.
struct EngineStats {
  std::size_t series_built = 0;
  std::size_t series_violations = 0;
  std::size_t ledger_fallbacks = 0;
  std::size_t splices = 0;
  std::size_t max_pgroup_depth = 0;
};

/// Solves Cay(Q; T) for a group Q and generating sequence T, returning a
/// walk from the identity whose steps index into T.
using WalkSolver = std::function<Walk(const Group&, const GenSet&, WalkKind)>;

/// Interleaves a hamiltonian path of Cay(N; S0) with one of Cay(G/N; S):
/// ((s_i), t_j)_{j=1}^{q+1} with the final step deleted. Both input walks are
/// given by labels that must name entries of `s`.
Walk product_splice(const Group& g, const GenSet& s, const Subgroup& n,
                    const std::vector<std::string>& n_path,
                    const std::vector<std::string>& q_path);

Walk abelian_ham_path(const Group& g, const GenSet& s);

/// Lifts a hamiltonian cycle of H+\Cay(G;S) to a hamiltonian cycle (or, for
/// a trivial H- and H+ the arc-forcing subgroup, a path) of H-\Cay(G;S).
/// `base` must start at the identity coset.
Walk skewed_splice(const Group& g, const GenSet& s, const Subgroup& h_plus,
                   const Subgroup& h_minus, const Walk& base, const WalkSolver& solver,
                   WalkKind kind, EngineStats* stats = nullptr);

/// Skewed generating sequence on H+/H- for pivot `j` (1-based) of `base`:
/// entry for s is the image of s_1...s_{j-1} s s_{j+1}...s_m.
GenSet skewed_generators(const Group& g, const GenSet& s, const QuotientGroup& q,
                         const Walk& base, std::size_t j);

Walk pgroup_ham_cycle(const Group& g, const GenSet& s, EngineStats* stats = nullptr);

Walk arc_forcing_engine(const Group& g, const GenSet& s, const WalkSolver& provider,
                        WalkKind kind, EngineStats* stats = nullptr);

Walk ham_path_2gen(const Group& g, const GenSet& ab, EngineStats* stats = nullptr);
Walk ham_path_pxa(const Group& g, const GenSet& s, EngineStats* stats = nullptr);
Walk ham_path_valence4(const Group& g, const GenSet& s, EngineStats* stats = nullptr);
Walk ham_cycle_coset_generators(const Group& g, const Subgroup& n, const GenSet& s,
                                EngineStats* stats = nullptr);

/// Nilpotent with a commutator subgroup of prime-power order (or trivial).
bool is_p_times_abelian(const Group& g);

}  // namespace hamwalk
