#pragma once

#include <cstdint>
#include <optional>

#include "hamwalk/digraph.hpp"
#include "hamwalk/group.hpp"

namespace hamwalk {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  static SearchBudget unlimited() { return {UINT64_MAX}; }
};

enum class SearchStatus { Found, NotFound, Timeout };
std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Walk> walk;  // set when Found
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over arcs in entry order, pruning a branch as
/// soon as some unvisited vertex is unreachable through unvisited vertices.
/// Starts at vertex 0; paths in a proper coset digraph (not vertex
/// transitive) are retried from every other start.
SearchResult brute_force_ham(const CosetCayleyDigraph& d, WalkKind kind, SearchBudget budget);

/// |a| = 2, |b| = 3 and |G| > 9 |ab^2|: then Cay(G; a, b) has no
/// hamiltonian path. Throws NotGenerating unless <a, b> = G.
bool milnor_nonexistence(const Group& g, Elem a, Elem b);

}  // namespace hamwalk
