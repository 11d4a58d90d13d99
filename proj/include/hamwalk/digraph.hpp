#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamwalk/group.hpp"

namespace hamwalk {

enum class WalkKind { Path, Cycle };

std::string_view to_string(WalkKind kind);
WalkKind parse_walk_kind(std::string_view s);

/// H\Cay(G;S): vertices are the right cosets Hg, with an arc Hg -> Hgs for
/// every generator entry s. Arcs are keyed by entry, so equal elements under
/// different labels give parallel arcs. A trivial H gives Cay(G;S).
class CosetCayleyDigraph {
 public:
  CosetCayleyDigraph(const Group& g, const Subgroup& h, const GenSet& s);

  std::size_t vertex_count() const noexcept { return cosets_.count(); }
  std::size_t out_degree() const noexcept { return gens_.size(); }
  std::size_t arc(std::size_t v, std::size_t entry) const {
    return arcs_[v * gens_.size() + entry];
  }
  const GenSet& gens() const noexcept { return gens_; }
  const CosetTable& cosets() const noexcept { return cosets_; }
  std::size_t vertex_of(Elem g) const { return cosets_.coset_of[g]; }
  const std::string& vertex_label(std::size_t v) const { return vertex_labels_[v]; }

  bool strongly_connected() const;

 private:
  GenSet gens_;
  CosetTable cosets_;
  std::vector<std::size_t> arcs_;
  std::vector<std::string> vertex_labels_;
};

/// A walk given by its start vertex and the generator entries it follows.
/// `vertices` has one more element than `steps`.
struct Walk {
  std::size_t start = 0;
  std::vector<std::size_t> steps;
  std::vector<std::size_t> vertices;

  friend bool operator==(const Walk&, const Walk&) = default;
};

Walk trace_walk(const CosetCayleyDigraph& d, std::size_t start, std::vector<std::size_t> steps);

/// Drops the final step (the `#` operator). Throws EmptyWalk on an empty walk.
Walk trim_last(const Walk& w);

/// Path: every vertex exactly once. Cycle: |V| steps, the first |V| vertices
/// distinct, ending at the start; so a single vertex with a loop and K_2
/// with its return arc are cycles. The vertex list is recomputed from the
/// steps, so a walk with stale vertices fails.
bool verify_hamiltonian(const CosetCayleyDigraph& d, const Walk& w, WalkKind kind);

std::vector<std::string> step_labels(const GenSet& s, const Walk& w);

/// Graphviz text for the digraph; arcs used by `highlight` are drawn bold.
std::string export_dot(const CosetCayleyDigraph& d, const Walk* highlight = nullptr,
                       std::string_view name = "cayley");

}  // namespace hamwalk
