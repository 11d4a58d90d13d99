#include "hamwalk/oracle.hpp"

#include <array>

namespace hamwalk {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::NotFound: return "NotFound";
    case SearchStatus::Timeout: return "Timeout";
  }
  return "Unknown";
}

namespace {

class Search {
 public:
  Search(const CosetCayleyDigraph& d, WalkKind kind, std::uint64_t budget)
      : d_(d), kind_(kind), budget_(budget), n_(d.vertex_count()), visited_(n_), mark_(n_) {}

  // true when found; sets timed_out_ when the budget ran out first
  bool run(std::size_t start) {
    start_ = start;
    steps_.clear();
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[start] = 1;
    return extend(start, 1);
  }

  bool timed_out() const noexcept { return timed_out_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& steps() const noexcept { return steps_; }

 private:
  const CosetCayleyDigraph& d_;
  WalkKind kind_;
  std::uint64_t budget_;
  std::size_t n_;
  std::size_t start_ = 0;
  std::vector<char> visited_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<std::size_t> steps_;
  std::vector<std::size_t> queue_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;

  bool closes(std::size_t v) const {
    for (std::size_t e = 0; e < d_.out_degree(); ++e)
      if (d_.arc(v, e) == start_) return true;
    return false;
  }

  // Every unvisited vertex reachable from `v` through unvisited vertices.
  bool reachable(std::size_t v, std::size_t remaining) {
    ++stamp_;
    queue_.clear();
    queue_.push_back(v);
    mark_[v] = stamp_;
    std::size_t seen = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto u = queue_[head];
      for (std::size_t e = 0; e < d_.out_degree(); ++e) {
        const auto w = d_.arc(u, e);
        if (visited_[w] || mark_[w] == stamp_) continue;
        mark_[w] = stamp_;
        ++seen;
        queue_.push_back(w);
      }
    }
    return seen == remaining;
  }

  bool extend(std::size_t v, std::size_t count) {
    if (nodes_ >= budget_) {
      timed_out_ = true;
      return false;
    }
    ++nodes_;
    if (count == n_) {
      if (kind_ == WalkKind::Path) return true;
      for (std::size_t e = 0; e < d_.out_degree(); ++e)
        if (d_.arc(v, e) == start_) {
          steps_.push_back(e);
          return true;
        }
      return false;
    }
    if (!reachable(v, n_ - count)) return false;
    for (std::size_t e = 0; e < d_.out_degree(); ++e) {
      const auto w = d_.arc(v, e);
      if (visited_[w]) continue;
      if (kind_ == WalkKind::Cycle && count + 1 == n_ && !closes(w)) continue;
      visited_[w] = 1;
      steps_.push_back(e);
      if (extend(w, count + 1)) return true;
      steps_.pop_back();
      visited_[w] = 0;
      if (timed_out_) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult brute_force_ham(const CosetCayleyDigraph& d, WalkKind kind, SearchBudget budget) {
  SearchResult result;
  if (budget.max_nodes == 0) {
    result.status = SearchStatus::Timeout;
    return result;
  }
  Search search(d, kind, budget.max_nodes);
  // Cayley digraphs are vertex transitive; coset digraphs in general are not.
  const bool transitive = d.vertex_count() == d.cosets().coset_of.size();
  const std::size_t starts = kind == WalkKind::Path && !transitive ? d.vertex_count() : 1;
  for (std::size_t start = 0; start < starts; ++start) {
    if (search.run(start)) {
      result.status = SearchStatus::Found;
      result.walk = trace_walk(d, start, search.steps());
      result.nodes = search.nodes();
      if (!verify_hamiltonian(d, *result.walk, kind))
        throw Error(ErrorKind::InternalInvariantViolation, "oracle produced an invalid walk");
      return result;
    }
    if (search.timed_out()) {
      result.status = SearchStatus::Timeout;
      result.nodes = search.nodes();
      return result;
    }
  }
  result.status = SearchStatus::NotFound;
  result.nodes = search.nodes();
  return result;
}

bool milnor_nonexistence(const Group& g, Elem a, Elem b) {
  const std::array<Elem, 2> ab{a, b};
  if (!generates(g, ab))
    throw Error(ErrorKind::NotGenerating, "a and b do not generate " + g.name());
  if (element_order(g, a) != 2 || element_order(g, b) != 3) return false;
  const Elem abb = g.mul(a, g.mul(b, b));
  return g.order() > 9 * element_order(g, abb);
}

}  // namespace hamwalk
