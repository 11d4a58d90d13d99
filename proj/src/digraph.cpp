#include "hamwalk/digraph.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace hamwalk {

std::string_view to_string(WalkKind kind) { return kind == WalkKind::Path ? "path" : "cycle"; }

WalkKind parse_walk_kind(std::string_view s) {
  if (s == "path") return WalkKind::Path;
  if (s == "cycle") return WalkKind::Cycle;
  throw Error(ErrorKind::FormatError, "walk kind must be 'path' or 'cycle', got '" + std::string(s) + "'");
}

CosetCayleyDigraph::CosetCayleyDigraph(const Group& g, const Subgroup& h, const GenSet& s)
    : gens_(s), cosets_(right_cosets(g, h)) {
  const std::size_t n = cosets_.count();
  arcs_.resize(n * s.size());
  vertex_labels_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Elem rep = cosets_.representative[v];
    for (std::size_t e = 0; e < s.size(); ++e)
      arcs_[v * s.size() + e] = cosets_.coset_of[g.mul(rep, s[e].element)];
    vertex_labels_.push_back(h.is_trivial() ? g.label(rep) : "H" + g.label(rep));
  }
}

bool CosetCayleyDigraph::strongly_connected() const {
  const std::size_t n = vertex_count();
  auto reach_all = [&](bool reverse) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t e = 0; e < out_degree(); ++e) {
        auto w = arc(v, e);
        reverse ? adj[w].push_back(v) : adj[v].push_back(w);
      }
    std::vector<char> seen(n);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          queue.push_back(w);
        }
    }
    return count == n;
  };
  return reach_all(false) && reach_all(true);
}

Walk trace_walk(const CosetCayleyDigraph& d, std::size_t start, std::vector<std::size_t> steps) {
  Walk w;
  w.start = start;
  w.vertices.reserve(steps.size() + 1);
  w.vertices.push_back(start);
  for (auto e : steps) {
    if (e >= d.out_degree()) throw Error(ErrorKind::InvalidArgument, "walk step names no generator");
    w.vertices.push_back(d.arc(w.vertices.back(), e));
  }
  w.steps = std::move(steps);
  return w;
}

Walk trim_last(const Walk& w) {
  if (w.steps.empty()) throw Error(ErrorKind::EmptyWalk, "cannot delete the last step of an empty walk");
  Walk out = w;
  out.steps.pop_back();
  if (!out.vertices.empty()) out.vertices.pop_back();
  return out;
}

bool verify_hamiltonian(const CosetCayleyDigraph& d, const Walk& w, WalkKind kind) {
  const std::size_t n = d.vertex_count();
  if (w.start >= n) return false;
  for (auto e : w.steps)
    if (e >= d.out_degree()) return false;
  Walk t = trace_walk(d, w.start, w.steps);
  if (!w.vertices.empty() && w.vertices != t.vertices) return false;

  const std::size_t distinct_prefix = kind == WalkKind::Path ? t.vertices.size() : t.steps.size();
  const std::size_t expected_steps = kind == WalkKind::Path ? n - 1 : n;
  if (t.steps.size() != expected_steps) return false;
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < distinct_prefix; ++i) {
    if (seen[t.vertices[i]]) return false;
    seen[t.vertices[i]] = 1;
  }
  return kind == WalkKind::Path || t.vertices.back() == t.start;
}

std::vector<std::string> step_labels(const GenSet& s, const Walk& w) {
  std::vector<std::string> out;
  out.reserve(w.steps.size());
  for (auto e : w.steps) out.push_back(s[e].label);
  return out;
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const CosetCayleyDigraph& d, const Walk* highlight, std::string_view name) {
  std::set<std::pair<std::size_t, std::size_t>> used;  // (vertex, entry)
  if (highlight) {
    Walk t = trace_walk(d, highlight->start, highlight->steps);
    for (std::size_t i = 0; i < t.steps.size(); ++i) used.emplace(t.vertices[i], t.steps[i]);
  }
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    out << "  n" << v << " [label=" << quoted(d.vertex_label(v)) << "];\n";
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    for (std::size_t e = 0; e < d.out_degree(); ++e) {
      out << "  n" << v << " -> n" << d.arc(v, e) << " [label=" << quoted(d.gens()[e].label);
      if (used.contains({v, e})) out << ", style=bold, color=red";
      out << "];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace hamwalk
