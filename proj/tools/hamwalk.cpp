// hamwalk: hamiltonian paths and cycles in Cayley digraphs of nilpotent groups.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamwalk/builtin.hpp"
#include "hamwalk/digraph.hpp"
#include "hamwalk/engine.hpp"
#include "hamwalk/harness.hpp"
#include "hamwalk/io.hpp"
#include "hamwalk/oracle.hpp"
#include "hamwalk/series.hpp"

using namespace hamwalk;
using nlohmann::json;

namespace {

struct Flags {
  std::string group;
  std::string gens;
  std::string algorithm = "auto";
  std::string out;
  std::string dot;
  std::string walk;
  std::string kind = "path";
  std::uint64_t budget = SearchBudget{}.max_nodes;
  std::size_t max_order = io::kDefaultCap;
  std::uint64_t seed = harness::Options{}.seed;
  bool exhaustive = false;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_file(path, text);
}

std::vector<std::string> labels_of(const Group& g, const Subgroup& h) {
  std::vector<std::string> out;
  for (Elem x : h.members()) out.push_back(g.label(x));
  return out;
}

Group need_group(const Flags& f) {
  if (f.group.empty()) throw Error(ErrorKind::InvalidArgument, "--group is required");
  return io::load_group(f.group, f.max_order);
}

GenSet need_gens(const Group& g, const Flags& f) {
  if (f.gens.empty()) throw Error(ErrorKind::InvalidArgument, "--gens is required");
  return io::parse_gens(g, f.gens);
}

int analyze(const Flags& f) {
  const Group g = need_group(f);
  const auto sylow = sylow_decomposition(g);
  json j{{"group", g.name()},
         {"order", g.order()},
         {"abelian", g.is_abelian()},
         {"nilpotent", sylow.nilpotent},
         {"commutator_order", commutator_subgroup(g).order()}};
  json factors = json::array();
  for (const auto& p : sylow.factors)
    factors.push_back({{"prime", p.prime}, {"p_elements", p.elements.size()}, {"subgroup", p.subgroup.has_value()}});
  j["sylow"] = factors;

  if (!f.gens.empty()) {
    const GenSet s = io::parse_gens(g, f.gens);
    j["gens"] = s.labels();
    j["generates"] = generates(g, s.elements());
    const Subgroup h = arc_forcing_subgroup(g, s);
    const Subgroup closure = normal_closure(g, h);
    j["arc_forcing"] = labels_of(g, h);
    j["normal_closure"] = labels_of(g, closure);
    std::optional<SeriesMode> mode;
    if (sylow.nilpotent)
      mode = SeriesMode::Nilpotent;
    else if (closure.order() == 1 || prime_power_base(closure.order()))
      mode = SeriesMode::PGroupClosure;
    if (mode)
      j["series"] = io::series_to_json(g, build_subnormal_series(g, h, *mode));
    else
      j["series"] = nullptr;
  }
  emit(f.out, j.dump(2) + "\n");
  return 0;
}

// Runs the selected construction and returns a verified walk on Cay(G;S).
Walk construct(const Group& g, const GenSet& s, std::string algorithm, WalkKind kind) {
  const bool pgroup = g.order() == 1 || prime_power_base(g.order()).has_value();
  if (algorithm == "auto") {
    if (pgroup)
      algorithm = "pgroup";
    else if (kind == WalkKind::Path && s.size() == 2)
      algorithm = "2gen";
    else if (kind == WalkKind::Path && is_p_times_abelian(g))
      algorithm = "pxa";
    else
      throw Error(ErrorKind::UnsupportedByPaper,
                  "no construction applies: |G| is not a prime power, |S| != 2 and G is not P x A");
  }
  auto path_only = [&] {
    if (kind != WalkKind::Path)
      throw Error(ErrorKind::UnsupportedByPaper, "algorithm " + algorithm + " only builds paths");
  };
  if (algorithm == "pgroup") {
    Walk w = pgroup_ham_cycle(g, s);
    return kind == WalkKind::Path ? trim_last(w) : w;
  }
  if (algorithm == "2gen") return path_only(), ham_path_2gen(g, s);
  if (algorithm == "pxa") return path_only(), ham_path_pxa(g, s);
  if (algorithm == "val4") return path_only(), ham_path_valence4(g, s);
  if (algorithm == "arcforcing") {
    const Subgroup h = arc_forcing_subgroup(g, s);
    WalkSolver provider;
    if (kind == WalkKind::Cycle) {
      if (h.order() > 1 && !prime_power_base(h.order()))
        throw Error(ErrorKind::UnsupportedByPaper, "cycle provider needs a p-group arc-forcing subgroup");
      provider = [](const Group& q, const GenSet& t, WalkKind) { return pgroup_ham_cycle(q, t); };
    } else {
      provider = [](const Group& q, const GenSet& t, WalkKind) {
        return q.is_abelian() ? abelian_ham_path(q, t) : ham_path_pxa(q, t);
      };
    }
    return arc_forcing_engine(g, s, provider, kind);
  }
  if (algorithm == "coset") {
    if (kind != WalkKind::Cycle)
      throw Error(ErrorKind::UnsupportedByPaper, "the coset construction builds cycles");
    const Subgroup n = normal_closure(g, arc_forcing_subgroup(g, s));
    return ham_cycle_coset_generators(g, n, s);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown algorithm '" + algorithm + "'");
}

int build(const Flags& f, WalkKind kind) {
  const Group g = need_group(f);
  const GenSet s = need_gens(g, f);
  const Walk w = construct(g, s, f.algorithm, kind);
  const CosetCayleyDigraph d(g, Subgroup::trivial(g.order()), s);
  if (!verify_hamiltonian(d, w, kind))
    throw Error(ErrorKind::InternalInvariantViolation, "constructed walk failed verification");
  emit(f.out, io::walk_to_json(io::make_walk_file(f.group, s, w, kind, true)).dump() + "\n");
  if (!f.dot.empty()) io::write_file(f.dot, export_dot(d, &w, g.name()));
  return 0;
}

int verify(const Flags& f) {
  if (f.walk.empty()) throw Error(ErrorKind::InvalidArgument, "--walk is required");
  json j;
  try {
    j = json::parse(io::read_file(f.walk));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FormatError, f.walk + ": " + e.what());
  }
  const io::WalkFile wf = io::walk_from_json(j);
  const Group g = io::load_group(f.group.empty() ? wf.group : f.group, f.max_order);
  const GenSet s = GenSet::from_labels(g, wf.gens);
  const CosetCayleyDigraph d(g, Subgroup::trivial(g.order()), s);
  if (wf.start >= d.vertex_count()) throw Error(ErrorKind::FormatError, "start vertex out of range");
  std::vector<std::size_t> steps;
  for (const auto& l : wf.steps) {
    auto e = s.find(l);
    if (!e) throw Error(ErrorKind::FormatError, "step '" + l + "' is not a generator");
    steps.push_back(*e);
  }
  Walk w = trace_walk(d, wf.start, steps);
  const bool vertices_match = w.vertices == wf.vertices;
  w.vertices = wf.vertices;
  const bool ok = vertices_match && verify_hamiltonian(d, w, wf.kind);
  std::cout << (ok ? "valid" : "invalid") << " hamiltonian " << to_string(wf.kind) << " on "
            << g.name() << " (" << wf.steps.size() << " steps)"
            << (vertices_match ? "" : ": recorded vertices do not match the steps") << "\n";
  return ok ? 0 : 1;
}

int oracle(const Flags& f) {
  const Group g = need_group(f);
  const GenSet s = need_gens(g, f);
  const WalkKind kind = parse_walk_kind(f.kind);
  const CosetCayleyDigraph d(g, Subgroup::trivial(g.order()), s);
  const SearchResult r = brute_force_ham(d, kind, SearchBudget{f.budget});
  json j{{"status", std::string(to_string(r.status))}, {"nodes", r.nodes}, {"kind", f.kind}};
  if (r.walk) j["walk"] = io::walk_to_json(io::make_walk_file(f.group, s, *r.walk, kind, true));
  if (s.size() == 2) j["milnor_nonexistence"] = milnor_nonexistence(g, s[0].element, s[1].element);
  emit(f.out, j.dump() + "\n");
  return 0;
}

int run_harness(const Flags& f) {
  harness::Options opts;
  opts.seed = f.seed;
  opts.exhaustive = f.exhaustive;
  opts.workers = std::max(1u, std::thread::hardware_concurrency());
  if (f.max_order != io::kDefaultCap) opts.max_order = f.max_order;
  const auto report = harness::property_harness(harness::default_corpus(), opts);
  if (!f.out.empty()) io::write_file(f.out, harness::json_lines(report));
  std::cout << harness::summary(report);
  return report.ok() ? 0 : 1;
}

int export_graph(const Flags& f) {
  const Group g = need_group(f);
  const GenSet s = need_gens(g, f);
  const CosetCayleyDigraph d(g, Subgroup::trivial(g.order()), s);
  std::optional<Walk> w;
  if (!f.walk.empty()) {
    const io::WalkFile wf = io::walk_from_json(json::parse(io::read_file(f.walk)));
    std::vector<std::size_t> steps;
    for (const auto& l : wf.steps) {
      auto e = s.find(l);
      if (!e) throw Error(ErrorKind::FormatError, "step '" + l + "' is not a generator");
      steps.push_back(*e);
    }
    w = trace_walk(d, wf.start, steps);
  }
  const std::string text = export_dot(d, w ? &*w : nullptr, g.name());
  emit(f.dot.empty() ? f.out : f.dot, text);
  return 0;
}

int exit_code(ErrorKind k) {
  return k == ErrorKind::FormatError || k == ErrorKind::IoError ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian paths and cycles in Cayley digraphs of finite nilpotent groups"};
  app.require_subcommand(1, 1);
  Flags f;

  auto group_opt = [&](CLI::App* c) {
    c->add_option("--group", f.group, "group file or builtin:<name>");
    c->add_option("--max-order", f.max_order, "order cap for group ingestion");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "order, Sylow structure, arc-forcing subgroup, series");
  group_opt(analyze_cmd);
  analyze_cmd->add_option("--gens", f.gens, "generator labels");
  analyze_cmd->add_option("--out", f.out, "JSON output path");

  CLI::App* build_cmds[2];
  const char* build_names[2] = {"hampath", "hamcycle"};
  for (int i = 0; i < 2; ++i) {
    auto* c = build_cmds[i] = app.add_subcommand(build_names[i], i ? "hamiltonian cycle" : "hamiltonian path");
    group_opt(c);
    c->add_option("--gens", f.gens, "generator labels");
    c->add_option("--algorithm", f.algorithm, "auto|2gen|pxa|val4|pgroup|arcforcing|coset")
        ->check(CLI::IsMember({"auto", "2gen", "pxa", "val4", "pgroup", "arcforcing", "coset"}));
    c->add_option("--out", f.out, "walk JSON path");
    c->add_option("--dot", f.dot, "Graphviz output path");
  }

  auto* verify_cmd = app.add_subcommand("verify", "re-check a walk file");
  verify_cmd->add_option("--walk", f.walk, "walk JSON")->required();
  group_opt(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive hamiltonian search");
  group_opt(oracle_cmd);
  oracle_cmd->add_option("--gens", f.gens, "generator labels");
  oracle_cmd->add_option("--kind", f.kind, "path|cycle")->check(CLI::IsMember({"path", "cycle"}));
  oracle_cmd->add_option("--budget", f.budget, "search node budget");
  oracle_cmd->add_option("--out", f.out, "JSON output path");

  auto* harness_cmd = app.add_subcommand("harness", "run the built-in corpus suites");
  harness_cmd->add_option("--seed", f.seed, "sampling seed");
  harness_cmd->add_option("--max-order", f.max_order, "skip corpus groups above this order");
  harness_cmd->add_flag("--exhaustive", f.exhaustive, "scan every case instead of sampling");
  harness_cmd->add_option("--out", f.out, "JSON lines report path");

  auto* export_cmd = app.add_subcommand("export", "Graphviz export of Cay(G;S)");
  group_opt(export_cmd);
  export_cmd->add_option("--gens", f.gens, "generator labels");
  export_cmd->add_option("--walk", f.walk, "walk JSON to highlight");
  export_cmd->add_option("--dot", f.dot, "output path");
  export_cmd->add_option("--out", f.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return analyze(f);
    if (*build_cmds[0]) return build(f, WalkKind::Path);
    if (*build_cmds[1]) return build(f, WalkKind::Cycle);
    if (*verify_cmd) return verify(f);
    if (*oracle_cmd) return oracle(f);
    if (*harness_cmd) return run_harness(f);
    if (*export_cmd) return export_graph(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: FormatError: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
