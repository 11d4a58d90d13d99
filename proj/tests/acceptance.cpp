// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hamwalk/builtin.hpp"
#include "hamwalk/engine.hpp"
#include "hamwalk/harness.hpp"
#include "hamwalk/oracle.hpp"

using namespace hamwalk;
using Clock = std::chrono::steady_clock;

namespace {

// pinned limits
constexpr double kGoldenMillis = 1000;
constexpr double kTwoGenSeconds = 60;
constexpr std::size_t kPairSamples = 200;
constexpr std::size_t kSetSamples = 50;
constexpr std::uint64_t kMilnorBudget = 100'000'000;
constexpr double kScaleSeconds = 5;
constexpr double kKernelSeconds = 10;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool nilpotent(const Group& g) { return sylow_decomposition(g).nilpotent; }

std::vector<harness::CorpusEntry> corpus_for(harness::Suite suite) {
  std::vector<harness::CorpusEntry> out;
  for (const auto& e : harness::default_corpus()) {
    if (std::find(e.suites.begin(), e.suites.end(), suite) == e.suites.end()) continue;
    if (suite == harness::Suite::TwoGen && !nilpotent(builtin::by_name(e.source))) continue;
    out.push_back({e.source, {suite}});
  }
  return out;
}

harness::Options options(unsigned workers = 1) {
  harness::Options o;
  o.workers = workers;
  o.pair_samples = kPairSamples;
  o.set_samples = kSetSamples;
  return o;
}

std::map<std::string, std::size_t> cases_per_group(const harness::Report& r) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : r.cases) ++out[c.group];
  return out;
}

std::string counts(const harness::Report& r) {
  return std::to_string(r.passed) + "/" + std::to_string(r.cases.size()) + " pass, " +
         std::to_string(r.failed) + " fail";
}

struct Golden {
  std::string group, gens, algorithm;
  std::vector<std::string> expect;
};

std::string golden_outputs(bool& all_ok, double& millis) {
  const std::vector<Golden> goldens{
      {"q8", "i,j", "2gen path", {"i", "j", "i", "j", "i", "j", "i"}},
      {"q8", "i,j", "pgroup cycle", {"i", "j", "i", "j", "i", "j", "i", "j"}},
      {"z6", "2,5", "2gen path", {"2", "2", "5", "2", "2"}},
      {"z6", "2,3", "pxa path", {"3", "2", "3", "2", "3"}},
      {"z4", "1,3", "coset cycle", {"1", "1", "1", "1"}}};
  std::string digest;
  all_ok = true;
  const auto t0 = Clock::now();
  for (const auto& gd : goldens) {
    const Group g = builtin::by_name(gd.group);
    std::vector<std::string> labels;
    for (std::size_t p = 0, q; p <= gd.gens.size(); p = q + 1) {
      q = gd.gens.find(',', p);
      if (q == std::string::npos) q = gd.gens.size();
      labels.push_back(gd.gens.substr(p, q - p));
    }
    const GenSet s = GenSet::from_labels(g, labels);
    Walk w;
    WalkKind kind = WalkKind::Path;
    if (gd.algorithm == "2gen path") {
      w = ham_path_2gen(g, s);
    } else if (gd.algorithm == "pgroup cycle") {
      w = pgroup_ham_cycle(g, s);
      kind = WalkKind::Cycle;
    } else if (gd.algorithm == "pxa path") {
      w = ham_path_pxa(g, s);
    } else {
      const Subgroup n = generated_subgroup(g, std::vector<Elem>{*g.find("2")});
      w = ham_cycle_coset_generators(g, n, s);
      kind = WalkKind::Cycle;
    }
    const CosetCayleyDigraph d(g, Subgroup::trivial(g.order()), s);
    const auto got = step_labels(s, w);
    all_ok = all_ok && got == gd.expect && verify_hamiltonian(d, w, kind);
    for (const auto& l : got) digest += l + ",";
    digest += "\n";
  }
  millis = seconds_since(t0) * 1000;
  return digest;
}

}  // namespace

int main() {
  // 1. golden walks
  bool golden_ok = false;
  double golden_ms = 0;
  const std::string golden_digest = golden_outputs(golden_ok, golden_ms);
  report(1, "golden walks", golden_ok && golden_ms < kGoldenMillis,
         "5 goldens exact and verified in " + std::to_string(golden_ms) + " ms (limit " +
             std::to_string(kGoldenMillis) + " ms)");

  std::size_t series_built = 0, series_violations = 0;
  auto tally = [&](const harness::Report& r) {
    series_built += r.series_built;
    series_violations += r.series_violations;
  };

  // 2. two-generator suite
  {
    const auto t0 = Clock::now();
    const auto r = harness::property_harness(corpus_for(harness::Suite::TwoGen), options());
    const double secs = seconds_since(t0);
    tally(r);
    bool coverage = true;
    std::string thin;
    for (const auto& [group, n] : cases_per_group(r)) {
      const std::size_t order = builtin::by_name(group).order();
      if (order > 27 && n < kPairSamples) {
        coverage = false;
        thin += " " + group;
      }
    }
    // exhaustive below 28: every generating ordered pair appears
    for (const auto& e : corpus_for(harness::Suite::TwoGen)) {
      const Group g = builtin::by_name(e.source);
      if (g.order() > 27) continue;
      std::size_t pairs = 0;
      for (Elem a = 1; a < g.order(); ++a)
        for (Elem b = 1; b < g.order(); ++b) {
          const Elem ab[2] = {a, b};
          pairs += a != b && generates(g, ab);
        }
      if (cases_per_group(r)[e.source] != pairs) {
        coverage = false;
        thin += " " + e.source;
      }
    }
    report(2, "two-generator suite", r.ok() && r.rejected == 0 && coverage && secs < kTwoGenSeconds,
           counts(r) + ", " + std::to_string(cases_per_group(r).size()) + " groups, " +
               std::to_string(secs) + " s" + (thin.empty() ? "" : ", short coverage:" + thin));
  }

  // 3. p-group suite
  {
    const auto r = harness::property_harness(corpus_for(harness::Suite::PGroup), options());
    tally(r);
    bool depth_ok = true, coverage = true;
    for (const auto& c : r.cases) depth_ok = depth_ok && c.max_depth <= std::bit_width(c.order) - 1;
    for (const auto& [group, n] : cases_per_group(r)) coverage = coverage && n >= kSetSamples;
    report(3, "p-group cycle suite", r.ok() && depth_ok && coverage,
           counts(r) + ", " + std::to_string(cases_per_group(r).size()) + " groups, depth bound " +
               (depth_ok ? "held" : "violated"));
  }

  // 4. P x A suite
  {
    const auto r = harness::property_harness(corpus_for(harness::Suite::PxA), options());
    tally(r);
    bool coverage = cases_per_group(r).size() == 12;
    for (const auto& [group, n] : cases_per_group(r)) coverage = coverage && n >= kSetSamples;
    report(4, "P x A suite", r.ok() && coverage,
           counts(r) + ", " + std::to_string(cases_per_group(r).size()) + " products");
  }

  // 5. valence-4 suite
  {
    const auto r = harness::property_harness(corpus_for(harness::Suite::Valence4), options());
    tally(r);
    report(5, "valence-4 suite", r.ok() && r.rejected == 0 && !r.cases.empty(),
           counts(r) + ", " + std::to_string(cases_per_group(r).size()) + " groups");
  }

  // 6. series invariants across suites 2-5
  report(6, "series invariants", series_violations == 0 && series_built > 0,
         std::to_string(series_built) + " series built, " + std::to_string(series_violations) +
             " violations");

  // 7. oracle agreement
  {
    const auto r = harness::property_harness(corpus_for(harness::Suite::Oracle), options());
    report(7, "oracle agreement", r.ok() && !r.cases.empty(),
           counts(r) + " over " + std::to_string(cases_per_group(r).size()) + " groups of order <= 16");
  }

  // 8. negative gates
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"s3", "d10"}) {
      const Group g = builtin::by_name(name);
      std::size_t rejected = 0, pairs = 0;
      for (Elem a = 1; a < g.order(); ++a)
        for (Elem b = 1; b < g.order(); ++b) {
          const Elem ab[2] = {a, b};
          if (a == b || !generates(g, ab)) continue;
          ++pairs;
          try {
            ham_path_2gen(g, GenSet::from_elements(g, std::vector<Elem>{a, b}));
          } catch (const Error& e) {
            rejected += e.kind() == ErrorKind::NotNilpotent;
          }
        }
      ok = ok && pairs > 0 && rejected == pairs;
      detail += std::string(name) + " " + std::to_string(rejected) + "/" + std::to_string(pairs) + " rejected; ";
    }
    const auto f13 = builtin::semidirect_fixture(13);
    const bool m13 = milnor_nonexistence(f13.group, f13.a, f13.b);
    const auto f7 = builtin::semidirect_fixture(7);
    const bool m7 = milnor_nonexistence(f7.group, f7.a, f7.b);
    const GenSet ab = GenSet::from_elements(f7.group, std::vector<Elem>{f7.a, f7.b});
    const auto search = brute_force_ham(CosetCayleyDigraph(f7.group, Subgroup::trivial(42), ab),
                                        WalkKind::Path, SearchBudget{kMilnorBudget});
    ok = ok && m13 && !m7 && search.status != SearchStatus::Timeout;
    detail += "milnor(13)=" + std::string(m13 ? "true" : "false") + ", milnor(7)=" +
              (m7 ? "true" : "false") + ", p=7 path search " + std::string(to_string(search.status)) +
              " after " + std::to_string(search.nodes) + " nodes";
    report(8, "negative gates", ok, detail);
  }

  // 9. determinism across runs and worker counts
  {
    std::vector<harness::CorpusEntry> all;
    for (auto s : {harness::Suite::TwoGen, harness::Suite::PGroup, harness::Suite::PxA, harness::Suite::Valence4})
      for (auto& e : corpus_for(s)) all.push_back(std::move(e));
    const auto a = harness::walk_digest(harness::property_harness(all, options(1)));
    const auto b = harness::walk_digest(harness::property_harness(all, options(1)));
    const auto c = harness::walk_digest(harness::property_harness(all, options(4)));
    bool g_ok = false;
    double ms = 0;
    const bool goldens_same = golden_outputs(g_ok, ms) == golden_digest;
    report(9, "determinism", a == b && a == c && goldens_same,
           std::to_string(a.size()) + " bytes of walk output; rerun " + (a == b ? "identical" : "differs") +
               ", 4 workers " + (a == c ? "identical" : "differs"));
  }

  // 10. scale
  {
    const Group g256 = builtin::by_name("product:q8,q8,z4");
    double worst = 0;
    bool ok = g256.order() == 256;
    std::size_t gensets = 0;
    for (const std::vector<std::string>& labels :
         {std::vector<std::string>{"(i,1,0)", "(j,1,0)", "(1,i,0)", "(1,j,0)", "(1,1,1)"},
          std::vector<std::string>{"(i,i,1)", "(j,1,0)", "(1,j,0)", "(k,1,0)", "(1,1,3)"},
          std::vector<std::string>{"(i,1,1)", "(j,j,0)", "(1,i,0)", "(j,1,0)", "(1,1,1)", "(k,k,2)"}}) {
      const GenSet s = GenSet::from_labels(g256, labels);
      if (!generates(g256, s.elements())) {
        ok = false;
        continue;
      }
      const auto t0 = Clock::now();
      EngineStats stats;
      const Walk w = pgroup_ham_cycle(g256, s, &stats);
      worst = std::max(worst, seconds_since(t0));
      ok = ok && verify_hamiltonian(CosetCayleyDigraph(g256, Subgroup::trivial(256), s), w, WalkKind::Cycle) &&
           stats.max_pgroup_depth <= 8;
      ++gensets;
    }
    ok = ok && worst < kScaleSeconds;

    const Group g512 = builtin::by_name("product:q8,q8,d8");
    std::map<std::string, double> kernel;
    auto time = [&](const std::string& op, const std::function<void()>& f) {
      const auto t0 = Clock::now();
      f();
      kernel[op] = seconds_since(t0);
    };
    const std::vector<Elem> two{1, 2};
    const Subgroup h = generated_subgroup(g512, two);
    const GenSet s512 = GenSet::from_labels(g512, std::vector<std::string>{"(i,1,r)", "(j,i,f)", "(1,j,e)"});
    time("validate", [&] { ok = ok && g512.validate().empty(); });
    time("from_table", [&] { Group::from_table(g512.table(), g512.labels(), "copy"); });
    time("element_order", [&] {
      for (Elem x = 0; x < g512.order(); ++x) element_order(g512, x);
    });
    time("generated_subgroup", [&] { generated_subgroup(g512, s512.elements()); });
    time("arc_forcing_subgroup", [&] { arc_forcing_subgroup(g512, s512); });
    time("right_cosets", [&] { right_cosets(g512, h); });
    time("normalizer", [&] { normalizer(g512, h); });
    time("normal_closure", [&] { normal_closure(g512, h); });
    time("commutator_subgroup", [&] { commutator_subgroup(g512); });
    time("sylow_decomposition", [&] { sylow_decomposition(g512); });
    time("prime_component", [&] {
      for (Elem x = 0; x < g512.order(); ++x) prime_component(g512, x, 2);
    });
    time("quotient_group", [&] { quotient_group(g512, normal_closure(g512, h)); });
    time("reduce_generating_set", [&] {
      std::vector<Elem> all(g512.order() - 1);
      for (Elem x = 1; x < g512.order(); ++x) all[x - 1] = x;
      reduce_generating_set(g512, GenSet::from_elements(g512, all));
    });
    time("build_subnormal_series", [&] { build_subnormal_series(g512, h, SeriesMode::Nilpotent); });
    std::string slowest;
    double slow = 0;
    for (const auto& [op, secs] : kernel)
      if (secs >= slow) {
        slow = secs;
        slowest = op;
      }
    ok = ok && slow < kKernelSeconds && gensets == 3;
    report(10, "scale", ok,
           "order 256 cycles: worst " + std::to_string(worst) + " s over " + std::to_string(gensets) +
               " generating sets (limit " + std::to_string(kScaleSeconds) + " s); order 512 kernel ops: slowest " +
               slowest + " " + std::to_string(slow) + " s (limit " + std::to_string(kKernelSeconds) + " s)");
  }

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
