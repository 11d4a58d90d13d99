#include "hamwalk/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "hamwalk/builtin.hpp"
#include "hamwalk/engine.hpp"
#include "hamwalk/oracle.hpp"

namespace hamwalk::harness {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::TwoGen, "2gen"}, {Suite::PGroup, "pgroup"}, {Suite::PxA, "pxa"},
    {Suite::Valence4, "val4"}, {Suite::Oracle, "oracle"}};

// FNV-1a; std::hash is not stable across library implementations.
std::uint64_t fnv(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Uniform draw below n straight from the engine, so sequences do not depend
// on the standard library's distribution implementation.
std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

std::mt19937_64 rng_for(std::uint64_t seed, const std::string& group, Suite suite) {
  return std::mt19937_64(fnv(to_string(suite), fnv(group, seed)));
}

template <class T>
std::vector<T> sample(std::vector<T> all, std::size_t k, std::mt19937_64& rng) {
  if (all.size() <= k) return all;
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + draw(rng, all.size() - i)]);
  all.resize(k);
  return all;
}

struct Job {
  Suite suite;
  std::size_t entry;
  std::vector<Elem> gens;
};

std::vector<std::vector<Elem>> generating_pairs(const Group& g, bool ordered) {
  std::vector<std::vector<Elem>> out;
  for (Elem a = 1; a < g.order(); ++a)
    for (Elem b = ordered ? 1 : a + 1; b < g.order(); ++b) {
      if (a == b) continue;
      const Elem ab[2] = {a, b};
      if (generates(g, ab)) out.push_back({a, b});
    }
  return out;
}

// Distinct random non-identity elements until they generate, then sometimes
// one redundant extra.
std::vector<Elem> random_genset(const Group& g, std::mt19937_64& rng) {
  std::vector<Elem> s;
  std::vector<bool> used(g.order());
  auto pick = [&] {
    Elem x;
    do x = static_cast<Elem>(1 + draw(rng, g.order() - 1)); while (used[x]);
    used[x] = true;
    s.push_back(x);
  };
  while (!generates(g, s)) pick();
  if (s.size() + 1 < g.order() && draw(rng, 3) == 0) pick();
  return s;
}

std::size_t valence(const Group& g, const std::vector<Elem>& s) {
  std::size_t v = 0;
  for (Elem x : s) v += g.inv(x) == x ? 1 : 2;
  return v;
}

bool minimal_generating(const Group& g, const std::vector<Elem>& s) {
  if (!generates(g, s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Elem> t;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) t.push_back(s[j]);
    if (generates(g, t)) return false;
  }
  return true;
}

void valence4_sets(const Group& g, std::vector<Elem>& cur, Elem from,
                   std::vector<std::vector<Elem>>& out) {
  if (!cur.empty() && minimal_generating(g, cur)) {
    out.push_back(cur);
    return;  // supersets of a generating set are not minimal
  }
  for (Elem x = from; x < g.order(); ++x) {
    cur.push_back(x);
    if (valence(g, cur) <= 4) valence4_sets(g, cur, x + 1, out);
    cur.pop_back();
  }
}

bool nilpotent(const Group& g) { return sylow_decomposition(g).nilpotent; }

std::vector<std::string> labels_of(const GenSet& s, const Walk& w) { return step_labels(s, w); }

CaseRecord run_case(const Job& job, const Group& g) {
  CaseRecord rec;
  rec.suite = job.suite;
  rec.group = g.name();
  rec.order = g.order();
  const GenSet s = GenSet::from_elements(g, job.gens);
  rec.gens = s.labels();

  EngineStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const CosetCayleyDigraph d(g, Subgroup::trivial(g.order()), s);
  auto check = [&](const Walk& w, WalkKind kind) {
    rec.steps = labels_of(s, w);
    if (verify_hamiltonian(d, w, kind)) {
      rec.outcome = Outcome::Pass;
    } else {
      rec.outcome = Outcome::Fail;
      rec.detail = "walk failed independent verification";
    }
  };
  try {
    switch (job.suite) {
      case Suite::TwoGen: check(ham_path_2gen(g, s, &stats), WalkKind::Path); break;
      case Suite::PGroup: check(pgroup_ham_cycle(g, s, &stats), WalkKind::Cycle); break;
      case Suite::PxA: check(ham_path_pxa(g, s, &stats), WalkKind::Path); break;
      case Suite::Valence4: check(ham_path_valence4(g, s, &stats), WalkKind::Path); break;
      case Suite::Oracle: {
        auto found = brute_force_ham(d, WalkKind::Path, SearchBudget{});
        rec.oracle_nodes = found.nodes;
        if (found.status != SearchStatus::Found) {
          rec.outcome = Outcome::Fail;
          rec.detail = "oracle: " + std::string(to_string(found.status));
          break;
        }
        check(*found.walk, WalkKind::Path);
        if (rec.outcome != Outcome::Pass) break;
        try {
          const Walk engine = ham_path_2gen(g, s, &stats);
          if (!verify_hamiltonian(d, engine, WalkKind::Path)) {
            rec.outcome = Outcome::Fail;
            rec.detail = "engine walk failed verification while the oracle found one";
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotNilpotent || nilpotent(g)) throw;
        }
        break;
      }
    }
  } catch (const Error& e) {
    rec.steps.clear();
    rec.detail = e.what();
    const bool gate = e.kind() == ErrorKind::NotNilpotent && !nilpotent(g);
    rec.outcome = gate && job.suite != Suite::PGroup ? Outcome::Rejected : Outcome::Fail;
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rec.series_built = stats.series_built;
  rec.series_violations = stats.series_violations;
  rec.max_depth = stats.max_pgroup_depth;
  if (job.suite == Suite::PGroup && stats.max_pgroup_depth > std::bit_width(g.order()) - 1) {
    rec.outcome = Outcome::Fail;
    rec.detail = "recursion depth above log2|G|";
  }
  return rec;
}

void enumerate(const Group& g, std::size_t entry, Suite suite, const Options& opts,
               std::vector<Job>& jobs) {
  auto rng = rng_for(opts.seed, g.name(), suite);
  std::vector<std::vector<Elem>> sets;
  switch (suite) {
    case Suite::TwoGen: {
      auto all = generating_pairs(g, true);
      sets = opts.exhaustive || g.order() <= 27 ? all : sample(std::move(all), opts.pair_samples, rng);
      break;
    }
    case Suite::PGroup:
    case Suite::PxA:
      for (std::size_t i = 0; i < opts.set_samples; ++i) sets.push_back(random_genset(g, rng));
      break;
    case Suite::Valence4: {
      std::vector<Elem> cur;
      valence4_sets(g, cur, 1, sets);
      if (!opts.exhaustive && g.order() > 24) sets = sample(std::move(sets), opts.val4_samples, rng);
      break;
    }
    case Suite::Oracle: sets = generating_pairs(g, false); break;
  }
  for (auto& s : sets) jobs.push_back({suite, entry, std::move(s)});
}

}  // namespace

std::string_view to_string(Suite s) {
  for (auto [k, name] : kSuiteNames)
    if (k == s) return name;
  return "unknown";
}

Suite parse_suite(std::string_view s) {
  for (auto [k, name] : kSuiteNames)
    if (name == s) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(s) + "'");
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Rejected: return "rejected";
  }
  return "unknown";
}

std::vector<CorpusEntry> default_corpus() {
  // nilpotent groups, p-groups and P x A products, then the negatives
  static const char* const kNames[] = {
      "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z10", "z11", "z12", "z13", "z14", "z15",
      "z16", "z18", "z20", "z24", "z25", "z27", "z32", "e2^2", "e2^3", "e2^4", "e2^5", "e3^2",
      "e3^3", "d8", "q8", "d16", "q16", "m16", "d32", "q32", "m32", "h27",
      "product:z2,z4", "product:z2,z6", "product:z4,z4", "product:z2,z8", "product:z3,z6",
      "product:z2,z12", "product:z3,z9", "product:z4,z4,z4", "product:q8,q8", "product:d8,d8",
      "product:d8,z2", "product:d8,z3", "product:d8,z4", "product:d8,z6",
      "product:q8,z2", "product:q8,z3", "product:q8,z4", "product:q8,z6",
      "product:h27,z2", "product:h27,z3", "product:h27,z4", "product:h27,z6",
      "s3", "d10"};
  std::vector<CorpusEntry> out;
  for (const char* name : kNames) {
    const std::string source = std::string("builtin:") + name;
    const Group g = builtin::by_name(source);
    const bool nil = nilpotent(g);
    const bool pgroup = g.order() > 1 && prime_power_base(g.order()).has_value();
    const std::string_view n(name);
    const bool pxa = n.starts_with("product:d8,z") || n.starts_with("product:q8,z") ||
                     n.starts_with("product:h27,z");
    CorpusEntry e{source, {}};
    if (g.order() <= 64) e.suites.push_back(Suite::TwoGen);
    if (pgroup && g.order() <= 64) e.suites.push_back(Suite::PGroup);
    if (pxa) e.suites.push_back(Suite::PxA);
    if (nil && g.order() <= 48) e.suites.push_back(Suite::Valence4);
    if (g.order() <= 16) e.suites.push_back(Suite::Oracle);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<const CaseRecord*> Report::suite_cases(Suite s) const {
  std::vector<const CaseRecord*> out;
  for (const auto& c : cases)
    if (c.suite == s) out.push_back(&c);
  return out;
}

nlohmann::json to_json(const CaseRecord& c) {
  return nlohmann::json{{"suite", std::string(to_string(c.suite))},
                        {"group", c.group},
                        {"order", c.order},
                        {"gens", c.gens},
                        {"outcome", std::string(to_string(c.outcome))},
                        {"detail", c.detail},
                        {"steps", c.steps},
                        {"millis", c.millis},
                        {"series_built", c.series_built},
                        {"series_violations", c.series_violations},
                        {"max_depth", c.max_depth},
                        {"oracle_nodes", c.oracle_nodes}};
}

std::string json_lines(const Report& r) {
  std::string out;
  for (const auto& c : r.cases) out += to_json(c).dump() + "\n";
  return out;
}

std::string summary(const Report& r) {
  struct Tally {
    std::size_t pass = 0, fail = 0, rejected = 0;
    double millis = 0;
  };
  std::map<std::string, Tally> by_suite;
  for (const auto& c : r.cases) {
    auto& t = by_suite[std::string(to_string(c.suite))];
    (c.outcome == Outcome::Pass ? t.pass : c.outcome == Outcome::Fail ? t.fail : t.rejected)++;
    t.millis += c.millis;
  }
  std::ostringstream os;
  for (const auto& [name, t] : by_suite)
    os << name << ": " << t.pass << " pass, " << t.fail << " fail, " << t.rejected << " rejected ("
       << static_cast<long long>(t.millis) << " ms cpu)\n";
  os << "total: " << r.cases.size() << " cases, " << r.failed << " failed, " << r.series_built
     << " series, " << r.series_violations << " series violations, "
     << static_cast<long long>(r.millis) << " ms wall\n";
  for (const auto& c : r.cases)
    if (c.outcome == Outcome::Fail)
      os << "FAIL " << to_string(c.suite) << " " << c.group << " {" << [&] {
        std::string s;
        for (const auto& l : c.gens) s += (s.empty() ? "" : ",") + l;
        return s;
      }() << "}: " << c.detail << "\n";
  return os.str();
}

Report property_harness(const std::vector<CorpusEntry>& corpus, const Options& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Group> groups;
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    groups.push_back(builtin::by_name(corpus[i].source));
    groups.back().set_name(corpus[i].source);
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (groups[i].order() <= opts.max_order)
    for (Suite s : corpus[i].suites)
      if (std::find(opts.suites.begin(), opts.suites.end(), s) != opts.suites.end())
        enumerate(groups[i], i, s, opts, jobs);

  Report report;
  report.cases.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();)
      report.cases[k] = run_case(jobs[k], groups[jobs[k].entry]);
  };
  const unsigned n = std::max(1u, opts.workers);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& c : report.cases) {
    (c.outcome == Outcome::Pass ? report.passed : c.outcome == Outcome::Fail ? report.failed : report.rejected)++;
    report.series_built += c.series_built;
    report.series_violations += c.series_violations;
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string walk_digest(const Report& r) {
  std::string out;
  for (const auto& c : r.cases) {
    out += std::string(to_string(c.suite)) + "|" + c.group + "|";
    for (const auto& l : c.gens) out += l + ",";
    out += "|" + std::string(to_string(c.outcome)) + "|";
    for (const auto& l : c.steps) out += l + ",";
    out += "\n";
  }
  return out;
}

}  // namespace hamwalk::harness
