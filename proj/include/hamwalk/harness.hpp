#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamwalk/digraph.hpp"
#include "hamwalk/group.hpp"

namespace hamwalk::harness {

enum class Suite { TwoGen, PGroup, PxA, Valence4, Oracle };
std::string_view to_string(Suite s);
Suite parse_suite(std::string_view s);

struct CorpusEntry {
  std::string source;  // "builtin:..." name
  std::vector<Suite> suites;
};

/// The built-in corpus: nilpotent groups up to order 64, p-groups, P x A
/// products and two non-nilpotent negatives.
std::vector<CorpusEntry> default_corpus();

struct Options {
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
  std::size_t max_order = 256;  // corpus entries above this are skipped
  bool exhaustive = false;  // scan every case instead of sampling
  std::vector<Suite> suites{Suite::TwoGen, Suite::PGroup, Suite::PxA, Suite::Valence4,
                            Suite::Oracle};
  std::size_t pair_samples = 200;   // 2gen, orders above 27
  std::size_t set_samples = 50;     // pgroup, pxa
  std::size_t val4_samples = 60;    // val4, orders above 24
};

/// Rejected: a non-nilpotent group correctly refused with NotNilpotent.
enum class Outcome { Pass, Fail, Rejected };
std::string_view to_string(Outcome o);

struct CaseRecord {
  Suite suite = Suite::TwoGen;
  std::string group;
  std::size_t order = 0;
  std::vector<std::string> gens;
  Outcome outcome = Outcome::Fail;
  std::string detail;               // error kind or failure message
  std::vector<std::string> steps;   // the produced walk, as labels
  double millis = 0;
  std::size_t series_built = 0;
  std::size_t series_violations = 0;
  std::size_t max_depth = 0;
  std::uint64_t oracle_nodes = 0;
};

struct Report {
  std::vector<CaseRecord> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t rejected = 0;
  std::size_t series_built = 0;
  std::size_t series_violations = 0;
  double millis = 0;

  bool ok() const noexcept { return failed == 0; }
  /// Cases for one suite, in deterministic order.
  std::vector<const CaseRecord*> suite_cases(Suite s) const;
};

nlohmann::json to_json(const CaseRecord& c);
/// One JSON object per line.
std::string json_lines(const Report& r);
std::string summary(const Report& r);

/// Enumerates the cases for every entry and runs them across
/// `opts.workers` threads; records come back in enumeration order.
Report property_harness(const std::vector<CorpusEntry>& corpus, const Options& opts);

/// Concatenated walk outputs (suite, group, gens, steps) for byte comparison.
std::string walk_digest(const Report& r);

}  // namespace hamwalk::harness
