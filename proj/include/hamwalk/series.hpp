#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hamwalk/group.hpp"

namespace hamwalk {

enum class SeriesMode {
  Nilpotent,      // G nilpotent
  PGroupClosure,  // only the normal closure H^G is required to be a p-group
};

/// H = H_1 < H_2 < ... < H_m = H^G, each normal in the next, with the
/// conjugating element used at every step. ledger[k] lists elements c whose
/// conjugates c^-1 H c generate chain[k].
struct SubnormalSeries {
  std::vector<Subgroup> chain;
  std::vector<Elem> conjugators;          // conjugators[k] builds chain[k + 1]
  std::vector<std::vector<Elem>> ledger;  // ledger[0] = {identity}
  std::size_t ledger_fallbacks = 0;

  std::size_t length() const noexcept { return chain.size(); }
  const Subgroup& top() const { return chain.back(); }
  std::vector<std::size_t> quotient_orders() const;
};

SubnormalSeries build_subnormal_series(const Group& g, const Subgroup& h, SeriesMode mode);

/// Re-checks the five structural properties of a series (endpoints,
/// subnormality, prime-power quotients, conjugate generation, ledger).
/// Returns one message per violation.
std::vector<std::string> check_series(const Group& g, const Subgroup& h,
                                      const SubnormalSeries& series);

}  // namespace hamwalk
