#include "doctest.h"

#include <bit>

#include "hamwalk/series.hpp"
#include "support.hpp"

using namespace hamwalk;
using naive::el;
using naive::els;
using naive::label_set;

namespace {

// Independent re-check of a series: endpoints, normality of each step,
// prime-power quotients, conjugate generation and the ledger.
void check_by_hand(const Group& g, const Subgroup& h, const SubnormalSeries& s) {
  REQUIRE(s.length() >= 1);
  CHECK(s.chain.front() == h);
  std::vector<Elem> conj;
  for (Elem c = 0; c < g.order(); ++c)
    for (Elem x : h.members()) conj.push_back(g.mul(g.mul(naive::inverse(g, c), x), c));
  CHECK(s.top().members() == naive::closure(g, conj));
  REQUIRE(s.conjugators.size() + 1 == s.length());
  REQUIRE(s.ledger.size() == s.length());
  for (std::size_t k = 0; k + 1 < s.length(); ++k) {
    const auto& lo = s.chain[k].members();
    const auto& hi = s.chain[k + 1].members();
    CHECK(lo.size() < hi.size());
    CHECK(naive::normal_in(g, lo, hi));
    CHECK(naive::is_prime_power(hi.size() / lo.size()));
    const Elem c = s.conjugators[k];
    std::vector<Elem> gens = lo;
    for (Elem x : h.members()) gens.push_back(g.mul(g.mul(naive::inverse(g, c), x), c));
    CHECK(naive::closure(g, gens) == hi);
  }
  for (std::size_t k = 0; k < s.length(); ++k) {
    std::vector<Elem> gens;
    for (Elem c : s.ledger[k])
      for (Elem x : h.members()) gens.push_back(g.mul(g.mul(naive::inverse(g, c), x), c));
    CHECK(naive::closure(g, gens) == s.chain[k].members());
  }
  const std::size_t top = s.top().order();
  CHECK(s.length() <= static_cast<std::size_t>(std::bit_width(top) - 1) + 1);
}

}  // namespace

TEST_CASE("normal subgroup gives a one-step series") {
  const Group q8 = builtin::quaternion(8);
  const auto h = generated_subgroup(q8, els(q8, {"k"}));
  auto s = build_subnormal_series(q8, h, SeriesMode::Nilpotent);
  CHECK(s.length() == 1);
  CHECK(s.top() == h);
  CHECK(s.quotient_orders().empty());
  CHECK(s.ledger.front() == std::vector<Elem>{kIdentity});
}

TEST_CASE("d8 reflection subgroup") {
  const Group d8 = builtin::dihedral(8);
  const auto h = generated_subgroup(d8, els(d8, {"r^3f"}));
  auto s = build_subnormal_series(d8, h, SeriesMode::Nilpotent);
  REQUIRE(s.length() == 2);
  CHECK(label_set(d8, s.chain[0].members()) == std::set<std::string>{"e", "r^3f"});
  CHECK(label_set(d8, s.chain[1].members()) == std::set<std::string>{"e", "r^2", "rf", "r^3f"});
  REQUIRE(s.conjugators.size() == 1);
  CHECK(d8.label(s.conjugators[0]) == "r");
  CHECK(s.quotient_orders() == std::vector<std::size_t>{2});
  CHECK(normalizer(d8, h).order() == 4);
  CHECK(s.ledger_fallbacks == 0);
  check_by_hand(d8, h, s);
}

TEST_CASE("p-group closure mode on s3") {
  const Group s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 10);
  const auto h = generated_subgroup(s3, els(s3, {"(0 1 2)"}));
  auto s = build_subnormal_series(s3, h, SeriesMode::PGroupClosure);
  CHECK(s.length() == 1);
  CHECK(s.top() == h);

  CHECK(naive::error_kind([&] { build_subnormal_series(s3, h, SeriesMode::Nilpotent); }) ==
        ErrorKind::PreconditionFailed);
  // <(0 1)>^G is all of S3, not a p-group
  const auto t = generated_subgroup(s3, els(s3, {"(0 1)"}));
  CHECK(naive::error_kind([&] { build_subnormal_series(s3, t, SeriesMode::PGroupClosure); }) ==
        ErrorKind::PreconditionFailed);
}

TEST_CASE("series invariants over cyclic subgroups of the corpus") {
  for (const auto& name : {"d8", "q8", "d16", "q16", "m16", "h27", "d32", "product:d8,z3",
                           "product:q8,z6", "product:d8,d8", "product:h27,z2", "m32"}) {
    const Group g = builtin::by_name(name);
    INFO(name);
    for (Elem x = 0; x < g.order(); ++x) {
      const auto h = generated_subgroup(g, std::vector<Elem>{x});
      auto s = build_subnormal_series(g, h, SeriesMode::Nilpotent);
      CHECK(check_series(g, h, s).empty());
      CHECK(s.ledger_fallbacks == 0);
      check_by_hand(g, h, s);
    }
  }
}

TEST_CASE("series invariants over two-element subgroups") {
  for (const auto& name : {"d16", "m16", "h27", "product:q8,q8"}) {
    const Group g = builtin::by_name(name);
    INFO(name);
    for (Elem x = 1; x < g.order(); x += 3)
      for (Elem y = x + 1; y < g.order(); y += 5) {
        const auto h = generated_subgroup(g, std::vector<Elem>{x, y});
        auto s = build_subnormal_series(g, h, SeriesMode::Nilpotent);
        CHECK(check_series(g, h, s).empty());
        check_by_hand(g, h, s);
      }
  }
}

TEST_CASE("both modes give valid series on p-groups") {
  for (const auto& name : {"d8", "q16", "h27", "m16"}) {
    const Group g = builtin::by_name(name);
    for (Elem x = 0; x < g.order(); ++x) {
      const auto h = generated_subgroup(g, std::vector<Elem>{x});
      auto a = build_subnormal_series(g, h, SeriesMode::Nilpotent);
      auto b = build_subnormal_series(g, h, SeriesMode::PGroupClosure);
      CHECK(check_series(g, h, a).empty());
      CHECK(check_series(g, h, b).empty());
      CHECK(a.top() == b.top());
      check_by_hand(g, h, b);
    }
  }
}

TEST_CASE("p-group closure mode in non-nilpotent groups") {
  // subgroups whose normal closure is a p-group inside S4 and D10
  for (const auto& name : {"s4", "d10", "d12", "semidirect:7"}) {
    const Group g = builtin::by_name(name);
    INFO(name);
    std::size_t used = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      const auto h = generated_subgroup(g, std::vector<Elem>{x});
      if (!naive::is_prime_power(normal_closure(g, h).order())) continue;
      ++used;
      auto s = build_subnormal_series(g, h, SeriesMode::PGroupClosure);
      CHECK(check_series(g, h, s).empty());
      check_by_hand(g, h, s);
    }
    CHECK(used > 1);
  }
}

TEST_CASE("check_series reports broken series") {
  const Group d8 = builtin::dihedral(8);
  const auto h = generated_subgroup(d8, els(d8, {"r^3f"}));
  auto s = build_subnormal_series(d8, h, SeriesMode::Nilpotent);
  auto broken = s;
  broken.chain.pop_back();
  broken.conjugators.pop_back();
  broken.ledger.pop_back();
  CHECK_FALSE(check_series(d8, h, broken).empty());
  auto wrong_conj = s;
  wrong_conj.conjugators[0] = kIdentity;
  CHECK_FALSE(check_series(d8, h, wrong_conj).empty());
}
