// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>

#include "frz/quiddity.hpp"

using frz::GaussRational;
using frz::MonodromyClass;
using frz::QuidditySeq;

namespace {

QuidditySeq seq(std::initializer_list<long> xs) {
  QuidditySeq q;
  for (long x : xs) q.emplace_back(x);
  return q;
}

const QuidditySeq kPoint = seq({0});
const QuidditySeq kSegment = seq({0, 0});

}  // namespace

TEST_CASE("monodromy classification") {
  CHECK(frz::monodromy_class(seq({1, 1, 1})) == MonodromyClass::MinusId);
  CHECK(frz::monodromy_class(seq({2, 1, 2, 1})) == MonodromyClass::MinusId);
  CHECK(frz::monodromy_class(seq({3, 1, 2, 2, 1})) == MonodromyClass::MinusId);
  CHECK(frz::monodromy_class(seq({1, 1, 1, 1})) == MonodromyClass::Other);
  CHECK(frz::monodromy_class(seq({0, 0, 0, 0})) == MonodromyClass::PlusId);
  CHECK(frz::monodromy_class(seq({1, 1, 1, 1, 1, 1})) == MonodromyClass::PlusId);
  // Non-integer solutions exist too; lambda = 3 instance.
  QuidditySeq lam{GaussRational(1), GaussRational(4), GaussRational(2, 3), GaussRational(3),
                  GaussRational(5, 3)};
  CHECK(frz::is_quiddity(lam));
}

TEST_CASE("circ on interior and wraparound indices") {
  // Hexagon glued to hexagon at position 1.
  CHECK(frz::circ(seq({1, 1, 1, 1, 1, 1}), 1, seq({1, 1, 1, 1, 1, 1})) ==
        seq({3, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1}));
  // Pentagon glued from quiddity sequences of smaller polygons.
  CHECK(frz::circ(seq({2, 2, 1, 3, 1}), 2, seq({3, 1, 3, 1, 3, 1})) ==
        seq({2, 6, 1, 3, 1, 3, 2, 2, 3, 1}));
  CHECK(frz::circ(seq({2, 1, 2, 1}), 2, seq({1, 1, 1})) == seq({2, 3, 1, 2, 3, 1}));
  CHECK(frz::circ(seq({1, 1, 1}), 3, seq({1, 1, 1})) == seq({2, 1, 3, 1, 2}));
}

TEST_CASE("circ preserves the minus-identity monodromy") {
  std::vector<QuidditySeq> qs = {seq({1, 1, 1}), seq({2, 1, 2, 1}), seq({3, 1, 2, 2, 1}),
                                 seq({2, 2, 1, 3, 1})};
  for (const auto& t : qs)
    for (const auto& s : qs)
      for (std::size_t i = 1; i <= t.size(); ++i) {
        QuidditySeq r = frz::circ(t, i, s);
        CHECK(r.size() == t.size() + s.size() - 1);
        CHECK(frz::is_quiddity(r));
      }
}

TEST_CASE("circ sentinel rules") {
  CHECK(frz::circ(seq({2, 1, 2, 1}), 3, kPoint) == seq({2, 1, 2, 1}));
  CHECK(frz::circ(kPoint, 1, seq({3, 1, 2, 2, 1})) == seq({3, 1, 2, 2, 1}));
  CHECK(frz::circ(kSegment, 1, kSegment) == seq({1, 1, 1}));
  CHECK(frz::circ(kSegment, 2, kSegment) == seq({1, 1, 1}));
  // Segment glued on a side of the square.
  CHECK(frz::circ(seq({1, 2, 1, 2}), 2, kSegment) == seq({1, 3, 1, 2, 2}));
  CHECK(frz::circ(seq({2, 1, 2, 1}), 4, kSegment) == seq({3, 1, 2, 2, 1}));
  // Square glued on a side of the segment.
  CHECK(frz::circ(kSegment, 1, seq({1, 2, 1, 2})) == seq({2, 2, 1, 3, 1}));
  CHECK(frz::circ(kSegment, 2, seq({1, 2, 1, 2})) == seq({1, 2, 2, 1, 3}));
}

TEST_CASE("circ rejects malformed sentinels and bad indices") {
  CHECK_THROWS_AS(frz::circ(seq({5}), 1, seq({1, 1, 1})), frz::ProductError);
  CHECK_THROWS_AS(frz::circ(seq({1, 1}), 1, seq({1, 1, 1})), frz::ProductError);
  CHECK_THROWS_AS(frz::circ(seq({1, 1, 1}), 0, kPoint), frz::ProductError);
  CHECK_THROWS_AS(frz::circ(seq({1, 1, 1}), 4, kPoint), frz::ProductError);
  CHECK_THROWS_AS(frz::circ(QuidditySeq{}, 1, kPoint), frz::ProductError);
}

TEST_CASE("bullet product") {
  CHECK(frz::bullet(seq({2, 2, 1, 3, 1}), 2, seq({3, 1, 3, 1, 3, 1})) ==
        seq({3, 2, 3, 1, 3, 1, 6, 1, 3, 1}));
  CHECK(frz::bullet(seq({2, 2, 1, 3, 1}), 1, seq({3, 1, 3, 1, 3, 1})) ==
        seq({6, 2, 1, 3, 2, 2, 3, 1, 3, 1}));
  CHECK(frz::bullet(seq({1, 1, 1, 1, 1, 1}), 2, seq({1, 1, 1, 1, 1, 1})) ==
        seq({2, 2, 1, 1, 1, 1, 3, 1, 1, 1, 1}));
  CHECK_THROWS_AS(frz::bullet(kSegment, 1, seq({1, 1, 1})), frz::ProductError);
  CHECK_THROWS_AS(frz::bullet(seq({1, 1, 1}), 1, kSegment), frz::ProductError);
}

TEST_CASE("bullet preserves the minus-identity monodromy") {
  std::vector<QuidditySeq> qs = {seq({1, 1, 1}), seq({2, 1, 2, 1}), seq({2, 2, 1, 3, 1})};
  for (const auto& t : qs)
    for (const auto& s : qs)
      for (std::size_t i = 1; i <= t.size(); ++i) CHECK(frz::is_quiddity(frz::bullet(t, i, s)));
}

TEST_CASE("boxplus") {
  std::vector<QuidditySeq> qs = {seq({1, 1, 1}), seq({2, 1, 2, 1}), seq({3, 1, 2, 2, 1})};
  for (const auto& a : qs)
    for (const auto& b : qs)
      for (std::size_t i = 1; i <= a.size(); ++i) {
        QuidditySeq r = frz::boxplus(a, i, b);
        CHECK(r.size() == a.size() + b.size() - 2);
        CHECK(frz::is_quiddity(r));
      }
  CHECK(frz::boxplus(seq({1, 1, 1}), 1, seq({1, 1, 1})) == seq({2, 1, 2, 1}));
  CHECK_THROWS_AS(frz::boxplus(seq({1, 1, 1, 1}), 1, seq({1, 1, 1})), frz::ProductError);
}

TEST_CASE("id_circ on identity-monodromy sequences") {
  QuidditySeq z4 = seq({0, 0, 0, 0});
  CHECK(frz::id_circ(z4, 1, z4) == seq({-1, 0, 0, -1, -1, 0, 0}));
  CHECK(frz::id_circ(z4, 4, z4) == seq({-1, 0, 0, -1, 0, 0, -1}));
  QuidditySeq ones6 = seq({1, 1, 1, 1, 1, 1});
  CHECK(frz::id_circ(ones6, 1, ones6) == seq({1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1}));
  for (std::size_t k = 1; k <= 4; ++k) CHECK(frz::is_id_quiddity(frz::id_circ(z4, k, ones6)));
  CHECK_THROWS_AS(frz::id_circ(seq({1, 1, 1}), 1, z4), frz::ProductError);
}

TEST_CASE("composition axioms hold and the excluded case strictly fails") {
  std::vector<QuidditySeq> universe = {kPoint,
                                       kSegment,
                                       seq({1, 1, 1}),
                                       seq({2, 1, 2, 1}),
                                       seq({1, 2, 1, 2}),
                                       seq({3, 1, 2, 2, 1}),
                                       seq({2, 2, 1, 3, 1})};
  frz::AxiomReport rep = frz::check_operad_axioms(universe);
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.ok());
  CHECK(rep.sequential_checked > 0);
  CHECK(rep.parallel_checked > 0);
  CHECK(rep.exclusion_checked > 0);

  // The excluded instance, worked out explicitly.
  QuidditySeq lhs =
      frz::circ(frz::circ(seq({3, 1, 2, 2, 1}), 2, seq({2, 1, 2, 1})), 5, seq({1, 1, 1}));
  QuidditySeq rhs =
      frz::circ(seq({3, 1, 2, 2, 1}), 2, frz::circ(seq({2, 1, 2, 1}), 4, seq({1, 1, 1})));
  CHECK(lhs == seq({3, 4, 1, 2, 4, 1, 2, 4, 2, 1}));
  CHECK(rhs == seq({3, 5, 1, 2, 3, 1, 3, 3, 2, 1}));
  CHECK(lhs != rhs);
}

TEST_CASE("rotate") {
  CHECK(frz::rotate(seq({1, 2, 3, 4}), 1) == seq({2, 3, 4, 1}));
  CHECK(frz::rotate(seq({1, 2, 3, 4}), 4) == seq({1, 2, 3, 4}));
  CHECK(frz::to_string(seq({2, 1, 2, 1})) == "(2,1,2,1)");
}
