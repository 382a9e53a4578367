// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>
#include <set>

#include "frz/polygon.hpp"

using frz::Diagonal;
using frz::Dissection;
using frz::DissectionKind;
using frz::QuidditySeq;

namespace {

QuidditySeq seq(std::initializer_list<long> xs) {
  QuidditySeq q;
  for (long x : xs) q.emplace_back(x);
  return q;
}

}  // namespace

TEST_CASE("construction validates diagonals") {
  CHECK_NOTHROW(Dissection(5, {{1, 4}, {2, 4}}));
  CHECK_NOTHROW(Dissection(6, {}));
  CHECK_THROWS_AS(Dissection(2, {}), frz::DissectionError);
  CHECK_THROWS_AS(Dissection(5, {{1, 2}}), frz::DissectionError);     // a side
  CHECK_THROWS_AS(Dissection(5, {{1, 5}}), frz::DissectionError);     // wrap side
  CHECK_THROWS_AS(Dissection(5, {{0, 3}}), frz::DissectionError);     // range
  CHECK_THROWS_AS(Dissection(5, {{3, 3}}), frz::DissectionError);     // degenerate
  CHECK_THROWS_AS(Dissection(5, {{1, 3}, {1, 3}}), frz::DissectionError);
  CHECK_THROWS_AS(Dissection(5, {{1, 3}, {2, 4}}), frz::DissectionError);  // crossing
  CHECK(frz::diagonals_cross({1, 3}, {2, 4}));
  CHECK_FALSE(frz::diagonals_cross({1, 3}, {3, 5}));
  CHECK_FALSE(frz::diagonals_cross({1, 3}, {1, 4}));
}

TEST_CASE("pentagon with diagonals (1,4),(2,4)") {
  Dissection d(5, {{1, 4}, {2, 4}});
  CHECK(d.is_triangulation());
  CHECK(d.quiddity() == seq({2, 2, 1, 3, 1}));
  CHECK(d.faces().size() == 3);
}

TEST_CASE("bare polygon and quiddity counting") {
  Dissection hex(6, {});
  CHECK(hex.quiddity() == seq({1, 1, 1, 1, 1, 1}));
  CHECK(hex.is_3d());
  CHECK_FALSE(hex.is_triangulation());
  CHECK(frz::ovsienko_index(hex) == 1);
  Dissection tri(3, {});
  CHECK(tri.quiddity() == seq({1, 1, 1}));
  CHECK(frz::ovsienko_index(tri) == 0);
  Dissection quad(4, {});
  CHECK_FALSE(quad.is_3d());
  CHECK_THROWS_AS(frz::ovsienko_index(quad), frz::DissectionError);
}

TEST_CASE("enumeration counts match Catalan and 3d counts") {
  CHECK(frz::enumerate_dissections(DissectionKind::Triangulation, 3).size() == 1);
  CHECK(frz::enumerate_dissections(DissectionKind::Triangulation, 4).size() == 2);
  CHECK(frz::enumerate_dissections(DissectionKind::Triangulation, 5).size() == 5);
  CHECK(frz::enumerate_dissections(DissectionKind::Triangulation, 6).size() == 14);
  CHECK(frz::enumerate_dissections(DissectionKind::Triangulation, 7).size() == 42);
  CHECK(frz::enumerate_dissections(DissectionKind::ThreeD, 6).size() == 15);
  CHECK(frz::enumerate_dissections(DissectionKind::ThreeD, 3).size() == 1);
  CHECK(frz::enumerate_dissections(DissectionKind::ThreeD, 4).size() == 2);
  // No duplicates and every object has the right face sizes.
  auto tds = frz::enumerate_dissections(DissectionKind::ThreeD, 7);
  std::set<Dissection> uniq(tds.begin(), tds.end());
  CHECK(uniq.size() == tds.size());
  for (const auto& d : tds) CHECK(d.is_3d());
}

TEST_CASE("quiddity sets for small n") {
  auto qs3 = frz::quiddity_set(3);
  CHECK(qs3 == std::vector<QuidditySeq>{seq({1, 1, 1})});
  auto qs4 = frz::quiddity_set(4);
  CHECK(qs4 == std::vector<QuidditySeq>{seq({1, 2, 1, 2}), seq({2, 1, 2, 1})});
  auto qs5 = frz::quiddity_set(5);
  CHECK(qs5.size() == 5);
  for (long k = 0; k < 5; ++k) {
    QuidditySeq rot = frz::rotate(seq({3, 1, 2, 2, 1}), static_cast<std::size_t>(k));
    CHECK(std::count(qs5.begin(), qs5.end(), rot) == 1);
  }
}

TEST_CASE("quiddity sum is 3n-6 and reconstruction round-trips") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const auto& d : frz::enumerate_dissections(DissectionKind::Triangulation, n)) {
      QuidditySeq q = d.quiddity();
      frz::GaussRational sum;
      for (const auto& x : q) sum += x;
      CHECK(sum == frz::GaussRational(3 * static_cast<long>(n) - 6));
      CHECK(frz::triangulation_of(q) == d);
    }
  }
}

TEST_CASE("reconstruction rejects non-quiddities") {
  CHECK_THROWS_AS(frz::triangulation_of(seq({2, 2, 2, 2})), frz::NotATriangulationQuiddity);
  CHECK_THROWS_AS(frz::triangulation_of(seq({1, 1, 1, 1})), frz::NotATriangulationQuiddity);
  CHECK_THROWS_AS(frz::triangulation_of(seq({1, 1})), frz::NotATriangulationQuiddity);
  CHECK_THROWS_AS(frz::triangulation_of(seq({0, 3, 1, 2})), frz::NotATriangulationQuiddity);
}

TEST_CASE("glueing realizes the sequence products") {
  Dissection penta(5, {{1, 4}, {2, 4}});   // quiddity (2,2,1,3,1)
  Dissection hexa = frz::triangulation_of(seq({3, 1, 3, 1, 3, 1}));
  Dissection glued = frz::glue_circ(penta, 2, hexa);
  CHECK(glued.n() == 10);
  CHECK(glued.quiddity() == seq({2, 6, 1, 3, 1, 3, 2, 2, 3, 1}));

  Dissection tri(3, {});
  CHECK(frz::glue_circ(tri, 1, tri).quiddity() == seq({3, 1, 2, 2, 1}));

  Dissection hex(6, {});
  Dissection hh = frz::glue_circ(hex, 1, hex);
  CHECK(hh.n() == 11);
  CHECK(hh.quiddity() == seq({3, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1}));
  CHECK(hh.is_3d());
  CHECK(frz::ovsienko_index(hh) == 2);
  CHECK(frz::monodromy_class(hh.quiddity()) == frz::MonodromyClass::MinusId);

  Dissection hb = frz::glue_bullet(hex, 2, hex);
  CHECK(hb.quiddity() == seq({2, 2, 1, 1, 1, 1, 3, 1, 1, 1, 1}));
  CHECK(frz::ovsienko_index(hb) == 2);
}

TEST_CASE("glueing commutes with quiddity_of for all small cases") {
  std::vector<Dissection> objs;
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& d : frz::enumerate_dissections(DissectionKind::ThreeD, n)) objs.push_back(d);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (std::size_t i = 1; i <= a.n(); ++i) {
        CHECK(frz::glue_circ(a, i, b).quiddity() == frz::circ(a.quiddity(), i, b.quiddity()));
        CHECK(frz::glue_bullet(a, i, b).quiddity() == frz::bullet(a.quiddity(), i, b.quiddity()));
      }
}

TEST_CASE("Ovsienko index is additive under both glueings") {
  std::vector<Dissection> objs;
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& d : frz::enumerate_dissections(DissectionKind::ThreeD, n)) objs.push_back(d);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (std::size_t i = 1; i <= a.n(); ++i) {
        CHECK(frz::ovsienko_index(frz::glue_circ(a, i, b)) ==
              frz::ovsienko_index(a) + frz::ovsienko_index(b));
        CHECK(frz::ovsienko_index(frz::glue_bullet(a, i, b)) ==
              frz::ovsienko_index(a) + frz::ovsienko_index(b));
      }
}

TEST_CASE("even 3d-dissections have monodromy -Id") {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& d : frz::enumerate_dissections(DissectionKind::ThreeD, n))
      if (frz::ovsienko_index(d) % 2 == 0)
        CHECK(frz::monodromy_class(d.quiddity()) == frz::MonodromyClass::MinusId);
}
