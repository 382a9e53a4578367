// SPDX-License-Identifier: MIT
//
// Labeled convex polygons with non-crossing diagonal sets: triangulations
// and 3d-dissections, their quiddity sequences and face counts, exhaustive
// enumeration, and the geometric glueings realizing the sequence products.

#ifndef FRZ_POLYGON_HPP
#define FRZ_POLYGON_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "frz/quiddity.hpp"

namespace frz {

// Raised on invalid diagonal sets (out of range, sides, crossings, ...).
struct DissectionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a sequence is not the quiddity sequence of any triangulation.
struct NotATriangulationQuiddity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A diagonal of the polygon in canonical form (min, max), 1-based vertices.
using Diagonal = std::pair<int, int>;

// True when the two diagonals cross in the interior of the convex polygon
// (strict combinatorial interleaving of the endpoints).
bool diagonals_cross(const Diagonal& a, const Diagonal& b);

// A convex polygon with vertices labeled counterclockwise 1..n and a set of
// pairwise non-crossing diagonals.  Diagonals are kept in canonical form
// ((min,max), sorted lexicographically) so equality is structural.
class Dissection {
 public:
  Dissection(std::size_t n, std::vector<Diagonal> diagonals);

  std::size_t n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  // The faces cut out by the diagonals; each face is the list of its
  // vertices in counterclockwise (increasing cyclic) order.
  std::vector<std::vector<int>> faces() const;

  // Number of faces incident with each vertex.
  QuidditySeq quiddity() const;

  bool is_triangulation() const;  // all faces are triangles
  bool is_3d() const;             // all face sizes are multiples of 3

  friend bool operator==(const Dissection& a, const Dissection& b) {
    return a.n_ == b.n_ && a.diagonals_ == b.diagonals_;
  }
  friend bool operator!=(const Dissection& a, const Dissection& b) { return !(a == b); }
  friend bool operator<(const Dissection& a, const Dissection& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.diagonals_ < b.diagonals_;
  }

 private:
  std::size_t n_;
  std::vector<Diagonal> diagonals_;
};

inline QuidditySeq quiddity_of(const Dissection& d) { return d.quiddity(); }

// Reconstructs a triangulation with the given quiddity sequence by
// repeatedly cutting an ear at an entry equal to 1.  Throws
// NotATriangulationQuiddity when that process fails.
Dissection triangulation_of(const QuidditySeq& q);

enum class DissectionKind { Triangulation, ThreeD };

// All dissections of the n-gon of the given kind (every face a triangle,
// resp. every face size a multiple of 3).  Each object appears exactly once.
std::vector<Dissection> enumerate_dissections(DissectionKind kind, std::size_t n);

// The number of faces with an even number of vertices.  Requires a
// 3d-dissection; an even 3d-dissection is one where this number is even.
std::size_t ovsienko_index(const Dissection& d);

// All distinct quiddity sequences of triangulations of the n-gon.
std::vector<QuidditySeq> quiddity_set(std::size_t n);

// Glues d2 onto d1 through a new triangle at vertex i of d1 (identifying it
// with vertex 1 of d2), realizing the circ product: the result has
// n1+n2-1 vertices and quiddity circ(quiddity_of(d1), i, quiddity_of(d2)).
Dissection glue_circ(const Dissection& d1, std::size_t i, const Dissection& d2);

// The overlapping variant realizing the bullet product.
Dissection glue_bullet(const Dissection& d1, std::size_t i, const Dissection& d2);

}  // namespace frz

#endif  // FRZ_POLYGON_HPP
