// SPDX-License-Identifier: MIT
//
// Scalar quiddity sequences over Q(i): monodromy evaluation and
// classification, the partial composition products (circle, bullet,
// box-plus, and the identity-monodromy product), sentinel units, and
// checkers for the partial-composition axioms.

#ifndef FRZ_QUIDDITY_HPP
#define FRZ_QUIDDITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "frz/matrix.hpp"

namespace frz {

using QuidditySeq = std::vector<GaussRational>;

// Raised when a product's preconditions on its operands fail (bad index,
// sentinel misuse, wrong monodromy class, ...).
struct ProductError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class MonodromyClass { MinusId, PlusId, Other };

std::string to_string(MonodromyClass c);

// The point sequence "(0)" and the segment sequence "(00)": the two
// sentinel polygons admitted into the partial compositions.
inline bool is_unit_point(const QuidditySeq& q) { return q.size() == 1 && q[0].is_zero(); }
inline bool is_unit_segment(const QuidditySeq& q) {
  return q.size() == 2 && q[0].is_zero() && q[1].is_zero();
}

// M(a) = [[a,-1],[1,0]] as a 2x2 scalar matrix.
SquareMatrix companion(const GaussRational& a);

// Right-to-left product M(a_n)...M(a_1).
SquareMatrix monodromy(const QuidditySeq& q);
MonodromyClass classify(const SquareMatrix& m);
inline MonodromyClass monodromy_class(const QuidditySeq& q) { return classify(monodromy(q)); }

inline bool is_quiddity(const QuidditySeq& q) {
  return monodromy_class(q) == MonodromyClass::MinusId;
}
inline bool is_id_quiddity(const QuidditySeq& q) {
  return monodromy_class(q) == MonodromyClass::PlusId;
}

// Partial composition T o_i S (1-based index, wraparound at i = n), with
// the sentinel rules for the point and segment operands.
QuidditySeq circ(const QuidditySeq& t, std::size_t i, const QuidditySeq& s);

// The bullet product; defined only for lengths >= 3.
QuidditySeq bullet(const QuidditySeq& t, std::size_t i, const QuidditySeq& s);

// The side-glueing product on generalized quiddity sequences; result has
// length n+m-2.  Requires both operands to have monodromy -Id.
QuidditySeq boxplus(const QuidditySeq& a, std::size_t i, const QuidditySeq& b);

// The product on Id-quiddity sequences (monodromy +Id operands/result).
QuidditySeq id_circ(const QuidditySeq& a, std::size_t k, const QuidditySeq& b);

// Cyclic left rotation by k: (a_{k+1},...,a_n,a_1,...,a_k).
QuidditySeq rotate(const QuidditySeq& q, std::size_t k);

// --- axiom checking ------------------------------------------------------

struct AxiomReport {
  std::size_t sequential_checked = 0;   // (x o_i y) o_{i+j-1} z = x o_i (y o_j z)
  std::size_t parallel_checked = 0;     // (x o_i y) o_{j+m-1} z = (x o_j z) o_i y
  std::size_t unit_checked = 0;         // unit laws
  std::size_t exclusion_checked = 0;    // the j = m case must differ
  std::vector<std::string> violations;  // human-readable descriptions
  bool ok() const { return violations.empty(); }
};

// Verifies the partial-composition axioms exhaustively over the given
// universe, plus the strict j = m exclusion for operands of length >= 3.
AxiomReport check_operad_axioms(const std::vector<QuidditySeq>& universe);

std::string to_string(const QuidditySeq& q);

}  // namespace frz

#endif  // FRZ_QUIDDITY_HPP
