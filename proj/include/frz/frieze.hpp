// SPDX-License-Identifier: MIT
//
// Friezes: the tame arrays of numbers (or square matrices) generated by a
// quiddity sequence, bordered by rows of zeroes and ones, in which every
// elementary diamond of neighbours satisfies a unimodular rule.  Scalar
// friezes are built from continuant polynomials and cross-checked against
// the diamond recursion; matrix friezes come in left, right, and two-sided
// flavours and can be scalarized along a joint eigenvector.

#ifndef FRZ_FRIEZE_HPP
#define FRZ_FRIEZE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "frz/matrix_quiddity.hpp"

namespace frz {

// Raised when a sequence does not close into a frieze (wrong monodromy or
// border rows that fail to return to ones and zeroes).
struct FriezeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised by scalarize when the supplied vector is not a joint eigenvector
// of every entry of the frieze.
struct NotJointEigenvectorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A frieze of numbers with period n: rows r = 0..n, where row 0 is zeroes,
// row 1 is ones, row 2 is the quiddity sequence, and each row is n-periodic.
struct ScalarFrieze {
  std::size_t period = 0;
  std::vector<std::vector<GaussRational>> rows;  // rows[r][j], j = 0..period-1

  // Entry in row r at position j, cyclic in j.
  const GaussRational& at(std::size_t r, std::size_t j) const {
    return rows[r][j % period];
  }
};

// Builds the frieze of a quiddity sequence with monodromy -Id: row r holds
// the continuant polynomials of r-1 consecutive quiddity entries.  Throws
// FriezeError when the monodromy is not -Id.
ScalarFrieze build_scalar_frieze(const QuidditySeq& q);

// Builds the same array by the diamond recursion alone, seeding the rows of
// ones and of quiddity entries.  Throws SingularError when the recursion
// divides by a zero entry (the continuant route has no such restriction).
ScalarFrieze build_scalar_frieze_diamond(const QuidditySeq& q);

// Verifies left*right == 1 + top*bottom for every elementary diamond.
bool check_scalar_diamond(const ScalarFrieze& f);

// True when every entry strictly between the border rows is a positive
// rational (no imaginary part).
bool has_positive_interior(const ScalarFrieze& f);

enum class FriezeSide { Left, Right, TwoSided };
std::string to_string(FriezeSide s);

// A frieze of matrices of order l with period p.  Rows are indexed by depth
// d = -2..p-2: depth -2 is the zero row, depth -1 the identity row, depth 0
// the quiddity row, and the array closes with identity and zero rows again.
struct MatrixFrieze {
  std::size_t order = 0;
  std::size_t period = 0;
  FriezeSide side = FriezeSide::Left;
  std::vector<std::vector<SquareMatrix>> rows;  // rows[d+2][j], j = 0..period-1

  const SquareMatrix& at(long d, std::size_t j) const {
    return rows[static_cast<std::size_t>(d + 2)][j % period];
  }
};

// Builds the frieze of a matrix quiddity sequence by propagating the
// diamond rule of its side, then classifies the result: a frieze whose
// diamonds satisfy both the left rule
//   m(d,j) m(d,j+1) - I == m(d+1,j) m(d-1,j+1)
// and the right rule
//   m(d,j+1) m(d,j) - m(d-1,j+1) m(d+1,j) == I
// is two-sided.  Throws FriezeError when the border rows do not close.
MatrixFrieze build_matrix_frieze(const MatrixSeq& q);

// Entrywise transpose; swaps the left and right diamond rules.
MatrixFrieze transpose(const MatrixFrieze& f);

// Projects a matrix frieze with pairwise commuting quiddity entries onto a
// joint eigenvector x: each entry is replaced by its eigenvalue on x.
// Throws NonCommutingError or NotJointEigenvectorError.
ScalarFrieze scalarize(const MatrixFrieze& f, const std::vector<GaussRational>& x);

// Deterministic staggered text renderings; the matrix version labels
// distinct entries and appends a legend.
std::string render_ascii(const ScalarFrieze& f);
std::string render_ascii(const MatrixFrieze& f);

}  // namespace frz

#endif  // FRZ_FRIEZE_HPP
