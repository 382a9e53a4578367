// SPDX-License-Identifier: MIT
//
// Noncommutative signed Chebyshev polynomials (continuants), their
// block-continuant, determinant, and inverse-corner identities, the pair
// variant with two coefficient streams, and periodic second-order solves.

#ifndef FRZ_CHEBYSHEV_HPP
#define FRZ_CHEBYSHEV_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "frz/matrix_quiddity.hpp"

namespace frz {

// Raised when an internally asserted identity fails (indicates a bug).
struct IdentityError : std::logic_error {
  using std::logic_error::logic_error;
};

// The prefix family p_{-1} = O, p_0 = I, p_m = a_m p_{m-1} - p_{m-2}.
struct ChebResult {
  MatrixList coeffs;
  MatrixList p;  // p[k] stores p_{k-1}, so p.size() == coeffs.size() + 2

  // p_k for k in [-1, coeffs.size()].
  const SquareMatrix& at(long k) const { return p[static_cast<std::size_t>(k + 1)]; }
};

// The pair families p (seeds p_0 = I, p_{-1} = O) and q (seeds q_0 = O,
// q_{-1} = I) of the recursion x_n = l_n x_{n-1} + s_n x_{n-2}.
struct ChebPair {
  MatrixList l, s;
  MatrixList p, q;  // same offset convention as ChebResult

  const SquareMatrix& p_at(long k) const { return p[static_cast<std::size_t>(k + 1)]; }
  const SquareMatrix& q_at(long k) const { return q[static_cast<std::size_t>(k + 1)]; }
};

ChebResult cheb_left(const MatrixList& a);

// The block continuant M(a_m)...M(a_1); asserts it equals
// [[p_m(a_1..a_m), -p_{m-1}(a_2..a_m)], [p_{m-1}(a_1..a_{m-1}),
// -p_{m-2}(a_2..a_{m-1})]].
Block2x2 continuant_block(const MatrixList& a);

// The block-tridiagonal matrix with diagonal a_m,...,a_1 and I on both
// off-diagonals, flattened to order l*m.
SquareMatrix tridiagonal_flat(const MatrixList& a);

// (det Q_m, det p_m); asserts equality of the two values.
std::pair<GaussRational, GaussRational> det_identity(const MatrixList& a);

// P_m = (-1)^{m-1} ((Q_m^{-1})_{m,1})^{-1}; asserts P_m = p_m(a_1..a_m).
// Throws SingularError when Q_m or the corner block is not invertible.
SquareMatrix corner_inverse(const MatrixList& a);

// Trajectory of y_{k+1} = a_k y_k - y_{k-1} with n-periodic coefficients;
// asserts y_{k+1} = p_k(a_1..a_k) y_1 - p_{k-1}(a_2..a_k) y_0 at every step.
std::vector<SquareMatrix> solve_second_order(const MatrixList& a, const SquareMatrix& y0,
                                             const SquareMatrix& y1, std::size_t horizon);

// Computes both pair families and asserts the block identity: the product
// of [[l_k, s_k], [I, O]] taken right-to-left equals
// [[p_n, q_n], [p_{n-1}, q_{n-1}]].
ChebPair cheb_pair(const MatrixList& l, const MatrixList& s);

}  // namespace frz

#endif  // FRZ_CHEBYSHEV_HPP
