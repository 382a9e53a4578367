// SPDX-License-Identifier: MIT
//
// Matrix quiddity sequences (left/right), quiddity bi-sequences, their
// composition products, structural families with commuting parameters, the
// Gauss map, periodic matrix recurrences, and the affine moving frame.

#ifndef FRZ_MATRIX_QUIDDITY_HPP
#define FRZ_MATRIX_QUIDDITY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "frz/quiddity.hpp"

namespace frz {

// Raised when an operation requires commuting matrix arguments.
struct NonCommutingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a configuration leaves the domain of the moving frame.
struct OutsideDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Side { Left, Right };

using MatrixList = std::vector<SquareMatrix>;

// A sequence of square matrices of common order together with the side of
// the monodromy factorization it is meant to verify.
struct MatrixSeq {
  MatrixList entries;
  Side side = Side::Left;

  std::size_t size() const { return entries.size(); }
  std::size_t order() const { return entries.empty() ? 0 : entries.front().order(); }
};

// A left matrix quiddity bi-sequence (p_1..p_n ; q_1..q_n): coefficients of
// the recurrence y_{k+1} = p_k y_k + q_k y_{k-1}.  Every q_k must be
// invertible.
struct BiSequence {
  MatrixList p, q;

  BiSequence() = default;
  BiSequence(MatrixList p_in, MatrixList q_in);

  std::size_t size() const { return p.size(); }
  std::size_t order() const { return p.empty() ? 0 : p.front().order(); }
};

MonodromyClass classify(const Block2x2& m);

// The block companion factor [[a,-I],[I,O]].
Block2x2 left_factor(const SquareMatrix& a);
// The block factor [[O,-I],[I,b]] of the right factorization.
Block2x2 right_factor(const SquareMatrix& b);
// The bi-sequence factor [[p,q],[I,O]].
Block2x2 bi_factor(const SquareMatrix& p, const SquareMatrix& q);

// Ordered block product: Left side multiplies factors right-to-left
// (M(a_n)...M(a_1)); Right side multiplies left-to-right (N(b_1)...N(b_n)).
Block2x2 block_monodromy(const MatrixSeq& s);
// Right-to-left product M(p_n;q_n)...M(p_1;q_1).
Block2x2 block_monodromy(const BiSequence& b);

bool verifies(const MatrixSeq& s);   // block monodromy equals -Id
bool verifies(const BiSequence& b);  // block monodromy equals -Id

// A Left sequence viewed as the bi-sequence with q == -I.
BiSequence to_bisequence(const MatrixSeq& left);

// Entrywise complex conjugation with the side flipped; requires the input
// to verify -Id (the conjugate then verifies -Id on the opposite side).
MatrixSeq conj_swap(const MatrixSeq& s);

// Cyclic left rotation; verification is preserved.
MatrixSeq rotate(const MatrixSeq& s, std::size_t k);

// Inserts an ear between positions i and i+1 of a verified Left sequence:
// (a_1,...,a_{i-1}, a_i+I, I, a_{i+1}+I, a_{i+2},...,a_n), 1 <= i <= n-1.
MatrixSeq insert_ear(const MatrixSeq& s, std::size_t i);

// The bi-sequence insertion: p gains (p_k+I, I, p_{k+1}-q_{k+1}) and q
// gains (q_k, -I, q_{k+1}) in place of positions k, k+1; 1 <= k <= n-1.
BiSequence bi_insert(const BiSequence& b, std::size_t k);

// Partial composition and overlapping products on verified bi-sequences;
// results have length n+m-1 and verify -Id.
BiSequence bi_circ(const BiSequence& b1, std::size_t k, const BiSequence& b2);
BiSequence bi_bullet(const BiSequence& b1, std::size_t k, const BiSequence& b2);

// The length-5 Left family with commuting invertible parameters:
// (c, c^{-1}(I+(c+I)d^{-1}), d, (c+I)d^{-1}, (c^{-1}+I)(c+I)^{-1}(d+I)).
MatrixSeq family_length5(const SquareMatrix& c, const SquareMatrix& d);

// The Gauss sequence (c, (I+e)c^{-1}, (I+c)e^{-1}, e, c^{-1}(I+c+e)e^{-1})
// for commuting invertible c, e.
MatrixSeq gauss_seq(const SquareMatrix& c, const SquareMatrix& e);

// The Gauss map G(A,B) = (B, A^{-1}(B+I)); G^5 = id on commuting pairs.
std::pair<SquareMatrix, SquareMatrix> gauss_map(const SquareMatrix& a, const SquareMatrix& b);

// Trajectory y_0, y_1, ..., y_steps of the periodic recurrence with the
// given coefficients (Left: y_{k+1} = a_k y_k - y_{k-1}, coefficients
// cyclic; bi-sequence: y_{k+1} = p_k y_k + q_k y_{k-1}).
std::vector<SquareMatrix> simulate_recurrence(const MatrixSeq& coeffs, const SquareMatrix& y0,
                                              const SquareMatrix& y1, std::size_t steps);
std::vector<SquareMatrix> simulate_recurrence(const BiSequence& coeffs, const SquareMatrix& y0,
                                              const SquareMatrix& y1, std::size_t steps);

// True when traj[k+n] == -traj[k] for every index in range.
bool is_antiperiodic(const std::vector<SquareMatrix>& traj, std::size_t n);
// True when traj[k+n] == m * traj[k] for every index in range.
bool is_quasiperiodic(const std::vector<SquareMatrix>& traj, std::size_t n,
                      const SquareMatrix& m);

// --- affine moving frame --------------------------------------------------

// An element (z, w) of GL_l x| M_l with (z1,w1)(z2,w2) = (z1 z2, z1 w2 + w1)
// acting on matrices by r -> z r + w.
struct AffinePair {
  SquareMatrix z, w;

  AffinePair inverse() const;
  SquareMatrix act(const SquareMatrix& r) const;
  friend AffinePair operator*(const AffinePair& a, const AffinePair& b);
  friend bool operator==(const AffinePair& a, const AffinePair& b) {
    return a.z == b.z && a.w == b.w;
  }
  friend bool operator!=(const AffinePair& a, const AffinePair& b) { return !(a == b); }
};

// The right moving frame rho(X) = ((r2-r1)^{-1}, -(r2-r1)^{-1} r1); throws
// OutsideDomainError when r2-r1 is singular.
AffinePair mv_frame(const MatrixList& x);

// The normalized invariants I_k = (r2-r1)^{-1}(r_k - r1); I_1 = O, I_2 = I.
MatrixList normalized_invariants(const MatrixList& x);

// The k-th Maurer-Cartan element rho_{k+1} rho_k^{-1} of a cyclic gon,
// where rho_k is the frame of the configuration starting at vertex k
// (1-based, cyclic).
AffinePair maurer_cartan(const MatrixList& gon, std::size_t k);

}  // namespace frz

#endif  // FRZ_MATRIX_QUIDDITY_HPP
