// SPDX-License-Identifier: MIT
//
// Dense square matrices over Q(i) with exact determinant (fraction-free
// Bareiss-style elimination), inverse, and 2x2 block structure including
// Schur complements.

#ifndef FRZ_MATRIX_HPP
#define FRZ_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "frz/gauss_rational.hpp"

namespace frz {

// Raised when operands of different orders are combined.
struct OrderMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class SquareMatrix {
 public:
  SquareMatrix() : l_(0) {}
  explicit SquareMatrix(std::size_t l) : l_(l), e_(l * l) {}

  static SquareMatrix identity(std::size_t l) {
    SquareMatrix m(l);
    for (std::size_t i = 0; i < l; ++i) m.at(i, i) = GaussRational(1);
    return m;
  }
  static SquareMatrix zero(std::size_t l) { return SquareMatrix(l); }
  static SquareMatrix scalar(std::size_t l, const GaussRational& c) {
    SquareMatrix m(l);
    for (std::size_t i = 0; i < l; ++i) m.at(i, i) = c;
    return m;
  }

  std::size_t order() const { return l_; }
  GaussRational& at(std::size_t r, std::size_t c) { return e_[r * l_ + c]; }
  const GaussRational& at(std::size_t r, std::size_t c) const { return e_[r * l_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  SquareMatrix operator-() const;
  SquareMatrix transpose() const;
  SquareMatrix conj() const;  // entrywise complex conjugate

  SquareMatrix& operator+=(const SquareMatrix& o);
  SquareMatrix& operator-=(const SquareMatrix& o);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const GaussRational& c, const SquareMatrix& a);

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.l_ == b.l_ && a.e_ == b.e_;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }
  friend bool operator<(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.l_ != b.l_) return a.l_ < b.l_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    }
    return false;
  }

  GaussRational det() const;
  SquareMatrix inverse() const;  // throws SingularError
  bool is_invertible() const { return !det().is_zero(); }

  // Applies the matrix to a column vector.
  std::vector<GaussRational> apply(const std::vector<GaussRational>& x) const;

 private:
  std::size_t l_;
  std::vector<GaussRational> e_;
};

// Renders as [[a,b],[c,d]] using the scalar grammar for entries.
std::string to_string(const SquareMatrix& m);

inline SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b) {
  return a * b - b * a;
}

// A 2x2 block matrix with four blocks of common order l.
struct Block2x2 {
  SquareMatrix m11, m12, m21, m22;

  Block2x2() = default;
  Block2x2(SquareMatrix a, SquareMatrix b, SquareMatrix c, SquareMatrix d);

  std::size_t block_order() const { return m11.order(); }

  static Block2x2 identity(std::size_t l) {
    return Block2x2(SquareMatrix::identity(l), SquareMatrix::zero(l), SquareMatrix::zero(l),
                    SquareMatrix::identity(l));
  }
  static Block2x2 minus_identity(std::size_t l) {
    SquareMatrix mi = -SquareMatrix::identity(l);
    return Block2x2(mi, SquareMatrix::zero(l), SquareMatrix::zero(l), mi);
  }

  bool is_identity() const;
  bool is_minus_identity() const;

  SquareMatrix flatten() const;
  static Block2x2 partition(const SquareMatrix& m);  // order must be even

  friend Block2x2 operator*(const Block2x2& a, const Block2x2& b);
  friend bool operator==(const Block2x2& a, const Block2x2& b) {
    return a.m11 == b.m11 && a.m12 == b.m12 && a.m21 == b.m21 && a.m22 == b.m22;
  }
  friend bool operator!=(const Block2x2& a, const Block2x2& b) { return !(a == b); }
};

// Schur complement N/P = m22 - m21 m11^{-1} m12; requires det(m11) != 0.
SquareMatrix schur_complement(const Block2x2& n);

}  // namespace frz

#endif  // FRZ_MATRIX_HPP
