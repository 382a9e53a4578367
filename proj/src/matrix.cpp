// SPDX-License-Identifier: MIT

#include "frz/matrix.hpp"

namespace frz {
namespace {

void require_same_order(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw OrderMismatchError("matrix order mismatch");
}

}  // namespace

bool SquareMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool SquareMatrix::is_identity() const {
  for (std::size_t r = 0; r < l_; ++r)
    for (std::size_t c = 0; c < l_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

bool SquareMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < l_; ++r)
    for (std::size_t c = r + 1; c < l_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

SquareMatrix SquareMatrix::operator-() const {
  SquareMatrix m(l_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix m(l_);
  for (std::size_t r = 0; r < l_; ++r)
    for (std::size_t c = 0; c < l_; ++c) m.at(c, r) = at(r, c);
  return m;
}

SquareMatrix SquareMatrix::conj() const {
  SquareMatrix m(l_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].conj();
  return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a, b);
  std::size_t l = a.order();
  SquareMatrix m(l);
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t k = 0; k < l; ++k) {
      const GaussRational& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < l; ++c) m.at(r, c) += ark * b.at(k, c);
    }
  return m;
}

SquareMatrix operator*(const GaussRational& c, const SquareMatrix& a) {
  SquareMatrix m(a.order());
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t k = 0; k < a.order(); ++k) m.at(r, k) = c * a.at(r, k);
  return m;
}

// Fraction-free Bareiss-style elimination.  Division by the previous pivot
// is exact at every step, which keeps intermediate entries small compared
// with naive Gaussian elimination on rationals.
GaussRational SquareMatrix::det() const {
  if (l_ == 0) return GaussRational(1);
  std::vector<GaussRational> a = e_;
  auto idx = [this](std::size_t r, std::size_t c) { return r * l_ + c; };
  GaussRational prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < l_; ++k) {
    if (a[idx(k, k)].is_zero()) {
      std::size_t p = k + 1;
      while (p < l_ && a[idx(p, k)].is_zero()) ++p;
      if (p == l_) return GaussRational(0);
      for (std::size_t c = 0; c < l_; ++c) std::swap(a[idx(k, c)], a[idx(p, c)]);
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < l_; ++r)
      for (std::size_t c = k + 1; c < l_; ++c)
        a[idx(r, c)] = (a[idx(r, c)] * a[idx(k, k)] - a[idx(r, k)] * a[idx(k, c)]) / prev;
    prev = a[idx(k, k)];
  }
  GaussRational d = a[idx(l_ - 1, l_ - 1)];
  return negate ? -d : d;
}

SquareMatrix SquareMatrix::inverse() const {
  // Gauss-Jordan on [A | I]; exact over the field.
  std::size_t l = l_;
  std::vector<GaussRational> a = e_;
  SquareMatrix inv = SquareMatrix::identity(l);
  auto idx = [l](std::size_t r, std::size_t c) { return r * l + c; };
  for (std::size_t k = 0; k < l; ++k) {
    std::size_t p = k;
    while (p < l && a[idx(p, k)].is_zero()) ++p;
    if (p == l) throw SingularError("matrix is singular");
    if (p != k) {
      for (std::size_t c = 0; c < l; ++c) {
        std::swap(a[idx(k, c)], a[idx(p, c)]);
        std::swap(inv.at(k, c), inv.at(p, c));
      }
    }
    GaussRational piv_inv = a[idx(k, k)].inverse();
    for (std::size_t c = 0; c < l; ++c) {
      a[idx(k, c)] *= piv_inv;
      inv.at(k, c) *= piv_inv;
    }
    for (std::size_t r = 0; r < l; ++r) {
      if (r == k || a[idx(r, k)].is_zero()) continue;
      GaussRational f = a[idx(r, k)];
      for (std::size_t c = 0; c < l; ++c) {
        a[idx(r, c)] -= f * a[idx(k, c)];
        inv.at(r, c) -= f * inv.at(k, c);
      }
    }
  }
  return inv;
}

std::vector<GaussRational> SquareMatrix::apply(const std::vector<GaussRational>& x) const {
  if (x.size() != l_) throw OrderMismatchError("vector length mismatch");
  std::vector<GaussRational> y(l_);
  for (std::size_t r = 0; r < l_; ++r)
    for (std::size_t c = 0; c < l_; ++c) y[r] += at(r, c) * x[c];
  return y;
}

Block2x2::Block2x2(SquareMatrix a, SquareMatrix b, SquareMatrix c, SquareMatrix d)
    : m11(std::move(a)), m12(std::move(b)), m21(std::move(c)), m22(std::move(d)) {
  if (m12.order() != m11.order() || m21.order() != m11.order() || m22.order() != m11.order())
    throw OrderMismatchError("block order mismatch");
}

bool Block2x2::is_identity() const {
  return m11.is_identity() && m22.is_identity() && m12.is_zero() && m21.is_zero();
}

bool Block2x2::is_minus_identity() const {
  return (-m11).is_identity() && (-m22).is_identity() && m12.is_zero() && m21.is_zero();
}

SquareMatrix Block2x2::flatten() const {
  std::size_t l = block_order();
  SquareMatrix m(2 * l);
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t c = 0; c < l; ++c) {
      m.at(r, c) = m11.at(r, c);
      m.at(r, c + l) = m12.at(r, c);
      m.at(r + l, c) = m21.at(r, c);
      m.at(r + l, c + l) = m22.at(r, c);
    }
  return m;
}

Block2x2 Block2x2::partition(const SquareMatrix& m) {
  if (m.order() % 2 != 0) throw OrderMismatchError("cannot partition odd-order matrix");
  std::size_t l = m.order() / 2;
  Block2x2 b{SquareMatrix(l), SquareMatrix(l), SquareMatrix(l), SquareMatrix(l)};
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t c = 0; c < l; ++c) {
      b.m11.at(r, c) = m.at(r, c);
      b.m12.at(r, c) = m.at(r, c + l);
      b.m21.at(r, c) = m.at(r + l, c);
      b.m22.at(r, c) = m.at(r + l, c + l);
    }
  return b;
}

Block2x2 operator*(const Block2x2& a, const Block2x2& b) {
  return Block2x2(a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                  a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22);
}

SquareMatrix schur_complement(const Block2x2& n) {
  return n.m22 - n.m21 * n.m11.inverse() * n.m12;
}

std::string to_string(const SquareMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.order(); ++r) {
    out += r == 0 ? "[" : ",[";
    for (std::size_t c = 0; c < m.order(); ++c) {
      if (c != 0) out += ",";
      out += m.at(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace frz
