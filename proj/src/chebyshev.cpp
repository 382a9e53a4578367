// SPDX-License-Identifier: MIT

#include "frz/chebyshev.hpp"

namespace frz {
namespace {

void require_nonempty_common_order(const MatrixList& a, const char* what) {
  if (a.empty()) throw ProductError(std::string(what) + ": empty coefficient list");
  for (const auto& m : a)
    if (m.order() != a.front().order())
      throw OrderMismatchError(std::string(what) + ": mixed matrix orders");
}

}  // namespace

ChebResult cheb_left(const MatrixList& a) {
  require_nonempty_common_order(a, "cheb_left");
  std::size_t l = a.front().order();
  ChebResult r;
  r.coeffs = a;
  r.p.reserve(a.size() + 2);
  r.p.push_back(SquareMatrix::zero(l));      // p_{-1}
  r.p.push_back(SquareMatrix::identity(l));  // p_0
  for (std::size_t m = 0; m < a.size(); ++m)
    r.p.push_back(a[m] * r.p[m + 1] - r.p[m]);
  return r;
}

Block2x2 continuant_block(const MatrixList& a) {
  require_nonempty_common_order(a, "continuant_block");
  Block2x2 m = Block2x2::identity(a.front().order());
  for (const auto& ak : a) m = left_factor(ak) * m;

  // Independent evaluation through the polynomial recursions.
  std::size_t n = a.size();
  ChebResult full = cheb_left(a);
  MatrixList tail(a.begin() + 1, a.end());
  SquareMatrix top_right =
      n >= 2 ? -cheb_left(tail).at(static_cast<long>(n) - 1)
             : -SquareMatrix::identity(a.front().order());  // -p_0 of the empty tail
  SquareMatrix bottom_right =
      n >= 3 ? -cheb_left(MatrixList(a.begin() + 1, a.end() - 1)).at(static_cast<long>(n) - 2)
             : (n == 2 ? -SquareMatrix::identity(a.front().order())
                       : SquareMatrix::zero(a.front().order()));
  Block2x2 expect(full.at(static_cast<long>(n)), top_right,
                  full.at(static_cast<long>(n) - 1), bottom_right);
  if (m != expect) throw IdentityError("block continuant mismatch");
  return m;
}

SquareMatrix tridiagonal_flat(const MatrixList& a) {
  require_nonempty_common_order(a, "tridiagonal_flat");
  std::size_t l = a.front().order(), n = a.size();
  SquareMatrix q(l * n);
  for (std::size_t b = 0; b < n; ++b) {
    const SquareMatrix& diag = a[n - 1 - b];  // diagonal runs a_m, ..., a_1
    for (std::size_t r = 0; r < l; ++r) {
      for (std::size_t c = 0; c < l; ++c) q.at(b * l + r, b * l + c) = diag.at(r, c);
      if (b + 1 < n) {
        q.at(b * l + r, (b + 1) * l + r) = GaussRational(1);
        q.at((b + 1) * l + r, b * l + r) = GaussRational(1);
      }
    }
  }
  return q;
}

std::pair<GaussRational, GaussRational> det_identity(const MatrixList& a) {
  GaussRational dq = tridiagonal_flat(a).det();
  GaussRational dp = cheb_left(a).at(static_cast<long>(a.size())).det();
  if (dq != dp) throw IdentityError("tridiagonal determinant mismatch");
  return {dq, dp};
}

SquareMatrix corner_inverse(const MatrixList& a) {
  std::size_t l = a.front().order(), n = a.size();
  SquareMatrix qinv = tridiagonal_flat(a).inverse();
  SquareMatrix corner(l);
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t c = 0; c < l; ++c) corner.at(r, c) = qinv.at((n - 1) * l + r, c);
  SquareMatrix pm = corner.inverse();
  if (n % 2 == 0) pm = -pm;
  if (pm != cheb_left(a).at(static_cast<long>(n))) throw IdentityError("corner inverse mismatch");
  return pm;
}

std::vector<SquareMatrix> solve_second_order(const MatrixList& a, const SquareMatrix& y0,
                                             const SquareMatrix& y1, std::size_t horizon) {
  require_nonempty_common_order(a, "solve_second_order");
  std::size_t n = a.size();
  std::vector<SquareMatrix> traj{y0, y1};
  traj.reserve(horizon + 1);
  MatrixList extended;
  for (std::size_t k = 1; k < horizon; ++k) {
    extended.push_back(a[(k - 1) % n]);
    traj.push_back(extended.back() * traj[k] - traj[k - 1]);
    // y_{k+1} = p_k(a_1..a_k) y_1 - p_{k-1}(a_2..a_k) y_0.
    SquareMatrix pk = cheb_left(extended).at(static_cast<long>(k));
    SquareMatrix pk1 = extended.size() >= 2
                           ? cheb_left(MatrixList(extended.begin() + 1, extended.end()))
                                 .at(static_cast<long>(k) - 1)
                           : SquareMatrix::identity(a.front().order());
    if (traj.back() != pk * y1 - pk1 * y0)
      throw IdentityError("trajectory does not match the polynomial formula");
  }
  return traj;
}

ChebPair cheb_pair(const MatrixList& l, const MatrixList& s) {
  require_nonempty_common_order(l, "cheb_pair l");
  require_nonempty_common_order(s, "cheb_pair s");
  if (l.size() != s.size()) throw ProductError("cheb_pair streams must have equal length");
  if (l.front().order() != s.front().order())
    throw OrderMismatchError("cheb_pair streams must share the matrix order");
  std::size_t d = l.front().order(), n = l.size();

  ChebPair r;
  r.l = l;
  r.s = s;
  r.p.push_back(SquareMatrix::zero(d));      // p_{-1}
  r.p.push_back(SquareMatrix::identity(d));  // p_0
  r.q.push_back(SquareMatrix::identity(d));  // q_{-1}
  r.q.push_back(SquareMatrix::zero(d));      // q_0
  for (std::size_t k = 0; k < n; ++k) {
    r.p.push_back(l[k] * r.p[k + 1] + s[k] * r.p[k]);
    r.q.push_back(l[k] * r.q[k + 1] + s[k] * r.q[k]);
  }

  Block2x2 m = Block2x2::identity(d);
  for (std::size_t k = 0; k < n; ++k) m = bi_factor(l[k], s[k]) * m;
  Block2x2 expect(r.p_at(static_cast<long>(n)), r.q_at(static_cast<long>(n)),
                  r.p_at(static_cast<long>(n) - 1), r.q_at(static_cast<long>(n) - 1));
  if (m != expect) throw IdentityError("pair block identity mismatch");
  return r;
}

}  // namespace frz
