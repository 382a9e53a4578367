// SPDX-License-Identifier: MIT

#include "frz/matrix_quiddity.hpp"

namespace frz {
namespace {

void require_common_order(const MatrixList& xs, const char* what) {
  if (xs.empty()) throw ProductError(std::string(what) + ": empty sequence");
  for (const auto& m : xs)
    if (m.order() != xs.front().order())
      throw OrderMismatchError(std::string(what) + ": mixed matrix orders");
}

void require_commuting(const SquareMatrix& a, const SquareMatrix& b) {
  if (!commutator(a, b).is_zero()) throw NonCommutingError("arguments must commute");
}

SquareMatrix id_of(const SquareMatrix& like) { return SquareMatrix::identity(like.order()); }

}  // namespace

BiSequence::BiSequence(MatrixList p_in, MatrixList q_in) : p(std::move(p_in)), q(std::move(q_in)) {
  if (p.size() != q.size()) throw ProductError("bi-sequence streams must have equal length");
  require_common_order(p, "bi-sequence p");
  require_common_order(q, "bi-sequence q");
  if (p.front().order() != q.front().order())
    throw OrderMismatchError("bi-sequence streams must share the matrix order");
  for (const auto& m : q)
    if (!m.is_invertible()) throw SingularError("bi-sequence q entries must be invertible");
}

MonodromyClass classify(const Block2x2& m) {
  if (m.is_identity()) return MonodromyClass::PlusId;
  if (m.is_minus_identity()) return MonodromyClass::MinusId;
  return MonodromyClass::Other;
}

Block2x2 left_factor(const SquareMatrix& a) {
  std::size_t l = a.order();
  return Block2x2(a, -SquareMatrix::identity(l), SquareMatrix::identity(l), SquareMatrix::zero(l));
}

Block2x2 right_factor(const SquareMatrix& b) {
  std::size_t l = b.order();
  return Block2x2(SquareMatrix::zero(l), -SquareMatrix::identity(l), SquareMatrix::identity(l), b);
}

Block2x2 bi_factor(const SquareMatrix& p, const SquareMatrix& q) {
  std::size_t l = p.order();
  return Block2x2(p, q, SquareMatrix::identity(l), SquareMatrix::zero(l));
}

Block2x2 block_monodromy(const MatrixSeq& s) {
  require_common_order(s.entries, "matrix sequence");
  Block2x2 m = Block2x2::identity(s.order());
  if (s.side == Side::Left) {
    for (const auto& a : s.entries) m = left_factor(a) * m;
  } else {
    for (const auto& b : s.entries) m = m * right_factor(b);
  }
  return m;
}

Block2x2 block_monodromy(const BiSequence& b) {
  Block2x2 m = Block2x2::identity(b.order());
  for (std::size_t k = 0; k < b.size(); ++k) m = bi_factor(b.p[k], b.q[k]) * m;
  return m;
}

bool verifies(const MatrixSeq& s) { return block_monodromy(s).is_minus_identity(); }
bool verifies(const BiSequence& b) { return block_monodromy(b).is_minus_identity(); }

BiSequence to_bisequence(const MatrixSeq& left) {
  if (left.side != Side::Left) throw ProductError("only Left sequences embed as bi-sequences");
  MatrixList q(left.size(), -SquareMatrix::identity(left.order()));
  return BiSequence(left.entries, std::move(q));
}

MatrixSeq conj_swap(const MatrixSeq& s) {
  if (!verifies(s)) throw ProductError("conj_swap requires a verified sequence");
  MatrixSeq r;
  r.side = s.side == Side::Left ? Side::Right : Side::Left;
  r.entries.reserve(s.size());
  for (const auto& a : s.entries) r.entries.push_back(a.conj());
  return r;
}

MatrixSeq rotate(const MatrixSeq& s, std::size_t k) {
  if (s.entries.empty()) return s;
  k %= s.size();
  MatrixSeq r;
  r.side = s.side;
  r.entries.assign(s.entries.begin() + k, s.entries.end());
  r.entries.insert(r.entries.end(), s.entries.begin(), s.entries.begin() + k);
  return r;
}

MatrixSeq insert_ear(const MatrixSeq& s, std::size_t i) {
  if (s.side != Side::Left) throw ProductError("insert_ear acts on Left sequences");
  std::size_t n = s.size();
  if (i < 1 || i + 1 > n) throw ProductError("insert_ear index out of range");
  if (!verifies(s)) throw ProductError("insert_ear requires a verified sequence");
  SquareMatrix eye = id_of(s.entries.front());
  MatrixSeq r;
  r.side = Side::Left;
  r.entries.assign(s.entries.begin(), s.entries.begin() + (i - 1));
  r.entries.push_back(s.entries[i - 1] + eye);
  r.entries.push_back(eye);
  r.entries.push_back(s.entries[i] + eye);
  r.entries.insert(r.entries.end(), s.entries.begin() + (i + 1), s.entries.end());
  return r;
}

BiSequence bi_insert(const BiSequence& b, std::size_t k) {
  std::size_t n = b.size();
  if (k < 1 || k + 1 > n) throw ProductError("bi_insert index out of range");
  if (!verifies(b)) throw ProductError("bi_insert requires a verified bi-sequence");
  SquareMatrix eye = id_of(b.p.front());
  MatrixList p(b.p.begin(), b.p.begin() + (k - 1));
  p.push_back(b.p[k - 1] + eye);
  p.push_back(eye);
  p.push_back(b.p[k] - b.q[k]);
  p.insert(p.end(), b.p.begin() + (k + 1), b.p.end());
  MatrixList q(b.q.begin(), b.q.begin() + (k - 1));
  q.push_back(b.q[k - 1]);
  q.push_back(-eye);
  q.insert(q.end(), b.q.begin() + k, b.q.end());
  return BiSequence(std::move(p), std::move(q));
}

BiSequence bi_circ(const BiSequence& b1, std::size_t k, const BiSequence& b2) {
  std::size_t n = b1.size(), m = b2.size();
  if (k < 1 || k > n) throw ProductError("bi_circ index out of range");
  if (n < 2 || m < 2) throw ProductError("bi_circ requires lengths >= 2");
  if (!verifies(b1) || !verifies(b2))
    throw ProductError("bi_circ operands must verify -Id");
  SquareMatrix eye = id_of(b1.p.front());
  const MatrixList& l = b2.p;
  const MatrixList& s = b2.q;

  MatrixList p, q;
  if (k < n) {
    p.assign(b1.p.begin(), b1.p.begin() + (k - 1));
    p.push_back(l[0] - s[0] * (b1.p[k - 1] + eye));
    p.insert(p.end(), l.begin() + 1, l.end() - 1);
    p.push_back(l[m - 1] + eye);
    p.push_back(b1.p[k] - b1.q[k]);
    p.insert(p.end(), b1.p.begin() + (k + 1), b1.p.end());

    q.assign(b1.q.begin(), b1.q.begin() + (k - 1));
    q.push_back(-(s[0] * b1.q[k - 1]));
    q.insert(q.end(), s.begin() + 1, s.end());
    q.insert(q.end(), b1.q.begin() + k, b1.q.end());
  } else {
    p.push_back(b1.p[0] - b1.q[0]);
    p.insert(p.end(), b1.p.begin() + 1, b1.p.end() - 1);
    p.push_back(l[0] - s[0] * (b1.p[n - 1] + eye));
    p.insert(p.end(), l.begin() + 1, l.end() - 1);
    p.push_back(l[m - 1] + eye);

    q.assign(b1.q.begin(), b1.q.end() - 1);
    q.push_back(-(s[0] * b1.q[n - 1]));
    q.insert(q.end(), s.begin() + 1, s.end());
  }
  return BiSequence(std::move(p), std::move(q));
}

BiSequence bi_bullet(const BiSequence& b1, std::size_t k, const BiSequence& b2) {
  std::size_t n = b1.size(), m = b2.size();
  if (k < 1 || k > n) throw ProductError("bi_bullet index out of range");
  if (n < 2 || m < 2) throw ProductError("bi_bullet requires lengths >= 2");
  if (!verifies(b1) || !verifies(b2))
    throw ProductError("bi_bullet operands must verify -Id");
  SquareMatrix eye = id_of(b1.p.front());
  const MatrixList& l = b2.p;
  const MatrixList& s = b2.q;

  MatrixList p, q;
  if (k >= 2) {
    p.assign(b1.p.begin(), b1.p.begin() + (k - 1));
    p.back() = b1.p[k - 2] + eye;
    p.push_back(l[1] - s[1]);
    p.insert(p.end(), l.begin() + 2, l.end());
    p.push_back((b1.p[k - 1] - b1.q[k - 1]) - b1.q[k - 1] * l[0]);
    p.insert(p.end(), b1.p.begin() + k, b1.p.end());

    q.assign(b1.q.begin(), b1.q.begin() + (k - 1));
    q.insert(q.end(), s.begin() + 1, s.end());
    q.push_back(-(b1.q[k - 1] * s[0]));
    q.insert(q.end(), b1.q.begin() + k, b1.q.end());
  } else {
    p.push_back((b1.p[0] - b1.q[0]) - b1.q[0] * l[0]);
    p.insert(p.end(), b1.p.begin() + 1, b1.p.end() - 1);
    p.push_back(b1.p[n - 1] + eye);
    p.push_back(l[1] - s[1]);
    p.insert(p.end(), l.begin() + 2, l.end());

    q.push_back(-(b1.q[0] * s[0]));
    q.insert(q.end(), b1.q.begin() + 1, b1.q.end());
    q.insert(q.end(), s.begin() + 1, s.end());
  }
  return BiSequence(std::move(p), std::move(q));
}

MatrixSeq family_length5(const SquareMatrix& c, const SquareMatrix& d) {
  require_commuting(c, d);
  SquareMatrix eye = id_of(c);
  SquareMatrix ci = c.inverse(), di = d.inverse();
  MatrixSeq r;
  r.side = Side::Left;
  r.entries = {c,
               ci * (eye + (c + eye) * di),
               d,
               (c + eye) * di,
               (ci + eye) * (c + eye).inverse() * (d + eye)};
  return r;
}

MatrixSeq gauss_seq(const SquareMatrix& c, const SquareMatrix& e) {
  require_commuting(c, e);
  SquareMatrix eye = id_of(c);
  SquareMatrix ci = c.inverse(), ei = e.inverse();
  MatrixSeq r;
  r.side = Side::Left;
  r.entries = {c, (eye + e) * ci, (eye + c) * ei, e, ci * (eye + c + e) * ei};
  return r;
}

std::pair<SquareMatrix, SquareMatrix> gauss_map(const SquareMatrix& a, const SquareMatrix& b) {
  require_commuting(a, b);
  return {b, a.inverse() * (b + id_of(a))};
}

std::vector<SquareMatrix> simulate_recurrence(const MatrixSeq& coeffs, const SquareMatrix& y0,
                                              const SquareMatrix& y1, std::size_t steps) {
  if (coeffs.side != Side::Left)
    throw ProductError("recurrence coefficients must be a Left sequence");
  return simulate_recurrence(to_bisequence(coeffs), y0, y1, steps);
}

std::vector<SquareMatrix> simulate_recurrence(const BiSequence& coeffs, const SquareMatrix& y0,
                                              const SquareMatrix& y1, std::size_t steps) {
  std::size_t n = coeffs.size();
  std::vector<SquareMatrix> traj{y0, y1};
  traj.reserve(steps + 1);
  for (std::size_t k = 1; k < steps; ++k) {
    const SquareMatrix& pk = coeffs.p[(k - 1) % n];
    const SquareMatrix& qk = coeffs.q[(k - 1) % n];
    traj.push_back(pk * traj[k] + qk * traj[k - 1]);
  }
  return traj;
}

bool is_antiperiodic(const std::vector<SquareMatrix>& traj, std::size_t n) {
  if (traj.size() <= n) return false;
  for (std::size_t k = 0; k + n < traj.size(); ++k)
    if (traj[k + n] != -traj[k]) return false;
  return true;
}

bool is_quasiperiodic(const std::vector<SquareMatrix>& traj, std::size_t n,
                      const SquareMatrix& m) {
  if (traj.size() <= n) return false;
  for (std::size_t k = 0; k + n < traj.size(); ++k)
    if (traj[k + n] != m * traj[k]) return false;
  return true;
}

AffinePair AffinePair::inverse() const {
  SquareMatrix zi = z.inverse();
  return {zi, -(zi * w)};
}

SquareMatrix AffinePair::act(const SquareMatrix& r) const { return z * r + w; }

AffinePair operator*(const AffinePair& a, const AffinePair& b) {
  return {a.z * b.z, a.z * b.w + a.w};
}

AffinePair mv_frame(const MatrixList& x) {
  if (x.size() < 2) throw OutsideDomainError("need at least two configuration points");
  SquareMatrix diff = x[1] - x[0];
  if (!diff.is_invertible()) throw OutsideDomainError("r2 - r1 is singular");
  SquareMatrix di = diff.inverse();
  return {di, -(di * x[0])};
}

MatrixList normalized_invariants(const MatrixList& x) {
  AffinePair rho = mv_frame(x);
  MatrixList inv;
  inv.reserve(x.size());
  for (const auto& r : x) inv.push_back(rho.act(r));
  return inv;
}

AffinePair maurer_cartan(const MatrixList& gon, std::size_t k) {
  std::size_t n = gon.size();
  if (n < 2) throw OutsideDomainError("need at least two vertices");
  if (k < 1 || k > n) throw ProductError("maurer_cartan index out of range");
  auto frame_at = [&](std::size_t start) {
    MatrixList shifted{gon[start % n], gon[(start + 1) % n]};
    return mv_frame(shifted);
  };
  return frame_at(k) * frame_at(k - 1).inverse();
}

}  // namespace frz
