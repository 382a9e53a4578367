// SPDX-License-Identifier: MIT

#include "frz/frieze.hpp"

#include <algorithm>
#include <map>

namespace frz {
namespace {

// Places `text` at half-cell position x of a staggered row.
void put_cell(std::string& line, std::size_t x, std::size_t half, const std::string& text) {
  std::size_t start = x * half;
  if (line.size() < start + text.size()) line.resize(start + text.size(), ' ');
  std::copy(text.begin(), text.end(), line.begin() + static_cast<long>(start));
}

std::string render_grid(const std::vector<std::vector<std::string>>& cells) {
  std::size_t maxw = 1;
  for (const auto& row : cells)
    for (const auto& c : row) maxw = std::max(maxw, c.size());
  std::size_t half = maxw / 2 + 1;
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t j = 0; j < cells[r].size(); ++j) put_cell(line, 2 * j + r, half, cells[r][j]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

ScalarFrieze build_scalar_frieze(const QuidditySeq& q) {
  std::size_t n = q.size();
  if (n < 3) throw FriezeError("frieze requires a quiddity sequence of length >= 3");
  if (!is_quiddity(q)) throw FriezeError("frieze requires monodromy -Id");
  ScalarFrieze f;
  f.period = n;
  f.rows.assign(n + 1, std::vector<GaussRational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    // Continuants of the window starting at quiddity entry j.
    GaussRational prev(0), cur(1);  // p_{-1}, p_0
    f.rows[0][j] = prev;
    f.rows[1][j] = cur;
    for (std::size_t r = 2; r <= n; ++r) {
      GaussRational next = q[(j + r - 2) % n] * cur - prev;
      f.rows[r][j] = next;
      prev = cur;
      cur = next;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!f.rows[n - 1][j].is_one() || !f.rows[n][j].is_zero())
      throw FriezeError("border rows do not close");  // unreachable for -Id input
  }
  return f;
}

ScalarFrieze build_scalar_frieze_diamond(const QuidditySeq& q) {
  std::size_t n = q.size();
  if (n < 3) throw FriezeError("frieze requires a quiddity sequence of length >= 3");
  ScalarFrieze f;
  f.period = n;
  f.rows.assign(n + 1, std::vector<GaussRational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    f.rows[1][j] = GaussRational(1);
    f.rows[2][j] = q[j];
  }
  for (std::size_t r = 2; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      f.rows[r + 1][j] =
          (f.rows[r][j] * f.rows[r][(j + 1) % n] - GaussRational(1)) / f.rows[r - 1][(j + 1) % n];
  return f;
}

bool check_scalar_diamond(const ScalarFrieze& f) {
  std::size_t n = f.period;
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (f.at(r, j) * f.at(r, j + 1) != GaussRational(1) + f.at(r - 1, j + 1) * f.at(r + 1, j))
        return false;
  return true;
}

bool has_positive_interior(const ScalarFrieze& f) {
  for (std::size_t r = 1; r < f.period; ++r)
    for (const auto& v : f.rows[r])
      if (v.im() != 0 || v.re() <= 0) return false;
  return true;
}

std::string to_string(FriezeSide s) {
  switch (s) {
    case FriezeSide::Left: return "Left";
    case FriezeSide::Right: return "Right";
    default: return "TwoSided";
  }
}

MatrixFrieze build_matrix_frieze(const MatrixSeq& q) {
  std::size_t p = q.size(), l = q.order();
  if (p < 3) throw FriezeError("matrix frieze requires length >= 3");
  for (const auto& m : q.entries)
    if (m.order() != l) throw OrderMismatchError("matrix frieze entries must share one order");

  MatrixFrieze f;
  f.order = l;
  f.period = p;
  f.rows.assign(p + 1, std::vector<SquareMatrix>(p, SquareMatrix::zero(l)));
  for (std::size_t j = 0; j < p; ++j) {
    f.rows[1][j] = SquareMatrix::identity(l);  // depth -1
    f.rows[2][j] = q.entries[j];               // depth 0
  }
  SquareMatrix eye = SquareMatrix::identity(l);
  for (long d = 0; d + 1 <= static_cast<long>(p) - 2; ++d) {
    for (std::size_t j = 0; j < p; ++j) {
      const SquareMatrix& above = f.at(d - 1, j + 1);
      f.rows[static_cast<std::size_t>(d + 3)][j] =
          q.side == Side::Left ? (f.at(d, j) * f.at(d, j + 1) - eye) * above.inverse()
                               : above.inverse() * (f.at(d, j + 1) * f.at(d, j) - eye);
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    if (!f.at(static_cast<long>(p) - 3, j).is_identity() ||
        !f.at(static_cast<long>(p) - 2, j).is_zero())
      throw FriezeError("matrix frieze border rows do not close");
  }

  bool left_ok = true, right_ok = true;
  for (long d = -1; d <= static_cast<long>(p) - 3; ++d) {
    for (std::size_t j = 0; j < p; ++j) {
      if (f.at(d, j) * f.at(d, j + 1) - eye != f.at(d + 1, j) * f.at(d - 1, j + 1))
        left_ok = false;
      if (f.at(d, j + 1) * f.at(d, j) - f.at(d - 1, j + 1) * f.at(d + 1, j) != eye)
        right_ok = false;
    }
  }
  if (q.side == Side::Left && !left_ok)
    throw FriezeError("sequence does not generate a left frieze");
  if (q.side == Side::Right && !right_ok)
    throw FriezeError("sequence does not generate a right frieze");
  f.side = left_ok && right_ok ? FriezeSide::TwoSided
                               : (left_ok ? FriezeSide::Left : FriezeSide::Right);
  return f;
}

MatrixFrieze transpose(const MatrixFrieze& f) {
  MatrixFrieze t = f;
  for (auto& row : t.rows)
    for (auto& m : row) m = m.transpose();
  t.side = f.side == FriezeSide::TwoSided
               ? FriezeSide::TwoSided
               : (f.side == FriezeSide::Left ? FriezeSide::Right : FriezeSide::Left);
  return t;
}

ScalarFrieze scalarize(const MatrixFrieze& f, const std::vector<GaussRational>& x) {
  if (x.size() != f.order)
    throw NotJointEigenvectorError("eigenvector length must match the matrix order");
  std::size_t pivot = x.size();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == x.size()) throw NotJointEigenvectorError("eigenvector must be nonzero");
  const auto& quiddity = f.rows[2];
  for (std::size_t a = 0; a < quiddity.size(); ++a)
    for (std::size_t b = a + 1; b < quiddity.size(); ++b)
      if (!commutator(quiddity[a], quiddity[b]).is_zero())
        throw NonCommutingError("frieze entries do not commute pairwise");

  ScalarFrieze s;
  s.period = f.period;
  s.rows.assign(f.rows.size(), std::vector<GaussRational>(f.period));
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    for (std::size_t j = 0; j < f.period; ++j) {
      std::vector<GaussRational> y = f.rows[r][j].apply(x);
      GaussRational lambda = y[pivot] / x[pivot];
      for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] != lambda * x[i])
          throw NotJointEigenvectorError("vector is not a joint eigenvector of the frieze");
      s.rows[r][j] = lambda;
    }
  }
  return s;
}

std::string render_ascii(const ScalarFrieze& f) {
  std::vector<std::vector<std::string>> cells(f.rows.size());
  for (std::size_t r = 0; r < f.rows.size(); ++r)
    for (const auto& v : f.rows[r]) cells[r].push_back(v.str());
  return render_grid(cells);
}

std::string render_ascii(const MatrixFrieze& f) {
  std::map<SquareMatrix, std::string> labels;
  labels[SquareMatrix::zero(f.order)] = "O";
  labels[SquareMatrix::identity(f.order)] = "I";
  const std::string alphabet = "ABCDEFGHJKLMNPQRSTUVWXYZ";  // I and O are reserved
  std::size_t next = 0;
  std::vector<std::vector<std::string>> cells(f.rows.size());
  std::vector<std::pair<std::string, const SquareMatrix*>> legend;
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    for (const auto& m : f.rows[r]) {
      auto it = labels.find(m);
      if (it == labels.end()) {
        std::string name = next < alphabet.size()
                               ? std::string(1, alphabet[next])
                               : "Z" + std::to_string(next - alphabet.size() + 1);
        ++next;
        it = labels.emplace(m, name).first;
        legend.emplace_back(name, &it->first);
      }
      cells[r].push_back(it->second);
    }
  }
  std::string out = render_grid(cells);
  if (!legend.empty()) {
    out += "where:\n";
    for (const auto& [name, m] : legend) out += "  " + name + " = " + to_string(*m) + "\n";
  }
  return out;
}

}  // namespace frz
