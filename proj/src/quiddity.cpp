// SPDX-License-Identifier: MIT

#include "frz/quiddity.hpp"

#include <sstream>

namespace frz {
namespace {

const GaussRational kOne(1);

void require_index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw ProductError("index out of range");
}

// Validates the sentinel convention: length-1 operands must be the point
// "(0)" and length-2 operands must be the segment "(00)".
void require_admissible(const QuidditySeq& q) {
  if (q.empty()) throw ProductError("empty sequence");
  if (q.size() == 1 && !is_unit_point(q))
    throw ProductError("length-1 operand must be the unit (0)");
  if (q.size() == 2 && !is_unit_segment(q))
    throw ProductError("length-2 operand must be the segment (00)");
}

}  // namespace

std::string to_string(MonodromyClass c) {
  switch (c) {
    case MonodromyClass::MinusId: return "MinusId";
    case MonodromyClass::PlusId: return "PlusId";
    default: return "Other";
  }
}

SquareMatrix companion(const GaussRational& a) {
  SquareMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = GaussRational(-1);
  m.at(1, 0) = GaussRational(1);
  return m;
}

SquareMatrix monodromy(const QuidditySeq& q) {
  if (q.empty()) throw ProductError("empty sequence");
  SquareMatrix m = SquareMatrix::identity(2);
  for (const GaussRational& a : q) m = companion(a) * m;
  return m;
}

MonodromyClass classify(const SquareMatrix& m) {
  if (m.is_identity()) return MonodromyClass::PlusId;
  if ((-m).is_identity()) return MonodromyClass::MinusId;
  return MonodromyClass::Other;
}

QuidditySeq circ(const QuidditySeq& t, std::size_t i, const QuidditySeq& s) {
  require_admissible(t);
  require_admissible(s);
  std::size_t n = t.size(), m = s.size();
  require_index(i, n);

  if (is_unit_point(s)) return t;  // T o_i (0) = T
  if (is_unit_point(t)) return s;  // (0) o_1 S = S

  // Both operands of length >= 2.  The segment (00) needs no special case:
  // with the middle block s_2..s_{m-1} (resp. t_2..t_{n-1}) empty, the
  // general formula already produces the glued-triangle sequences, and it
  // is this uniform reading that makes the composition axioms hold on the
  // nose (the wraparound segment case is otherwise only a cyclic rotation).
  QuidditySeq r;
  r.reserve(n + m - 1);
  if (i < n) {
    r.insert(r.end(), t.begin(), t.begin() + (i - 1));
    r.push_back(t[i - 1] + s[0] + kOne);
    r.insert(r.end(), s.begin() + 1, s.end() - 1);
    r.push_back(s[m - 1] + kOne);
    r.push_back(t[i] + kOne);
    r.insert(r.end(), t.begin() + (i + 1), t.end());
  } else {
    r.push_back(t[0] + kOne);
    r.insert(r.end(), t.begin() + 1, t.end() - 1);
    r.push_back(t[n - 1] + s[0] + kOne);
    r.insert(r.end(), s.begin() + 1, s.end() - 1);
    r.push_back(s[m - 1] + kOne);
  }
  return r;
}

QuidditySeq bullet(const QuidditySeq& t, std::size_t i, const QuidditySeq& s) {
  std::size_t n = t.size(), m = s.size();
  if (n < 3 || m < 3) throw ProductError("bullet requires operands of length >= 3");
  require_index(i, n);

  QuidditySeq r;
  r.reserve(n + m - 1);
  if (i == 1) {
    // (t_1+s_1+1, t_2, ..., t_{n-1}, t_n+1, s_2+1, s_3, ..., s_m)
    r.push_back(t[0] + s[0] + kOne);
    r.insert(r.end(), t.begin() + 1, t.end() - 1);
    r.push_back(t[n - 1] + kOne);
    r.push_back(s[1] + kOne);
    r.insert(r.end(), s.begin() + 2, s.end());
  } else {
    // (t_1,...,t_{i-2}, t_{i-1}+1, s_2+1, s_3,...,s_m, t_i+s_1+1, t_{i+1},...,t_n)
    r.insert(r.end(), t.begin(), t.begin() + (i - 2));
    r.push_back(t[i - 2] + kOne);
    r.push_back(s[1] + kOne);
    r.insert(r.end(), s.begin() + 2, s.end());
    r.push_back(t[i - 1] + s[0] + kOne);
    r.insert(r.end(), t.begin() + i, t.end());
  }
  return r;
}

QuidditySeq boxplus(const QuidditySeq& a, std::size_t i, const QuidditySeq& b) {
  std::size_t n = a.size(), m = b.size();
  if (n < 3 || m < 3) throw ProductError("boxplus requires operands of length >= 3");
  require_index(i, n);
  if (!is_quiddity(a) || !is_quiddity(b))
    throw ProductError("boxplus operands must have monodromy -Id");

  QuidditySeq r;
  r.reserve(n + m - 2);
  if (i < n) {
    // (a_1,...,a_{i-1}, a_i+b_1, b_2,...,b_{m-1}, b_m+a_{i+1}, a_{i+2},...,a_n)
    r.insert(r.end(), a.begin(), a.begin() + (i - 1));
    r.push_back(a[i - 1] + b[0]);
    r.insert(r.end(), b.begin() + 1, b.end() - 1);
    r.push_back(b[m - 1] + a[i]);
    r.insert(r.end(), a.begin() + (i + 1), a.end());
  } else {
    // (a_1+b_m, a_2,...,a_{n-1}, a_n+b_1, b_2,...,b_{m-1})
    r.push_back(a[0] + b[m - 1]);
    r.insert(r.end(), a.begin() + 1, a.end() - 1);
    r.push_back(a[n - 1] + b[0]);
    r.insert(r.end(), b.begin() + 1, b.end() - 1);
  }
  return r;
}

QuidditySeq id_circ(const QuidditySeq& a, std::size_t k, const QuidditySeq& b) {
  std::size_t n = a.size(), m = b.size();
  if (n < 2 || m < 2) throw ProductError("id_circ requires operands of length >= 2");
  require_index(k, n);
  if (!is_id_quiddity(a) || !is_id_quiddity(b))
    throw ProductError("id_circ operands must have monodromy +Id");

  QuidditySeq r;
  r.reserve(n + m - 1);
  if (k < n) {
    // (a_1,...,a_{k-1}, a_k+b_1-1, b_2,...,b_{m-1}, b_m-1, a_{k+1}-1, a_{k+2},...,a_n)
    r.insert(r.end(), a.begin(), a.begin() + (k - 1));
    r.push_back(a[k - 1] + b[0] - kOne);
    r.insert(r.end(), b.begin() + 1, b.end() - 1);
    r.push_back(b[m - 1] - kOne);
    r.push_back(a[k] - kOne);
    r.insert(r.end(), a.begin() + (k + 1), a.end());
  } else {
    // (a_1-1, a_2,...,a_{n-1}, a_n+b_1-1, b_2,...,b_{m-1}, b_m-1)
    r.push_back(a[0] - kOne);
    r.insert(r.end(), a.begin() + 1, a.end() - 1);
    r.push_back(a[n - 1] + b[0] - kOne);
    r.insert(r.end(), b.begin() + 1, b.end() - 1);
    r.push_back(b[m - 1] - kOne);
  }
  return r;
}

QuidditySeq rotate(const QuidditySeq& q, std::size_t k) {
  if (q.empty()) return q;
  k %= q.size();
  QuidditySeq r(q.begin() + k, q.end());
  r.insert(r.end(), q.begin(), q.begin() + k);
  return r;
}

std::string to_string(const QuidditySeq& q) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) os << ",";
    os << q[i].str();
  }
  os << ")";
  return os.str();
}

AxiomReport check_operad_axioms(const std::vector<QuidditySeq>& universe) {
  AxiomReport rep;
  const QuidditySeq unit{GaussRational(0)};

  for (const auto& x : universe) {
    std::size_t n = x.size();
    // Unit laws.
    if (circ(unit, 1, x) != x)
      rep.violations.push_back("unit law (0) o_1 " + to_string(x));
    ++rep.unit_checked;
    for (std::size_t i = 1; i <= n; ++i) {
      if (circ(x, i, unit) != x)
        rep.violations.push_back("unit law " + to_string(x) + " o_" + std::to_string(i) + " (0)");
      ++rep.unit_checked;
    }

    for (const auto& y : universe) {
      std::size_t m = y.size();
      for (const auto& z : universe) {
        std::size_t k = z.size();
        // Sequential associativity, restricted to j in [m-1] (m >= 2).
        if (m >= 2) {
          for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j + 1 <= m; ++j) {
              QuidditySeq lhs = circ(circ(x, i, y), i + j - 1, z);
              QuidditySeq rhs = circ(x, i, circ(y, j, z));
              ++rep.sequential_checked;
              if (lhs != rhs)
                rep.violations.push_back("sequential axiom " + to_string(x) + " o_" +
                                         std::to_string(i) + " " + to_string(y) + " o_" +
                                         std::to_string(j) + " " + to_string(z));
            }
        }
        // Parallel associativity for i < j.
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = i + 1; j <= n; ++j) {
            QuidditySeq lhs = circ(circ(x, i, y), j + m - 1, z);
            QuidditySeq rhs = circ(circ(x, j, z), i, y);
            ++rep.parallel_checked;
            if (lhs != rhs)
              rep.violations.push_back("parallel axiom " + to_string(x) + " i=" +
                                       std::to_string(i) + " j=" + std::to_string(j));
          }
        // Exclusion: the j = m instance must fail as a literal sequence
        // identity whenever all three operands have length >= 3.
        if (n >= 3 && m >= 3 && k >= 3) {
          for (std::size_t i = 1; i <= n; ++i) {
            QuidditySeq lhs = circ(circ(x, i, y), i + m - 1, z);
            QuidditySeq rhs = circ(x, i, circ(y, m, z));
            ++rep.exclusion_checked;
            if (lhs == rhs)
              rep.violations.push_back("exclusion failed (j=m coincides) " + to_string(x) +
                                       " i=" + std::to_string(i) + " " + to_string(y) + " " +
                                       to_string(z));
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace frz
