// SPDX-License-Identifier: MIT

#include "frz/polygon.hpp"

#include <algorithm>
#include <set>

namespace frz {
namespace {

using FaceList = std::vector<std::vector<int>>;

// True when sizes f is admissible for the kind: exactly 3 for
// triangulations, any positive multiple of 3 for 3d-dissections.
bool face_size_allowed(DissectionKind kind, std::size_t f) {
  if (kind == DissectionKind::Triangulation) return f == 3;
  return f >= 3 && f % 3 == 0;
}

std::vector<FaceList> enum_region(const std::vector<int>& region, DissectionKind kind);

// Recursively chooses the face containing the base edge (region[0],
// region[1]).  `chosen` holds the indices into `region` selected so far
// (always starting with 0, 1); `next` is the smallest index still eligible.
void rec_face(const std::vector<int>& region, std::size_t next, std::vector<std::size_t>& chosen,
              DissectionKind kind, std::vector<FaceList>& out) {
  if (face_size_allowed(kind, chosen.size())) {
    // Close the face here and solve the sub-regions cut off by its chords.
    std::vector<int> face;
    face.reserve(chosen.size());
    for (std::size_t c : chosen) face.push_back(region[c]);

    std::vector<std::vector<FaceList>> parts;
    bool dead = false;
    auto add_part = [&](const std::vector<int>& sub) {
      std::vector<FaceList> opts = enum_region(sub, kind);
      if (opts.empty()) dead = true;
      parts.push_back(std::move(opts));
    };
    for (std::size_t j = 0; !dead && j + 1 < chosen.size(); ++j) {
      if (chosen[j + 1] > chosen[j] + 1) {
        // Sub-region between consecutive face vertices; the chord becomes
        // its base edge, hence heads the cyclically ordered list.
        std::vector<int> sub;
        sub.push_back(region[chosen[j + 1]]);
        for (std::size_t p = chosen[j]; p < chosen[j + 1]; ++p) sub.push_back(region[p]);
        add_part(sub);
      }
    }
    if (!dead && chosen.back() + 1 < region.size()) {
      // Wraparound sub-region between the last face vertex and region[0].
      std::vector<int> sub;
      sub.push_back(region[0]);
      for (std::size_t p = chosen.back(); p < region.size(); ++p) sub.push_back(region[p]);
      add_part(sub);
    }
    if (!dead) {
      // Cartesian product of the sub-region solutions, prefixed by `face`.
      std::vector<std::size_t> pick(parts.size(), 0);
      while (true) {
        FaceList fl{face};
        for (std::size_t p = 0; p < parts.size(); ++p)
          for (const auto& f : parts[p][pick[p]]) fl.push_back(f);
        out.push_back(std::move(fl));
        std::size_t p = 0;
        while (p < parts.size() && ++pick[p] == parts[p].size()) pick[p++] = 0;
        if (p == parts.size()) break;
      }
    }
  }
  for (std::size_t k = next; k < region.size(); ++k) {
    chosen.push_back(k);
    rec_face(region, k + 1, chosen, kind, out);
    chosen.pop_back();
  }
}

// All dissections of the (sub-)polygon with the given cyclically ordered
// vertex list, as lists of faces.  Each dissection is produced exactly once
// because the face containing the base edge is unique.
std::vector<FaceList> enum_region(const std::vector<int>& region, DissectionKind kind) {
  std::vector<FaceList> out;
  std::vector<std::size_t> chosen{0, 1};
  rec_face(region, 2, chosen, kind, out);
  return out;
}

// Rotates a cyclically ordered vertex list so the smallest label is first.
std::vector<int> canonical_face(const std::vector<int>& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] < f[best]) best = i;
  std::vector<int> r(f.begin() + best, f.end());
  r.insert(r.end(), f.begin(), f.begin() + best);
  return r;
}

bool is_polygon_side(int u, int v, std::size_t n) {
  int lo = std::min(u, v), hi = std::max(u, v);
  return hi - lo == 1 || (lo == 1 && hi == static_cast<int>(n));
}

// The diagonals spanned by a face list on the n-gon.
std::vector<Diagonal> diagonals_of_faces(const FaceList& faces, std::size_t n) {
  std::set<Diagonal> ds;
  for (const auto& f : faces)
    for (std::size_t j = 0; j < f.size(); ++j) {
      int u = f[j], v = f[(j + 1) % f.size()];
      if (!is_polygon_side(u, v, n)) ds.insert({std::min(u, v), std::max(u, v)});
    }
  return {ds.begin(), ds.end()};
}

long positive_integer_entry(const GaussRational& x) {
  if (!x.is_real() || x.re().get_den() != 1 || x.re() < 1)
    throw NotATriangulationQuiddity("entries must be positive integers");
  return x.re().get_num().get_si();
}

}  // namespace

bool diagonals_cross(const Diagonal& a, const Diagonal& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

Dissection::Dissection(std::size_t n, std::vector<Diagonal> diagonals) : n_(n) {
  if (n < 3) throw DissectionError("polygon needs at least 3 vertices");
  for (auto& d : diagonals) {
    if (d.first > d.second) std::swap(d.first, d.second);
    if (d.first < 1 || d.second > static_cast<int>(n))
      throw DissectionError("diagonal endpoint out of range");
    if (d.first == d.second || is_polygon_side(d.first, d.second, n))
      throw DissectionError("not a diagonal: degenerate or a polygon side");
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end())
    throw DissectionError("duplicate diagonal");
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals.size(); ++j)
      if (diagonals_cross(diagonals[i], diagonals[j]))
        throw DissectionError("crossing diagonals");
  diagonals_ = std::move(diagonals);
}

std::vector<std::vector<int>> Dissection::faces() const {
  std::vector<std::vector<int>> result;
  std::vector<std::vector<int>> stack;
  std::vector<int> all(n_);
  for (std::size_t v = 0; v < n_; ++v) all[v] = static_cast<int>(v + 1);
  stack.push_back(std::move(all));
  while (!stack.empty()) {
    std::vector<int> region = std::move(stack.back());
    stack.pop_back();
    bool split = false;
    for (const Diagonal& d : diagonals_) {
      std::size_t pa = region.size(), pb = region.size();
      for (std::size_t p = 0; p < region.size(); ++p) {
        if (region[p] == d.first) pa = p;
        if (region[p] == d.second) pb = p;
      }
      if (pa == region.size() || pb == region.size()) continue;
      if (pb < pa) std::swap(pa, pb);
      bool adjacent = pb == pa + 1 || (pa == 0 && pb == region.size() - 1);
      if (adjacent) continue;
      stack.emplace_back(region.begin() + pa, region.begin() + pb + 1);
      std::vector<int> other(region.begin() + pb, region.end());
      other.insert(other.end(), region.begin(), region.begin() + pa + 1);
      stack.push_back(std::move(other));
      split = true;
      break;
    }
    if (!split) result.push_back(canonical_face(region));
  }
  std::sort(result.begin(), result.end());
  return result;
}

QuidditySeq Dissection::quiddity() const {
  std::vector<long> count(n_, 0);
  for (const auto& f : faces())
    for (int v : f) ++count[v - 1];
  QuidditySeq q;
  q.reserve(n_);
  for (long c : count) q.emplace_back(c);
  return q;
}

bool Dissection::is_triangulation() const {
  for (const auto& f : faces())
    if (f.size() != 3) return false;
  return true;
}

bool Dissection::is_3d() const {
  for (const auto& f : faces())
    if (f.size() % 3 != 0) return false;
  return true;
}

Dissection triangulation_of(const QuidditySeq& q) {
  std::size_t n = q.size();
  if (n < 3) throw NotATriangulationQuiddity("need at least 3 entries");
  std::vector<long> vals;
  vals.reserve(n);
  for (const auto& x : q) vals.push_back(positive_integer_entry(x));
  std::vector<int> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<int>(v + 1);

  std::vector<Diagonal> diagonals;
  while (labels.size() > 3) {
    std::size_t ear = labels.size();
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (vals[j] == 1) {
        ear = j;
        break;
      }
    if (ear == labels.size()) throw NotATriangulationQuiddity("no ear to cut");
    std::size_t prev = (ear + labels.size() - 1) % labels.size();
    std::size_t next = (ear + 1) % labels.size();
    if (vals[prev] < 2 || vals[next] < 2)
      throw NotATriangulationQuiddity("adjacent ears are inconsistent");
    diagonals.push_back({std::min(labels[prev], labels[next]), std::max(labels[prev], labels[next])});
    --vals[prev];
    --vals[next];
    vals.erase(vals.begin() + ear);
    labels.erase(labels.begin() + ear);
  }
  if (vals[0] != 1 || vals[1] != 1 || vals[2] != 1)
    throw NotATriangulationQuiddity("residual triangle is inconsistent");
  Dissection d(n, std::move(diagonals));
  if (d.quiddity() != q) throw NotATriangulationQuiddity("reconstruction mismatch");
  return d;
}

std::vector<Dissection> enumerate_dissections(DissectionKind kind, std::size_t n) {
  if (n < 3) throw DissectionError("polygon needs at least 3 vertices");
  std::vector<int> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<int>(v + 1);
  std::vector<Dissection> out;
  for (const FaceList& fl : enum_region(all, kind))
    out.emplace_back(n, diagonals_of_faces(fl, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ovsienko_index(const Dissection& d) {
  std::size_t idx = 0;
  for (const auto& f : d.faces()) {
    if (f.size() % 3 != 0) throw DissectionError("not a 3d-dissection");
    if (f.size() % 2 == 0) ++idx;
  }
  return idx;
}

std::vector<QuidditySeq> quiddity_set(std::size_t n) {
  std::set<QuidditySeq> qs;
  for (const Dissection& d : enumerate_dissections(DissectionKind::Triangulation, n))
    qs.insert(d.quiddity());
  return {qs.begin(), qs.end()};
}

Dissection glue_circ(const Dissection& d1, std::size_t i, const Dissection& d2) {
  std::size_t n = d1.n(), m = d2.n();
  if (i < 1 || i > n) throw DissectionError("glue index out of range");
  int ii = static_cast<int>(i), mm = static_cast<int>(m), nn = static_cast<int>(n);

  std::vector<Diagonal> diagonals;
  if (i < n) {
    // d1's vertex v keeps its label for v <= i and shifts by m-1 past i;
    // d2's vertex 1 lands on i and vertex w >= 2 on i+w-1.  The new
    // triangle is (i, i+m-1, i+m).
    for (const Diagonal& d : d1.diagonals())
      diagonals.push_back({d.first <= ii ? d.first : d.first + mm - 1,
                           d.second <= ii ? d.second : d.second + mm - 1});
    for (const Diagonal& d : d2.diagonals())
      diagonals.push_back({d.first == 1 ? ii : ii + d.first - 1,
                           d.second == 1 ? ii : ii + d.second - 1});
    diagonals.push_back({ii, ii + mm - 1});
    diagonals.push_back({ii, ii + mm});
  } else {
    // Wraparound: d1 keeps its labels, d2's vertex 1 lands on n and vertex
    // w >= 2 on n+w-1.  The new triangle is (1, n, n+m-1).
    diagonals = d1.diagonals();
    for (const Diagonal& d : d2.diagonals())
      diagonals.push_back({d.first == 1 ? nn : nn + d.first - 1,
                           d.second == 1 ? nn : nn + d.second - 1});
    diagonals.push_back({1, nn});
    diagonals.push_back({nn, nn + mm - 1});
  }
  for (auto& d : diagonals)
    if (d.first > d.second) std::swap(d.first, d.second);
  return Dissection(n + m - 1, std::move(diagonals));
}

Dissection glue_bullet(const Dissection& d1, std::size_t i, const Dissection& d2) {
  std::size_t n = d1.n(), m = d2.n();
  if (i < 1 || i > n) throw DissectionError("glue index out of range");
  int ii = static_cast<int>(i), mm = static_cast<int>(m), nn = static_cast<int>(n);

  std::vector<Diagonal> diagonals;
  if (i >= 2) {
    // d1's vertex i and d2's vertex 1 overlap on the new vertex i+m-1;
    // d2's vertex w >= 2 lands on i+w-2.  The new triangle is
    // (i-1, i, i+m-1).
    auto map1 = [&](int v) { return v < ii ? v : (v == ii ? ii + mm - 1 : v + mm - 1); };
    for (const Diagonal& d : d1.diagonals()) diagonals.push_back({map1(d.first), map1(d.second)});
    for (const Diagonal& d : d2.diagonals())
      diagonals.push_back({d.first == 1 ? ii + mm - 1 : ii + d.first - 2,
                           d.second == 1 ? ii + mm - 1 : ii + d.second - 2});
    diagonals.push_back({ii - 1, ii + mm - 1});
    diagonals.push_back({ii, ii + mm - 1});
  } else {
    // i = 1: the overlapped vertex keeps label 1; d2's vertex w >= 2 lands
    // on n+w-1.  The new triangle is (1, n, n+1).
    diagonals = d1.diagonals();
    for (const Diagonal& d : d2.diagonals())
      diagonals.push_back({d.first == 1 ? 1 : nn + d.first - 1,
                           d.second == 1 ? 1 : nn + d.second - 1});
    diagonals.push_back({1, nn});
    diagonals.push_back({1, nn + 1});
  }
  for (auto& d : diagonals)
    if (d.first > d.second) std::swap(d.first, d.second);
  return Dissection(n + m - 1, std::move(diagonals));
}

}  // namespace frz
