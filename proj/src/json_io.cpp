// SPDX-License-Identifier: MIT

#include "frz/json_io.hpp"

namespace frz {
namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

GaussRational scalar_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("numbers must be encoded as strings");
  return GaussRational::parse(j.get<std::string>());
}

}  // namespace

json to_json(const QuidditySeq& q) {
  json entries = json::array();
  for (const auto& v : q) entries.push_back(v.str());
  return json{{"entries", entries}};
}

QuidditySeq sequence_from_json(const json& j) {
  const json& entries = require_field(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
  QuidditySeq q;
  for (const auto& e : entries) q.push_back(scalar_from_json(e));
  return q;
}

json to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.order(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.order(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return json{{"l", m.order()}, {"entries", rows}};
}

namespace {

SquareMatrix matrix_from_rows(const json& rows, std::size_t l) {
  if (!rows.is_array() || rows.size() != l) throw ParseError("matrix must have l rows");
  SquareMatrix m(l);
  for (std::size_t r = 0; r < l; ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || row.size() != l) throw ParseError("matrix rows must have l entries");
    for (std::size_t c = 0; c < l; ++c) m.at(r, c) = scalar_from_json(row.at(c));
  }
  return m;
}

std::size_t order_from_json(const json& j) {
  const json& l = require_field(j, "l");
  if (!l.is_number_unsigned() || l.get<std::size_t>() == 0)
    throw ParseError("\"l\" must be a positive integer");
  return l.get<std::size_t>();
}

}  // namespace

SquareMatrix matrix_from_json(const json& j) {
  return matrix_from_rows(require_field(j, "entries"), order_from_json(j));
}

json to_json(const MatrixList& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(to_json(m).at("entries"));
  return json{{"l", ms.empty() ? 0 : ms.front().order()}, {"matrices", arr}};
}

MatrixList matrix_list_from_json(const json& j) {
  std::size_t l = order_from_json(j);
  const json& arr = require_field(j, "matrices");
  if (!arr.is_array()) throw ParseError("\"matrices\" must be an array");
  MatrixList ms;
  for (const auto& m : arr) ms.push_back(matrix_from_rows(m, l));
  return ms;
}

json to_json(const BiSequence& b) {
  json p = json::array(), q = json::array();
  for (const auto& m : b.p) p.push_back(to_json(m).at("entries"));
  for (const auto& m : b.q) q.push_back(to_json(m).at("entries"));
  return json{{"l", b.order()}, {"p", p}, {"q", q}};
}

BiSequence bisequence_from_json(const json& j) {
  std::size_t l = order_from_json(j);
  const json& p = require_field(j, "p");
  const json& q = require_field(j, "q");
  if (!p.is_array() || !q.is_array()) throw ParseError("\"p\" and \"q\" must be arrays");
  MatrixList ps, qs;
  for (const auto& m : p) ps.push_back(matrix_from_rows(m, l));
  for (const auto& m : q) qs.push_back(matrix_from_rows(m, l));
  return BiSequence(std::move(ps), std::move(qs));
}

json to_json(const Dissection& d) {
  json diags = json::array();
  for (const auto& dg : d.diagonals()) diags.push_back(json::array({dg.first, dg.second}));
  return json{{"n", d.n()}, {"diagonals", diags}};
}

Dissection dissection_from_json(const json& j) {
  const json& n = require_field(j, "n");
  if (!n.is_number_unsigned()) throw ParseError("\"n\" must be a positive integer");
  const json& diags = require_field(j, "diagonals");
  if (!diags.is_array()) throw ParseError("\"diagonals\" must be an array");
  std::vector<Diagonal> ds;
  for (const auto& d : diags) {
    if (!d.is_array() || d.size() != 2 || !d.at(0).is_number_integer() ||
        !d.at(1).is_number_integer() || d.at(0).get<int>() < 1 || d.at(1).get<int>() < 1)
      throw ParseError("diagonals must be pairs of vertex labels");
    ds.push_back(Diagonal(d.at(0).get<int>(), d.at(1).get<int>()));
  }
  return Dissection(n.get<std::size_t>(), ds);
}

json to_json(const ScalarFrieze& f) {
  json rows = json::array();
  for (const auto& row : f.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(r);
  }
  return json{{"period", f.period}, {"rows", rows}};
}

json to_json(const MatrixFrieze& f) {
  json rows = json::array();
  for (const auto& row : f.rows) {
    json r = json::array();
    for (const auto& m : row) r.push_back(to_json(m).at("entries"));
    rows.push_back(r);
  }
  return json{{"period", f.period}, {"l", f.order}, {"side", to_string(f.side)}, {"rows", rows}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace frz
