// SPDX-License-Identifier: MIT
//
// JSON encodings for all wire types.  Every number crosses the wire as an
// exact string in the scalar grammar; serialization round-trips bit-exactly.

#ifndef FRZ_JSON_IO_HPP
#define FRZ_JSON_IO_HPP

#include <json.hpp>

#include "frz/frieze.hpp"
#include "frz/polygon.hpp"

namespace frz {

// Scalar sequences: {"entries": ["2","2","1","3","1"]}.
nlohmann::json to_json(const QuidditySeq& q);
QuidditySeq sequence_from_json(const nlohmann::json& j);

// Matrices: {"l": 2, "entries": [["1","0"],["0","1"]]}.
nlohmann::json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const nlohmann::json& j);

// Matrix sequences: {"l": 2, "matrices": [[[...]],...]} (row arrays only,
// no per-matrix wrapper objects); the side travels out-of-band as a flag.
nlohmann::json to_json(const MatrixList& ms);
MatrixList matrix_list_from_json(const nlohmann::json& j);

// Bi-sequences: {"l": 2, "p": [...], "q": [...]}.
nlohmann::json to_json(const BiSequence& b);
BiSequence bisequence_from_json(const nlohmann::json& j);

// Dissections: {"n": 5, "diagonals": [[1,4],[2,4]]}, diagonals canonical.
nlohmann::json to_json(const Dissection& d);
Dissection dissection_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScalarFrieze& f);
nlohmann::json to_json(const MatrixFrieze& f);

// Parses text into JSON, mapping syntax errors to ParseError.
nlohmann::json parse_json(const std::string& text);

}  // namespace frz

#endif  // FRZ_JSON_IO_HPP
