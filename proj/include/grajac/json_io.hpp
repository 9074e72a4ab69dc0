#pragma once

#include <string>

#include <json.hpp>

#include "grajac/graph.hpp"
#include "grajac/matrix.hpp"
#include "grajac/abelian.hpp"
#include "grajac/oracles.hpp"

namespace grajac {

/// Exact integers: plain JSON numbers when they fit in 63 bits, decimal
/// strings otherwise. Parsing accepts both.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const DirectedMultigraph& g);
DirectedMultigraph graph_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

/// One JSON-lines sweep record.
nlohmann::json check_to_json(const TheoremCheck& c);

/// Reads and parses a whole file; ParseError on bad JSON or I/O failure.
nlohmann::json read_json_file(const std::string& path);

}  // namespace grajac
