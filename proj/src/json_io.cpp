#include "grajac/json_io.hpp"

#include <fstream>
#include <limits>

namespace grajac {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    long x = v.get_si();
    if (x >= -(1L << 62) && x <= (1L << 62)) return json(static_cast<std::int64_t>(x));
  }
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(Errc::ParseError, "bad integer literal: " + j.get<std::string>());
    }
  }
  fail(Errc::ParseError, "expected integer or decimal string");
}

json graph_to_json(const DirectedMultigraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) {
    arcs.push_back({{"from", a.from},
                    {"to", a.to},
                    {"kind", a.kind == ArcKind::Forward ? "dir" : "bi"},
                    {"mult", a.mult}});
  }
  return {{"vertices", g.vertex_count()}, {"arcs", arcs}};
}

DirectedMultigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs")) {
    fail(Errc::ParseError, "graph JSON needs \"vertices\" and \"arcs\"");
  }
  if (!j["vertices"].is_number_integer()) fail(Errc::ParseError, "\"vertices\" must be an integer");
  int n = j["vertices"].get<int>();
  std::vector<Arc> arcs;
  for (const json& a : j["arcs"]) {
    if (!a.contains("from") || !a.contains("to") || !a.contains("kind")) {
      fail(Errc::ParseError, "arc needs \"from\", \"to\", \"kind\"");
    }
    std::string kind = a["kind"].get<std::string>();
    if (kind != "dir" && kind != "bi") fail(Errc::ParseError, "arc kind must be \"dir\" or \"bi\"");
    std::int64_t mult = a.contains("mult") ? a["mult"].get<std::int64_t>() : 1;
    arcs.push_back({a["from"].get<int>(), a["to"].get<int>(),
                    kind == "dir" ? ArcKind::Forward : ArcKind::Bidirectional, mult});
  }
  return build_graph(n, arcs);
}

json matrix_to_json(const IntegerMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(int_to_json(m.at(i, j2)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntegerMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    fail(Errc::ParseError, "matrix JSON needs \"rows\", \"cols\", \"entries\"");
  }
  int r = j["rows"].get<int>();
  int c = j["cols"].get<int>();
  if (r < 0 || c < 0) fail(Errc::ParseError, "matrix dimensions must be nonnegative");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != r) {
    fail(Errc::ParseError, "\"entries\" must hold one array per row");
  }
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != c) {
      fail(Errc::ParseError, "row " + std::to_string(i) + " has wrong length");
    }
    for (int j2 = 0; j2 < c; ++j2) m.at(i, j2) = int_from_json(row[j2]);
  }
  return m;
}

json group_to_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const Int& f : g.invariant_factors) factors.push_back(int_to_json(f));
  return {{"rank", g.free_rank}, {"invariant_factors", factors}};
}

AbelianGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("invariant_factors")) {
    fail(Errc::ParseError, "group JSON needs \"rank\" and \"invariant_factors\"");
  }
  AbelianGroup g;
  g.free_rank = j["rank"].get<long long>();
  for (const json& f : j["invariant_factors"]) g.invariant_factors.push_back(int_from_json(f));
  return g;
}

json check_to_json(const TheoremCheck& c) {
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return {{"theorem", c.theorem_id},
          {"params", params},
          {"predicted", c.predicted ? group_to_json(*c.predicted) : json(nullptr)},
          {"computed", group_to_json(c.computed)},
          {"pass", c.pass}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "invalid JSON in " + path);
  return j;
}

}  // namespace grajac
