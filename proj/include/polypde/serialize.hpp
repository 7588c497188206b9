#ifndef POLYPDE_SERIALIZE_HPP
#define POLYPDE_SERIALIZE_HPP

// JSON and CSV interchange.  Every scalar travels as an exact text literal
// ("3/2-1/2i"); no floating point is ever emitted or accepted.
//
// Solution-space document, schema version 1:
//
//   {
//     "version": 1,
//     "d": 2,
//     "vars": ["x", "y"],
//     "root": ["0", "0"],
//     "degree_cap": 3,
//     "basis": [ {"monomials": [[[0,0], "1"]]}, ... ],
//     "particular": {"monomials": [...]},        optional
//     "notes": ["..."]
//   }

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "solver.hpp"

namespace polypde {

using nlohmann::json;

inline json poly_to_json(const multi_poly& p) {
  json monomials = json::array();
  for (const auto& [a, c] : p.terms())
    monomials.push_back(json::array({a.components(), format_scalar(c)}));
  return json{{"monomials", std::move(monomials)}};
}

inline multi_poly poly_from_json(const json& j, int dim) {
  if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_array())
    throw error("polynomial JSON needs a 'monomials' array");
  multi_poly p(dim);
  for (const json& entry : j["monomials"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
        !entry[1].is_string())
      throw error("each monomial must be [multi-index, scalar-string]");
    std::vector<int> comps = entry[0].get<std::vector<int>>();
    if (static_cast<int>(comps.size()) != dim)
      throw dimension_mismatch("multi-index of dimension " +
                               std::to_string(comps.size()) + ", expected " +
                               std::to_string(dim));
    for (int v : comps)
      if (v < 0) throw error("negative exponent in multi-index");
    p.add_term(multi_index(std::move(comps)),
               parse_scalar(entry[1].get<std::string>()));
  }
  return p;
}

struct space_document {
  solution_space space;
  std::vector<std::string> vars;
  std::vector<std::string> notes;
};

inline json space_to_json(const solution_space& space,
                          const std::vector<std::string>& vars,
                          const std::vector<std::string>& notes = {}) {
  json root = json::array();
  for (const gaussian_rational& c : space.root)
    root.push_back(format_scalar(c));
  json basis = json::array();
  for (const multi_poly& b : space.basis) basis.push_back(poly_to_json(b));
  json out{{"version", 1},
           {"d", space.root.size()},
           {"vars", vars},
           {"root", std::move(root)},
           {"degree_cap", space.degree_cap},
           {"basis", std::move(basis)},
           {"notes", notes}};
  if (space.particular) out["particular"] = poly_to_json(*space.particular);
  return out;
}

inline space_document space_from_json(const json& j) {
  if (!j.is_object()) throw error("solution document must be a JSON object");
  if (!j.contains("version") || j["version"] != 1)
    throw error("unsupported document version");
  for (const char* key : {"d", "vars", "root", "degree_cap", "basis"})
    if (!j.contains(key))
      throw error(std::string("solution document missing '") + key + "'");
  int dim = j["d"].get<int>();
  if (dim < 1) throw error("d must be at least 1");

  space_document doc;
  doc.vars = j["vars"].get<std::vector<std::string>>();
  if (static_cast<int>(doc.vars.size()) != dim)
    throw dimension_mismatch("vars list of length " +
                             std::to_string(doc.vars.size()) + " with d = " +
                             std::to_string(dim));
  for (const json& c : j["root"])
    doc.space.root.push_back(parse_scalar(c.get<std::string>()));
  if (static_cast<int>(doc.space.root.size()) != dim)
    throw dimension_mismatch("root arity " +
                             std::to_string(doc.space.root.size()) +
                             " with d = " + std::to_string(dim));
  doc.space.degree_cap = j["degree_cap"].get<int>();
  if (doc.space.degree_cap < 0) throw error("degree_cap must be >= 0");
  for (const json& b : j["basis"]) {
    multi_poly p = poly_from_json(b, dim);
    if (p.degree() > doc.space.degree_cap)
      throw degree_exceeds_cap("basis element beyond the document's cap");
    doc.space.basis.push_back(std::move(p));
  }
  if (j.contains("particular")) {
    multi_poly p = poly_from_json(j["particular"], dim);
    if (p.degree() > doc.space.degree_cap)
      throw degree_exceeds_cap("particular part beyond the document's cap");
    doc.space.particular = std::move(p);
  }
  if (j.contains("notes"))
    doc.notes = j["notes"].get<std::vector<std::string>>();
  return doc;
}

inline json matrix_to_json(const exact_matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline std::string matrix_to_csv(const exact_matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_scalar(m(r, c));
    }
    out += '\n';
  }
  return out;
}

inline exact_matrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<gaussian_rational>> rows;
  std::size_t line_start = 0;
  for (std::size_t p = 0; p <= text.size(); ++p) {
    if (p != text.size() && text[p] != '\n') continue;
    std::string_view line = text.substr(line_start, p - line_start);
    std::size_t consumed_start = line_start;
    line_start = p + 1;
    if (line.empty()) continue;
    std::vector<gaussian_rational> row;
    std::size_t field_start = 0;
    for (std::size_t q = 0; q <= line.size(); ++q) {
      if (q != line.size() && line[q] != ',') continue;
      std::string_view field = line.substr(field_start, q - field_start);
      try {
        row.push_back(parse_scalar(field));
      } catch (const parse_error& e) {
        throw parse_error("bad matrix entry",
                          consumed_start + field_start + e.position);
      }
      field_start = q + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw length_mismatch("ragged CSV rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return {};
  exact_matrix out(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) out(r, c) = rows[r][c];
  return out;
}

}  // namespace polypde

#endif
