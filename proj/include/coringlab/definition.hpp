#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "coringlab/comatrix.hpp"

namespace coringlab {

// Named objects of a definition file, every one validated at load time.
//
//   field      "F_2", "Q", "GF(3)" or {"characteristic": p} (0 for Q)
//   algebras   {"dim", "unit", "products"} with products[i][j] the coordinates
//              of b_i b_j, or {"builtin": "field" | "matrix" (n) | "product"
//              (factors) | "opposite" (of)}
//   maps       {"source", "target", "matrix"} (rows = target dim) or
//              {"builtin": "identity" (algebra) | "unit" (target)}
//   bimodules  {"left", "right", "dim", "left_action", "right_action"} with one
//              dim x dim matrix per algebra basis vector, column m holding the
//              image of e_m; or {"builtin": "regular" (algebra) | "restrict"
//              (of, left_along, right_along)}
//   morita     {"n", "m", "sigma", "tau_tilde"}: sigma[x][y] = sigma(n_x (x) m_y),
//              tau_tilde[x][y] = tau_tilde(m_x (x) n_y)
//   contexts   {"n", "m", "sigma", "tau"}: tau[b] is a dim M x dim N table of
//              coefficients, tau(b_b) = sum tau[b][x][y] m_x (x) n_y
//
// Scalars are strings ("3/7", "2 mod 5") or integers. Optional "name" fields
// override display names; bimodules default to their key.
struct Definition {
  Field field;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, AlgebraMap> maps;
  std::map<std::string, Bimodule> bimodules;
  std::map<std::string, MoritaData> morita;
  std::map<std::string, CoringContext> contexts;

  const Bimodule& bimodule(const std::string& name) const;
  const AlgebraMap& map(const std::string& name) const;
};

// Errors are ParseError, UnresolvedReference, AxiomViolation or InvalidInput,
// each message starting with the entity kind and name.
Definition parse_definition(const nlohmann::json& doc);
Definition parse_definition_text(const std::string& text);
Definition load_definition(const std::filesystem::path& path);

Scalar scalar_from_json(const Field& f, const nlohmann::json& j);
Vec vec_from_json(const Field& f, const nlohmann::json& j);
// Array of rows.
Mat mat_from_json(const Field& f, const nlohmann::json& j);

nlohmann::ordered_json to_json(const Scalar& s);
nlohmann::ordered_json to_json(const Vec& v);
nlohmann::ordered_json to_json(const Mat& m);

}  // namespace coringlab
