#include "coringlab/definition.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace coringlab {

using nlohmann::json;

namespace {

std::string label(const std::string& kind, const std::string& name) { return kind + " '" + name + "'"; }

// Runs body and prefixes any library error with the entity it belongs to.
template <class F>
auto within(const std::string& kind, const std::string& name, F body) -> decltype(body()) {
  const std::string where = label(kind, name) + ": ";
  try {
    return body();
  } catch (const UnresolvedReference&) {
    throw;
  } catch (const ParseError& e) {
    if (std::string(e.what()).rfind(where, 0) == 0) throw;
    throw ParseError(where + e.what());
  } catch (const AxiomViolation& e) {
    throw AxiomViolation(where + e.what());
  } catch (const json::exception& e) {
    throw ParseError(where + e.what());
  } catch (const Error& e) {
    throw InvalidInput(where + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  if (j.size() != n)
    throw ParseError(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  return j;
}

Vec vec_of(const Field& f, const json& j, std::size_t n, const char* what) {
  array_of(j, n, what);
  return vec_from_json(f, j);
}

Mat mat_of(const Field& f, const json& j, std::size_t rows, std::size_t cols, const char* what) {
  array_of(j, rows, what);
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vec_of(f, j[r], cols, what));
  return m;
}

std::string display_name(const json& j, const std::string& fallback) {
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("field 'name' must be a string");
    return j["name"].get<std::string>();
  }
  return fallback;
}

Field parse_field(const json& j) {
  try {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_object()) {
      std::size_t p = count_member(j, "characteristic");
      if (p == 0) return Field::rationals();
      if (p > UINT32_MAX) throw InvalidInput("characteristic too large");
      return Field::prime(static_cast<std::uint32_t>(p));
    }
  } catch (const ParseError& e) {
    throw ParseError(std::string("field: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
  throw ParseError("field: expected a name such as \"F_2\" or {\"characteristic\": p}");
}

class Loader {
 public:
  explicit Loader(const json& doc) : doc_(doc) {
    if (!doc.is_object()) throw ParseError("definition file must be a JSON object");
    def_.field = parse_field(member(doc, "field"));
    for (const char* section : {"algebras", "maps", "bimodules", "morita", "contexts"})
      if (doc.contains(section) && !doc[section].is_object())
        throw ParseError(std::string("section '") + section + "' must be an object");
  }

  Definition run() {
    for (const auto& [name, _] : section("algebras").items()) algebra(name);
    for (const auto& [name, _] : section("maps").items()) algebra_map(name);
    for (const auto& [name, _] : section("bimodules").items()) bimodule(name);
    for (const auto& [name, spec] : section("morita").items())
      def_.morita.emplace(name, within("morita", name, [&] { return morita(spec); }));
    for (const auto& [name, spec] : section("contexts").items())
      def_.contexts.emplace(name, within("context", name, [&] { return context(spec); }));
    return std::move(def_);
  }

 private:
  const json& section(const char* key) const {
    static const json empty = json::object();
    return doc_.contains(key) ? doc_[key] : empty;
  }

  const json& lookup(const char* sec, const char* kind, const std::string& name, const std::string& from) {
    const json& s = section(sec);
    if (!s.contains(name)) throw UnresolvedReference(from + ": unknown " + kind + " '" + name + "'");
    std::string key = std::string(kind) + ":" + name;
    if (active_.count(key)) throw ParseError(from + ": cyclic reference to " + label(kind, name));
    return s[name];
  }

  struct Guard {
    std::set<std::string>& set;
    std::string key;
    Guard(std::set<std::string>& s, std::string k) : set(s), key(std::move(k)) { set.insert(key); }
    ~Guard() { set.erase(key); }
  };

  AlgebraPtr algebra_ref(const json& spec, const char* key, const std::string& from) {
    return algebra(string_member(spec, key), from);
  }

  AlgebraPtr algebra(const std::string& name, const std::string& from = {}) {
    if (auto it = def_.algebras.find(name); it != def_.algebras.end()) return it->second;
    const json& spec = lookup("algebras", "algebra", name, from.empty() ? label("algebra", name) : from);
    Guard g(active_, "algebra:" + name);
    AlgebraPtr a = within("algebra", name, [&] { return build_algebra(name, spec); });
    def_.algebras.emplace(name, a);
    return a;
  }

  AlgebraPtr build_algebra(const std::string& name, const json& spec) {
    const Field& f = def_.field;
    const std::string self = label("algebra", name);
    if (spec.contains("builtin")) {
      std::string kind = string_member(spec, "builtin");
      if (kind == "field") return field_algebra(f);
      if (kind == "matrix") return matrix_algebra(count_member(spec, "n"), f);
      if (kind == "opposite") return opposite(algebra_ref(spec, "of", self));
      if (kind == "product") {
        const json& factors = member(spec, "factors");
        if (!factors.is_array() || factors.empty()) throw ParseError("'factors' must be a non-empty array");
        AlgebraPtr acc;
        for (const json& fac : factors) {
          if (!fac.is_string()) throw ParseError("'factors' must list algebra names");
          AlgebraPtr next = algebra(fac.get<std::string>(), self);
          acc = acc ? direct_product(acc, next) : next;
        }
        return acc;
      }
      throw ParseError("unknown builtin algebra '" + kind + "'");
    }
    std::size_t n = count_member(spec, "dim");
    if (n == 0) throw ParseError("dimension must be positive");
    const json& products = array_of(member(spec, "products"), n, "products");
    std::vector<std::vector<Vec>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
      array_of(products[i], n, "products row");
      for (std::size_t j = 0; j < n; ++j) table[i].push_back(vec_of(f, products[i][j], n, "product"));
    }
    Vec unit = vec_of(f, member(spec, "unit"), n, "unit");
    return Algebra::create(f, std::move(table), std::move(unit), display_name(spec, name));
  }

  AlgebraMap algebra_map(const std::string& name, const std::string& from = {}) {
    if (auto it = def_.maps.find(name); it != def_.maps.end()) return it->second;
    const json& spec = lookup("maps", "map", name, from.empty() ? label("map", name) : from);
    Guard g(active_, "map:" + name);
    AlgebraMap m = within("map", name, [&] { return build_map(name, spec); });
    def_.maps.emplace(name, m);
    return m;
  }

  AlgebraMap build_map(const std::string& name, const json& spec) {
    const std::string self = label("map", name);
    if (spec.contains("builtin")) {
      std::string kind = string_member(spec, "builtin");
      if (kind == "identity") return identity_map(algebra_ref(spec, "algebra", self));
      if (kind == "unit") return unit_map(algebra_ref(spec, "target", self));
      throw ParseError("unknown builtin map '" + kind + "'");
    }
    AlgebraPtr src = algebra_ref(spec, "source", self);
    AlgebraPtr dst = algebra_ref(spec, "target", self);
    AlgebraMap m{src, dst, mat_of(def_.field, member(spec, "matrix"), dst->dim(), src->dim(), "matrix")};
    if (!check_algebra_map(m)) throw AxiomViolation("not a unital algebra homomorphism");
    return m;
  }

  Bimodule bimodule(const std::string& name, const std::string& from = {}) {
    if (auto it = def_.bimodules.find(name); it != def_.bimodules.end()) return it->second;
    const json& spec = lookup("bimodules", "bimodule", name, from.empty() ? label("bimodule", name) : from);
    Guard g(active_, "bimodule:" + name);
    Bimodule m = within("bimodule", name, [&] { return build_bimodule(name, spec); });
    def_.bimodules.emplace(name, m);
    return m;
  }

  Bimodule build_bimodule(const std::string& name, const json& spec) {
    const Field& f = def_.field;
    const std::string self = label("bimodule", name);
    const std::string shown = display_name(spec, name);
    if (spec.contains("builtin")) {
      std::string kind = string_member(spec, "builtin");
      Bimodule m;
      if (kind == "regular") {
        m = Bimodule::regular(algebra_ref(spec, "algebra", self));
      } else if (kind == "restrict") {
        m = bimodule(string_member(spec, "of"), self);
      } else {
        throw ParseError("unknown builtin bimodule '" + kind + "'");
      }
      if (spec.contains("left_along")) m = m.restrict_left(algebra_map(string_member(spec, "left_along"), self));
      if (spec.contains("right_along")) m = m.restrict_right(algebra_map(string_member(spec, "right_along"), self));
      return m.renamed(shown);
    }
    AlgebraPtr left = algebra_ref(spec, "left", self);
    AlgebraPtr right = algebra_ref(spec, "right", self);
    std::size_t n = count_member(spec, "dim");
    auto actions = [&](const char* key, const AlgebraPtr& alg) {
      const json& arr = array_of(member(spec, key), alg->dim(), key);
      std::vector<Mat> out;
      for (const json& m : arr) out.push_back(mat_of(f, m, n, n, key));
      return out;
    };
    return Bimodule::create(left, right, n, actions("left_action", left), actions("right_action", right), shown);
  }

  std::vector<std::vector<Vec>> values(const json& j, std::size_t rows, std::size_t cols, std::size_t len,
                                       const char* what) {
    array_of(j, rows, what);
    std::vector<std::vector<Vec>> out(rows);
    for (std::size_t x = 0; x < rows; ++x) {
      array_of(j[x], cols, what);
      for (std::size_t y = 0; y < cols; ++y) out[x].push_back(vec_of(def_.field, j[x][y], len, what));
    }
    return out;
  }

  MoritaData morita(const json& spec) {
    Bimodule n = bimodule(string_member(spec, "n"));
    Bimodule m = bimodule(string_member(spec, "m"));
    require_same_algebra(n.left_algebra(), m.right_algebra(), "algebra A of n and m");
    require_same_algebra(n.right_algebra(), m.left_algebra(), "algebra B of n and m");
    TensorSpace nm(n, m), mn(m, n);
    std::size_t a = n.left_algebra()->dim(), b = m.left_algebra()->dim();
    Mat sigma = tensor_map_from_values(nm, a, values(member(spec, "sigma"), n.dim(), m.dim(), a, "sigma"));
    Mat tau_tilde = tensor_map_from_values(mn, b, values(member(spec, "tau_tilde"), m.dim(), n.dim(), b, "tau_tilde"));
    return make_morita(n, m, std::move(sigma), std::move(tau_tilde));
  }

  CoringContext context(const json& spec) {
    Bimodule n = bimodule(string_member(spec, "n"));
    Bimodule m = bimodule(string_member(spec, "m"));
    require_same_algebra(n.left_algebra(), m.right_algebra(), "algebra A of n and m");
    require_same_algebra(n.right_algebra(), m.left_algebra(), "algebra B of n and m");
    TensorSpace nm(n, m), mn(m, n);
    std::size_t a = n.left_algebra()->dim(), b = m.left_algebra()->dim();
    Mat sigma = tensor_map_from_values(nm, a, values(member(spec, "sigma"), n.dim(), m.dim(), a, "sigma"));
    const json& tau = array_of(member(spec, "tau"), b, "tau");
    Mat tau_mat(def_.field, mn.dim(), b);
    for (std::size_t k = 0; k < b; ++k) {
      Mat coeff = mat_of(def_.field, tau[k], m.dim(), n.dim(), "tau");
      Vec t(def_.field, mn.dim());
      for (std::size_t x = 0; x < m.dim(); ++x)
        for (std::size_t y = 0; y < n.dim(); ++y)
          if (!coeff.at(x, y).is_zero()) t.axpy(coeff.at(x, y), mn.pure(m.basis(x), n.basis(y)));
      tau_mat.set_column(k, t);
    }
    return make_context(n, m, std::move(sigma), std::move(tau_mat));
  }

  const json& doc_;
  Definition def_;
  std::set<std::string> active_;
};

}  // namespace

const Bimodule& Definition::bimodule(const std::string& name) const {
  auto it = bimodules.find(name);
  if (it == bimodules.end()) throw UnresolvedReference("unknown bimodule '" + name + "'");
  return it->second;
}

const AlgebraMap& Definition::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw UnresolvedReference("unknown map '" + name + "'");
  return it->second;
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  if (!j.is_string()) throw ParseError("scalar must be a string or an integer, got " + j.dump());
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Vec vec_from_json(const Field& f, const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array, got " + j.dump());
  Vec v(f, j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.set(i, scalar_from_json(f, j[i]));
  return v;
}

Mat mat_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Mat m(f, j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) m.set_row(r, vec_of(f, j[r], cols, "matrix row"));
  return m;
}

nlohmann::ordered_json to_json(const Scalar& s) { return s.to_string(); }

nlohmann::ordered_json to_json(const Vec& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v.at(i).to_string());
  return out;
}

nlohmann::ordered_json to_json(const Mat& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Definition parse_definition(const json& doc) { return Loader(doc).run(); }

Definition parse_definition_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_definition(doc);
}

Definition load_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_definition_text(buf.str());
}

}  // namespace coringlab
