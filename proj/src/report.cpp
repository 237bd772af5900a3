#include "coringlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "coringlab/definition.hpp"

namespace coringlab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::size_t kInlineEntries = 64;

// Residues without the modulus; the header already names the field.
std::string short_scalar(const Scalar& s) {
  std::string t = s.to_string();
  return t.substr(0, t.find(' '));
}

std::string algebra_label(const AlgebraPtr& a) {
  return (a->name().empty() ? std::string("(unnamed)") : a->name()) + " [dim " + std::to_string(a->dim()) + "]";
}

void write_matrix(std::ostream& out, const Mat& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << short_scalar(m.at(r, c));
    out << "]\n";
  }
}

ordered_json subject_json(const ReportDocument& doc) {
  const Bimodule& m = doc.report.subject;
  ordered_json s;
  s["name"] = doc.subject;
  s["field"] = m.field().name();
  s["dim"] = m.dim();
  s["left_algebra"] = {{"name", m.left_algebra()->name()}, {"dim", m.left_algebra()->dim()}};
  s["right_algebra"] = {{"name", m.right_algebra()->name()}, {"dim", m.right_algebra()->dim()}};
  return s;
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
  const AnalysisReport& r = doc.report;
  const Bimodule& m = r.subject;
  std::ostringstream out;
  out << "coring-lab " << kToolVersion << "\n";
  out << "subject   " << doc.subject << " (dim " << m.dim() << ") over " << m.field().name() << "\n";
  out << "  B       " << algebra_label(m.left_algebra()) << "\n";
  out << "  A       " << algebra_label(m.right_algebra()) << "\n";
  out << "seed      " << r.seed << "\n";
  if (doc.seconds) out << "time      " << std::fixed << std::setprecision(3) << *doc.seconds << " s\n";

  out << "\nflags\n";
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const Flag& fl = r.flags[i];
    out << "  " << std::left << std::setw(22) << flag_name(static_cast<FlagId>(i)) << std::setw(14)
        << to_string(fl.value) << fl.method << "\n";
  }

  out << "\nconditions\n";
  for (const auto& [name, value] : r.conditions)
    out << "  " << std::left << std::setw(22) << name << to_string(value) << "\n";

  out << "\nconstructions\n";
  if (r.constructions.empty()) out << "  (none)\n";
  for (const Construction& c : r.constructions)
    out << "  " << (c.verified ? "verified  " : "FAILED    ") << c.name << " (" << c.detail << ")\n";

  out << "\nimplication audit\n";
  for (const AuditEntry& e : r.audit) {
    std::string hyp;
    for (const std::string& h : e.hypotheses) hyp += (hyp.empty() ? "" : " & ") + h;
    out << "  " << std::left << std::setw(10) << to_string(e.status) << hyp << " => " << e.conclusion << "  ["
        << e.tag << "]\n";
  }
  out << "  audit " << (r.audit_clean() ? "clean" : "NOT clean") << "\n";

  out << "\nwitnesses\n";
  bool any = false;
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const Flag& fl = r.flags[i];
    if (!fl.witness) continue;
    any = true;
    out << "  " << flag_name(static_cast<FlagId>(i)) << " (" << fl.witness->kind << ")\n";
    for (const auto& [key, mat] : fl.witness->data) {
      out << "    " << key << ": " << mat.rows() << " x " << mat.cols();
      if (mat.rows() * mat.cols() > kInlineEntries) {
        out << ", entries in the json report\n";
        continue;
      }
      out << "\n";
      write_matrix(out, mat, "      ");
    }
  }
  if (!any) out << "  (none)\n";
  return out.str();
}

ordered_json report_json(const ReportDocument& doc) {
  const AnalysisReport& r = doc.report;
  ordered_json out;
  out["tool"] = "coring-lab";
  out["version"] = kToolVersion;
  out["subject"] = subject_json(doc);
  out["seed"] = r.seed;
  if (doc.seconds) out["seconds"] = *doc.seconds;

  ordered_json flags = ordered_json::object();
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const Flag& fl = r.flags[i];
    ordered_json f;
    f["value"] = to_string(fl.value);
    f["method"] = fl.method;
    if (fl.witness) {
      ordered_json data = ordered_json::object();
      for (const auto& [key, mat] : fl.witness->data) data[key] = to_json(mat);
      f["witness"] = {{"kind", fl.witness->kind}, {"data", data}};
    }
    flags[flag_name(static_cast<FlagId>(i))] = f;
  }
  out["flags"] = flags;

  ordered_json conditions = ordered_json::object();
  for (const auto& [name, value] : r.conditions) conditions[name] = to_string(value);
  out["conditions"] = conditions;

  ordered_json constructions = ordered_json::array();
  for (const Construction& c : r.constructions)
    constructions.push_back({{"name", c.name}, {"verified", c.verified}, {"detail", c.detail}});
  out["constructions"] = constructions;

  ordered_json audit = ordered_json::array();
  for (const AuditEntry& e : r.audit)
    audit.push_back({{"hypotheses", e.hypotheses}, {"conclusion", e.conclusion}, {"tag", e.tag},
                     {"status", to_string(e.status)}});
  out["audit"] = audit;
  out["audit_clean"] = r.audit_clean();
  return out;
}

Witness witness_from_json(const Field& f, const json& j) {
  Witness w;
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() || !j.contains("data") ||
      !j["data"].is_object())
    throw ParseError("witness must be an object with 'kind' and 'data'");
  w.kind = j["kind"].get<std::string>();
  for (const auto& [key, value] : j["data"].items()) w.data.emplace(key, mat_from_json(f, value));
  return w;
}

ordered_json coring_json(const Coring& c) {
  const TensorSpace& cc = c.cc();
  ordered_json out;
  out["name"] = c.name();
  out["field"] = c.field().name();
  out["base"] = {{"name", c.base()->name()}, {"dim", c.base()->dim()}};
  out["dim"] = c.dim();
  out["tensor_dim"] = cc.dim();
  // Quotient basis vector q of C (x)_A C stands for e_i (x) g_k.
  ordered_json gens = ordered_json::array();
  for (const Vec& g : cc.generators()) gens.push_back(to_json(g));
  out["tensor_generators"] = gens;
  ordered_json basis = ordered_json::array();
  for (std::size_t q = 0; q < cc.dim(); ++q) basis.push_back({{"left", cc.left_index_of(q)}, {"generator", cc.slot_of(q)}});
  out["tensor_basis"] = basis;
  ordered_json left = ordered_json::array(), right = ordered_json::array();
  for (const Mat& a : c.carrier().left_actions()) left.push_back(to_json(a));
  for (const Mat& a : c.carrier().right_actions()) right.push_back(to_json(a));
  out["left_action"] = left;
  out["right_action"] = right;
  out["coproduct"] = to_json(c.coproduct());
  out["counit"] = to_json(c.counit());
  // Coring::create rejects any failure, so reaching here means all hold.
  out["validation"] = {{"bimodule_maps", true}, {"counit_laws", true}, {"coassociativity", true}};
  return out;
}

ordered_json algebra_json(const Algebra& a) {
  ordered_json out;
  out["name"] = a.name();
  out["field"] = a.field().name();
  out["dim"] = a.dim();
  out["unit"] = to_json(a.unit());
  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a.product(i, j)));
    products.push_back(row);
  }
  out["products"] = products;
  out["validation"] = {{"associative", true}, {"unital", true}};
  return out;
}

}  // namespace coringlab
