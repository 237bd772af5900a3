#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coringlab/definition.hpp"
#include "coringlab/report.hpp"

using namespace coringlab;

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv("CORING_LAB_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string("CORING_LAB_SEED is not an unsigned integer: '") + env + "'");
}

int cmd_analyze(const std::string& file, const std::string& name, std::optional<std::uint64_t> seed,
                const std::string& format, bool timing) {
  Definition def = load_definition(file);
  const Bimodule& m = def.bimodule(name);
  auto start = std::chrono::steady_clock::now();
  ReportDocument doc{name, analyze(m, seed ? *seed : default_seed()), std::nullopt};
  if (timing) doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (format == "json")
    std::cout << report_json(doc).dump(2) << "\n";
  else
    std::cout << render_text(doc);
  return 0;
}

int cmd_construct(const std::string& file, const std::string& what, const std::string& name) {
  Definition def = load_definition(file);
  nlohmann::ordered_json out;
  out["what"] = what;
  out["source"] = name;
  if (what == "comatrix") {
    ComatrixCoring c = comatrix_coring(def.bimodule(name));
    nlohmann::ordered_json db;
    db["elements"] = nlohmann::ordered_json::array();
    db["functionals"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
      db["elements"].push_back(to_json(c.basis.elements[i]));
      db["functionals"].push_back(to_json(c.basis.dual.map(c.basis.functionals[i])));
    }
    out["dual_basis"] = db;
    out["coring"] = coring_json(c.coring);
  } else if (what == "sweedler") {
    out["coring"] = coring_json(sweedler_coring(def.map(name)).coring);
  } else if (what == "context-coring") {
    std::optional<CoringContext> ctx;
    if (auto it = def.contexts.find(name); it != def.contexts.end()) {
      ctx = it->second;
      out["from"] = "context";
    } else if (auto mt = def.morita.find(name); mt != def.morita.end()) {
      ctx = context_from_morita(mt->second);
      if (!ctx) throw InvalidInput("morita '" + name + "': tau_tilde is not surjective, no coring context");
      out["from"] = "morita";
    } else {
      ctx = context_from_bimodule(def.bimodule(name));
      out["from"] = "bimodule";
    }
    ContextIso iso = context_iso(*ctx);
    out["coring"] = coring_json(iso.context);
    out["comatrix_isomorphism"] = {{"forward", to_json(iso.forward.matrix)},
                                   {"backward", to_json(iso.backward.matrix)},
                                   {"verified", true}};
  } else if (what == "dual-ring") {
    ComatrixCoring c = comatrix_coring(def.bimodule(name));
    out["coring_dim"] = c.coring.dim();
    out["algebra"] = algebra_json(*left_dual_ring(c.coring).algebra);
  } else {
    throw InvalidInput("unknown construction '" + what + "'");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_validate(const std::string& file) {
  Definition def = load_definition(file);
  std::cout << "field      " << def.field.name() << "\n";
  for (const auto& [name, a] : def.algebras) std::cout << "algebra    " << name << " dim " << a->dim() << "\n";
  for (const auto& [name, f] : def.maps)
    std::cout << "map        " << name << " dim " << f.source->dim() << " -> " << f.target->dim() << "\n";
  for (const auto& [name, m] : def.bimodules)
    std::cout << "bimodule   " << name << " dim " << m.dim() << " over (" << m.left_algebra()->dim() << ", "
              << m.right_algebra()->dim() << ")\n";
  for (const auto& [name, md] : def.morita)
    std::cout << "morita     " << name << " dims " << md.n.dim() << ", " << md.m.dim() << "\n";
  for (const auto& [name, ctx] : def.contexts)
    std::cout << "context    " << name << " dims " << ctx.n.dim() << ", " << ctx.m.dim() << "\n";
  std::cout << "valid\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comatrix, Sweedler and context corings over finite-dimensional algebras"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string file, name, format = "text", what;
  std::optional<std::uint64_t> seed;
  bool timing = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide every structural property of a bimodule");
  analyze_cmd->add_option("file", file, "Definition file")->required();
  analyze_cmd->add_option("--bimodule", name, "Bimodule name")->required();
  analyze_cmd->add_option("--seed", seed, "Seed for randomized searches (default $CORING_LAB_SEED or 0)");
  analyze_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--timing", timing, "Include wall-clock time in the report");

  auto* construct_cmd = app.add_subcommand("construct", "Build and dump a coring or dual ring");
  construct_cmd->add_option("file", file, "Definition file")->required();
  construct_cmd->add_option("--what", what, "Construction")
      ->required()
      ->check(CLI::IsMember({"comatrix", "sweedler", "context-coring", "dual-ring"}));
  construct_cmd->add_option("--name", name, "Bimodule, map, morita or context name")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Load a definition file and check every axiom");
  validate_cmd->add_option("file", file, "Definition file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, name, seed, format, timing);
    if (*construct_cmd) return cmd_construct(file, what, name);
    return cmd_validate(file);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
