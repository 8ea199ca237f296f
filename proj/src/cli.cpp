#include "qlab/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qlab/dot.hpp"
#include "qlab/fixtures.hpp"

namespace qlab {

using nlohmann::json;

Workspace builtin_workspace() {
  Workspace ws;
  fixtures::Ctx ctx = fixtures::ctx();
  ws.q = ctx.q2;
  ws.categories.emplace("A", ctx.A);
  ws.categories.emplace("B", ctx.B);
  ws.categories.emplace("S", star_category(ctx.q2, 0));
  ws.categories.emplace("antichain", fixtures::poset_antichain(ctx.q2));
  ws.categories.emplace("fence", fixtures::poset_fence(ctx.q2));
  ws.categories.emplace("diamond", fixtures::poset_diamond_minus_top(ctx.q2));

  QFunctor pick{ws.categories.at("S"), ctx.B, {0}};
  ws.functors.emplace("pick_y1", pick);
  ws.functor_bounds["pick_y1"] = {"S", "B"};
  ws.functors.emplace("idA", identity_functor(ctx.A));
  ws.functor_bounds["idA"] = {"A", "A"};

  ws.distributors.emplace("phi", ctx.phi);
  ws.dist_bounds["phi"] = {"A", "B"};
  ws.distributors.emplace("antichain_id", identity_dist(ws.categories.at("antichain")));
  ws.dist_bounds["antichain_id"] = {"antichain", "antichain"};
  ws.distributors.emplace("fence_id", identity_dist(ws.categories.at("fence")));
  ws.dist_bounds["fence_id"] = {"fence", "fence"};
  ws.distributors.emplace("diamond_id", identity_dist(ws.categories.at("diamond")));
  ws.dist_bounds["diamond_id"] = {"diamond", "diamond"};

  // the CTX Isbell closure over the canonical enumeration of PA
  ws.spaces.emplace("ctx_closure", ClosureSpaceDoc{"A", {2, 3, 2, 3}});
  return ws;
}

namespace {

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs)
    out.push_back({{"law", v.law}, {"witness", v.witness}, {"structural", v.structural}});
  return out;
}

int cmd_validate(const std::vector<std::string>& paths, std::ostream& out, std::ostream& err) {
  json report;
  report["files"] = json::array();
  bool all_ok = true;
  for (const std::string& path : paths) {
    Workspace ws;
    try {
      ws = load_workspace(path);
    } catch (const SchemaError& e) {
      err << "parse error: " << e.what() << "\n";
      return 2;
    }
    try {
      Report r = validate_workspace(ws);
      report["files"].push_back(
          {{"path", path}, {"ok", r.ok()}, {"violations", violations_json(r.items())}});
      all_ok = all_ok && r.ok();
    } catch (const CapExceeded& e) {
      err << "cap exceeded while validating '" << path << "': " << e.what() << "\n";
      return 3;
    }
  }
  out << canonical_dump(report);
  return all_ok ? 0 : 1;
}

struct LoadedWorkspace {
  Workspace ws;
  int error = 0;
};

// `check` reports law violations through its suites, so it only gates on
// structural breakage; the other commands need a fully valid workspace.
LoadedWorkspace acquire_workspace(const std::string& path, long long cap_override,
                                  bool full_validation, std::ostream& err) {
  LoadedWorkspace out;
  if (path.empty()) {
    out.ws = builtin_workspace();
  } else {
    try {
      out.ws = load_workspace(path);
    } catch (const SchemaError& e) {
      err << "parse error: " << e.what() << "\n";
      out.error = 2;
      return out;
    }
  }
  if (cap_override > 0) out.ws.cap = cap_override;
  try {
    Report r = validate_workspace(out.ws);
    if (full_validation ? !r.ok() : r.has_structural()) {
      err << "workspace does not validate:\n" << r.to_string();
      out.error = 1;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    out.error = 3;
  }
  return out;
}

int cmd_lattice(const Workspace& ws, const std::string& dist_name, const std::string& format,
                bool kan, std::ostream& out, std::ostream& err) {
  auto it = ws.distributors.find(dist_name);
  if (it == ws.distributors.end()) {
    err << "unknown distributor '" << dist_name << "'\n";
    return 1;
  }
  FixedPointLattice lattice;
  try {
    lattice = kan ? kan_lattice(it->second, ws.cap) : concept_lattice(it->second, ws.cap);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
  if (format == "dot")
    out << dot_of_lattice(lattice);
  else
    out << canonical_dump(lattice_json(lattice));
  return 0;
}

int cmd_check(const Workspace& ws, const std::string& suite, std::ostream& out, std::ostream& err) {
  std::vector<SuiteResult> results;
  try {
    results = run_suites(ws, suite);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  json doc;
  doc["suites"] = json::array();
  bool violated = false, capped = false;
  for (const SuiteResult& r : results) {
    doc["suites"].push_back({{"suite", r.suite},
                             {"violations", violations_json(r.violations)},
                             {"notes", r.notes},
                             {"cap_exceeded", r.cap_exceeded}});
    violated = violated || !r.violations.empty();
    capped = capped || r.cap_exceeded;
  }
  out << canonical_dump(doc);
  if (violated) return 1;
  if (capped) return 3;
  return 0;
}

int cmd_export(const Workspace& ws, const std::string& name, const std::string& format,
               std::ostream& out, std::ostream& err) {
  auto dump = [&](const json& doc) {
    out << canonical_dump(doc);
    return 0;
  };
  auto dump_category = [&](const QCategory& cat, const std::string& graph_name) {
    if (format == "dot") {
      out << dot_of_category(cat, graph_name);
      return 0;
    }
    return dump(category_json(cat));
  };
  try {
    if (name == "quantaloid") return dump(quantaloid_json(*ws.q));
    if (auto it = ws.categories.find(name); it != ws.categories.end())
      return dump_category(it->second, name);
    if (auto it = ws.functors.find(name); it != ws.functors.end()) {
      auto bounds = ws.functor_bounds.at(name);
      return dump(functor_json(it->second, bounds.first, bounds.second));
    }
    if (auto it = ws.distributors.find(name); it != ws.distributors.end()) {
      auto bounds = ws.dist_bounds.at(name);
      return dump(distributor_json(it->second, bounds.first, bounds.second));
    }
    if (auto it = ws.spaces.find(name); it != ws.spaces.end()) return dump(space_json(it->second));
    // derived objects: P(cat), Pd(cat), M(dist), K(dist)
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
      std::string op = name.substr(0, paren);
      std::string arg = name.substr(paren + 1, name.size() - paren - 2);
      if (op == "P" || op == "Pd") {
        auto it = ws.categories.find(arg);
        if (it == ws.categories.end()) {
          err << "unknown category '" << arg << "'\n";
          return 1;
        }
        QCategory cat = (op == "P") ? enumerate_presheaves(it->second, ws.cap).cat
                                    : enumerate_copresheaves(it->second, ws.cap).cat;
        return dump_category(cat, name);
      }
      if (op == "M" || op == "K") {
        auto it = ws.distributors.find(arg);
        if (it == ws.distributors.end()) {
          err << "unknown distributor '" << arg << "'\n";
          return 1;
        }
        FixedPointLattice lattice =
            (op == "M") ? concept_lattice(it->second, ws.cap) : kan_lattice(it->second, ws.cap);
        if (format == "dot") {
          out << dot_of_lattice(lattice);
          return 0;
        }
        return dump(lattice_json(lattice));
      }
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
  err << "unknown name '" << name << "'\n";
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computation with finite quantaloid-enriched categories"};
  app.require_subcommand(1);

  std::string workspace_path;
  long long cap = 0;
  app.add_option("-w,--workspace", workspace_path, "workspace document (defaults to the bundled fixtures)");
  app.add_option("--cap", cap, "presheaf enumeration cap")->envname("QLAB_CAP");

  auto* validate = app.add_subcommand("validate", "run every validator over the given documents");
  std::vector<std::string> paths;
  validate->add_option("files", paths, "workspace documents")->required();

  auto* concepts = app.add_subcommand("concepts", "compute the concept lattice M(phi)");
  std::string dist_name, concepts_format = "json";
  concepts->add_option("distributor", dist_name, "distributor name")->required();
  concepts->add_option("--format", concepts_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* kan = app.add_subcommand("kan", "compute the Kan lattice K(phi)");
  std::string kan_dist, kan_format = "json";
  kan->add_option("distributor", kan_dist, "distributor name")->required();
  kan->add_option("--format", kan_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* check = app.add_subcommand("check", "run the law suites over the workspace");
  std::string suite = "all";
  check->add_option("--suite", suite, "quantaloid|dist|presheaf|closure|isbell|kan|girard|all");

  auto* exp = app.add_subcommand("export", "serialize a workspace or derived object");
  std::string export_name, export_format = "json";
  exp->add_option("name", export_name, "object name, or P(cat), Pd(cat), M(dist), K(dist)")
      ->required();
  exp->add_option("--format", export_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  std::vector<const char*> argv;
  argv.push_back("qlab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  if (validate->parsed()) return cmd_validate(paths, out, err);

  LoadedWorkspace lw = acquire_workspace(workspace_path, cap, !check->parsed(), err);
  if (lw.error) return lw.error;
  if (concepts->parsed()) return cmd_lattice(lw.ws, dist_name, concepts_format, false, out, err);
  if (kan->parsed()) return cmd_lattice(lw.ws, kan_dist, kan_format, true, out, err);
  if (check->parsed()) return cmd_check(lw.ws, suite, out, err);
  if (exp->parsed()) return cmd_export(lw.ws, export_name, export_format, out, err);
  return 2;
}

}  // namespace qlab
