// ggd — validate, construct and round-trip finite group-groupoids,
// coverings and actions described in the structure DSL.
//
// Exit codes: 0 all checks pass, 1 validation failures, 2 usage or
// parse errors. Reports go to stdout, diagnostics to stderr.
// Constructive subcommands (banal, action-groupoid, gamma, phi, ce)
// print the resulting structure as canonical DSL on success.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpd/gpd.hpp"

namespace {

using gpd::Id;
using nlohmann::json;

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string note;  // text-mode decoration, e.g. interchange counts
  std::vector<std::string> witnesses;
};

struct Run {
  bool json_mode = false;
  std::vector<CheckLine> checks;
  std::string dsl_output;  // constructive result, text mode only

  void add(CheckLine line) { checks.push_back(std::move(line)); }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  int finish() const {
    int code = all_pass() ? 0 : 1;
    if (json_mode) {
      json out;
      out["checks"] = json::array();
      for (const auto& c : checks) {
        json entry;
        entry["name"] = c.name;
        entry["status"] = c.pass ? "pass" : "fail";
        entry["witnesses"] = c.witnesses;
        out["checks"].push_back(entry);
      }
      out["exit"] = code;
      std::cout << out.dump(2) << "\n";
      return code;
    }
    if (!dsl_output.empty() && code == 0) {
      std::cout << dsl_output;
      return code;
    }
    for (const auto& c : checks) {
      std::cout << c.name << ": " << (c.pass ? "valid" : "invalid");
      if (c.pass && !c.note.empty()) std::cout << " (" << c.note << ")";
      std::cout << "\n";
      if (!c.pass)
        for (const auto& w : c.witnesses)
          std::cout << "  witness: " << w << "\n";
    }
    return code;
  }
};

std::vector<std::string> witnesses_of(const gpd::Report& report) {
  std::vector<std::string> out;
  for (const auto& v : report.violations()) out.push_back(v.code + " " + v.witness);
  return out;
}

std::string note_of(const std::string& kind, const gpd::Report& report) {
  if (kind == "groupgroupoid" && report.counters().count("interchange_instances"))
    return "interchange: " + std::to_string(report.counter("interchange_pass")) +
           "/" + std::to_string(report.counter("interchange_instances")) +
           " quadruples";
  if (kind == "action" && report.counters().count("action_pairs"))
    return "action table: " + std::to_string(report.counter("action_pairs")) +
           " pairs";
  return "";
}

// Parses and elaborates the input file. Returns nullopt after
// printing diagnostics and arranging exit code 2.
struct Loaded {
  gpd::dsl::Document doc;
  gpd::Elaboration elab;
};

std::optional<Loaded> load(const std::string& path, int& exit_code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    exit_code = 2;
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  gpd::dsl::ParseResult parsed = gpd::dsl::parse(buffer.str());
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics)
      std::cerr << path << ":" << d.line << ":" << d.column << ": " << d.message
                << " at '" << d.token << "'\n";
    exit_code = 2;
    return std::nullopt;
  }
  Loaded out{std::move(*parsed.document), {}};
  out.elab = gpd::elaborate(out.doc);
  return out;
}

// The declared name of the object group backing a group-groupoid.
std::string object_group_name(const gpd::dsl::Document& doc,
                              const std::string& ggd_name) {
  const auto* decl = doc.find_ggd(ggd_name);
  return decl ? decl->object_group : std::string{};
}

// Constructive output may assemble the same dependency twice (e.g. a
// unit action whose group is also the base's object group); keep one
// declaration per name.
void push_group(gpd::dsl::Document& doc, const std::string& name,
                const gpd::FiniteGroup& g) {
  if (!doc.find_group(name)) doc.decls.push_back(gpd::group_decl(name, g));
}

void push_ggd(gpd::dsl::Document& doc, const std::string& name,
              const std::string& object_group, const gpd::GroupGroupoid& g) {
  if (!doc.find_ggd(name))
    doc.decls.push_back(gpd::ggd_decl(name, object_group, g));
}

void append_decl_check(Run& run, const gpd::DeclCheck& check) {
  run.add({check.kind + " " + check.name, check.report.ok(),
           note_of(check.kind, check.report), witnesses_of(check.report)});
}

int cmd_validate(const std::string& path, bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  for (const auto& check : loaded->elab.checks) append_decl_check(run, check);
  return run.finish();
}

// Looks up a declaration that must have elaborated cleanly; reports
// the failure and returns false otherwise. Unknown names are usage
// errors (exit 2).
template <typename Map>
const typename Map::mapped_type* find_built(
    const Loaded& loaded, const Map& map, const std::string& kind,
    const std::string& name, Run& run, int& exit_code) {
  bool declared = false;
  for (const auto& check : loaded.elab.checks)
    if (check.kind == kind && check.name == name) {
      declared = true;
      if (!check.report.ok()) append_decl_check(run, check);
    }
  if (!declared) {
    std::cerr << "error: no " << kind << " named " << name << "\n";
    exit_code = 2;
    return nullptr;
  }
  auto it = map.find(name);
  return it == map.end() ? nullptr : &it->second;
}

int cmd_banal(const std::string& name, const std::string& path,
              bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::FiniteGroup* m =
      find_built(*loaded, loaded->elab.env.groups, "group", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!m) return run.finish();

  gpd::GroupGroupoid g = gpd::banal(*m);
  gpd::Report report = gpd::check_group_groupoid(g);
  run.add({"banal " + name, report.ok(), note_of("groupgroupoid", report),
           witnesses_of(report)});
  gpd::dsl::Document doc;
  doc.decls.push_back(gpd::group_decl(name, *m));
  doc.decls.push_back(gpd::ggd_decl("Banal" + name, name, g));
  run.dsl_output = gpd::dsl::serialize(doc);
  return run.finish();
}

int cmd_action_groupoid(const std::string& name, const std::string& path,
                        bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GroupAction* action = find_built(
      *loaded, loaded->elab.env.actions, "action", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!action) return run.finish();

  gpd::GroupGroupoid k = gpd::action_groupoid(*action);
  gpd::Report report = gpd::check_group_groupoid(k);
  run.add({"action-groupoid " + name, report.ok(),
           note_of("groupgroupoid", report), witnesses_of(report)});
  const auto* decl = loaded->doc.find_action(name);
  gpd::dsl::Document doc;
  doc.decls.push_back(gpd::group_decl(decl->group, action->m));
  doc.decls.push_back(gpd::ggd_decl(name + "_gpd", decl->group, k));
  run.dsl_output = gpd::dsl::serialize(doc);
  return run.finish();
}

int cmd_check_covering(const std::string& name, const std::string& path,
                       bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GGMorphism* p = find_built(
      *loaded, loaded->elab.env.morphisms, "morphism", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!p) return run.finish();

  gpd::Report report = gpd::check_covering(*p);
  run.add({"covering " + name, report.ok(), "", witnesses_of(report)});
  return run.finish();
}

int cmd_check_action(const std::string& name, const std::string& path,
                     bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GroupAction* action = find_built(
      *loaded, loaded->elab.env.actions, "action", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!action) return run.finish();

  gpd::Report report = gpd::check_action(*action);
  run.add({"action " + name, report.ok(), note_of("action", report),
           witnesses_of(report)});
  return run.finish();
}

int cmd_gamma(const std::string& name, const std::string& path,
              bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GroupAction* action = find_built(
      *loaded, loaded->elab.env.actions, "action", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!action) return run.finish();

  gpd::Covering covering = gpd::covering_from_action(*action);
  gpd::Report report = gpd::check_covering(covering.p);
  run.add({"gamma " + name, report.ok(), "", witnesses_of(report)});

  const auto* decl = loaded->doc.find_action(name);
  const std::string base_group = object_group_name(loaded->doc, decl->groupoid);
  gpd::dsl::Document doc;
  push_group(doc, decl->group, action->m);
  push_group(doc, base_group, action->gg.object_group);
  push_ggd(doc, name + "_gpd", decl->group, covering.total());
  push_ggd(doc, decl->groupoid, base_group, covering.base());
  doc.decls.push_back(gpd::morphism_decl(name + "_gamma", name + "_gpd",
                                         decl->groupoid, covering.p));
  run.dsl_output = gpd::dsl::serialize(doc);
  return run.finish();
}

int cmd_phi(const std::string& name, const std::string& path, bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GGMorphism* p = find_built(
      *loaded, loaded->elab.env.morphisms, "morphism", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!p) return run.finish();

  gpd::Report covering_report = gpd::check_covering(*p);
  if (!covering_report.ok()) {
    run.add({"phi " + name, false, "", witnesses_of(covering_report)});
    return run.finish();
  }
  gpd::Covering covering = gpd::make_covering(*p);
  gpd::GroupAction action = gpd::action_from_covering(covering);
  gpd::Report report = gpd::check_action(action);
  run.add({"phi " + name, report.ok(), note_of("action", report),
           witnesses_of(report)});

  const auto* decl = loaded->doc.find_morphism(name);
  const std::string base_group = object_group_name(loaded->doc, decl->codomain);
  const std::string total_group = object_group_name(loaded->doc, decl->domain);
  gpd::dsl::Document doc;
  push_group(doc, base_group, action.gg.object_group);
  push_group(doc, total_group, action.m);
  push_ggd(doc, decl->codomain, base_group, action.gg);
  doc.decls.push_back(
      gpd::action_decl(name + "_phi", decl->codomain, total_group, action));
  run.dsl_output = gpd::dsl::serialize(doc);
  return run.finish();
}

int cmd_roundtrip(const std::string& path, bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};

  gpd::Corpus corpus;
  for (const auto& check : loaded->elab.checks) {
    if (check.kind == "action") {
      if (!check.report.ok()) {
        append_decl_check(run, check);
        continue;
      }
      corpus.actions.push_back(
          {check.name, loaded->elab.env.actions.at(check.name)});
    }
    if (check.kind == "morphism" && check.report.ok()) {
      const auto& p = loaded->elab.env.morphisms.at(check.name);
      if (gpd::check_covering(p).ok()) corpus.coverings.push_back({check.name, p});
    }
  }
  for (const auto& entry : gpd::roundtrip_report(corpus))
    run.add({entry.check + " [" + entry.name + "]", entry.pass, "",
             entry.detail.empty()
                 ? std::vector<std::string>{}
                 : std::vector<std::string>{entry.detail}});
  return run.finish();
}

int cmd_components(const std::string& name, const std::string& path,
                   bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GroupGroupoid* g = find_built(
      *loaded, loaded->elab.env.groupoids, "groupgroupoid", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!g) return run.finish();

  std::string note;
  for (const auto& block : g->gpd.components()) {
    if (!note.empty()) note += " ";
    note += "{";
    for (std::size_t i = 0; i < block.size(); ++i)
      note += (i ? ", " : "") + block[i];
    note += "}";
  }
  run.add({"components " + name, true, note, {note}});
  return run.finish();
}

int cmd_vertex_group(const std::string& name, const std::string& object,
                     const std::string& path, bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GroupGroupoid* g = find_built(
      *loaded, loaded->elab.env.groupoids, "groupgroupoid", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!g) return run.finish();
  if (!g->gpd.has_object(object)) {
    std::cerr << "error: no object " << object << " in " << name << "\n";
    return 2;
  }

  gpd::FiniteGroup v = g->gpd.vertex_group(object);
  std::string note = "order " + std::to_string(v.size());
  run.add({"vertex-group " + name + " at " + object, true, note, {note}});
  return run.finish();
}

int cmd_ce(const std::string& name, const std::string& path, bool json_mode) {
  int exit_code = 0;
  auto loaded = load(path, exit_code);
  if (!loaded) return exit_code;
  Run run{json_mode, {}, {}};
  const gpd::GroupGroupoid* g = find_built(
      *loaded, loaded->elab.env.groupoids, "groupgroupoid", name, run, exit_code);
  if (exit_code) return exit_code;
  if (!g) return run.finish();

  gpd::IdentityComponent component = gpd::identity_component(*g);
  std::string note = std::string("objects normal: ") +
                     (component.objects_normal ? "yes" : "no") +
                     ", arrows normal: " +
                     (component.arrows_normal ? "yes" : "no");
  run.add({"ce " + name, component.objects_normal && component.arrows_normal,
           note, {}});
  gpd::dsl::Document doc;
  doc.decls.push_back(gpd::group_decl(name + "_ce_objects",
                                      component.component.object_group));
  doc.decls.push_back(
      gpd::ggd_decl(name + "_ce", name + "_ce_objects", component.component));
  run.dsl_output = gpd::dsl::serialize(doc);
  return run.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group-groupoid coverings and actions"};
  app.require_subcommand(1);
  app.fallthrough(false);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable report");

  std::string file, name, object;

  auto* validate = app.add_subcommand("validate", "validate every declaration");
  validate->add_option("file", file)->required();

  auto* banal_cmd = app.add_subcommand("banal", "banal group-groupoid of a group");
  banal_cmd->add_option("group", name)->required();
  banal_cmd->add_option("file", file)->required();

  auto* action_gpd = app.add_subcommand("action-groupoid",
                                        "action groupoid of an action");
  action_gpd->add_option("action", name)->required();
  action_gpd->add_option("file", file)->required();

  auto* check_cov = app.add_subcommand("check-covering",
                                       "covering criteria for a morphism");
  check_cov->add_option("morphism", name)->required();
  check_cov->add_option("file", file)->required();

  auto* check_act = app.add_subcommand("check-action", "action axioms");
  check_act->add_option("action", name)->required();
  check_act->add_option("file", file)->required();

  auto* phi = app.add_subcommand("phi", "action induced by a covering");
  phi->add_option("morphism", name)->required();
  phi->add_option("file", file)->required();

  auto* gamma = app.add_subcommand("gamma", "covering induced by an action");
  gamma->add_option("action", name)->required();
  gamma->add_option("file", file)->required();

  auto* roundtrip = app.add_subcommand("roundtrip",
                                       "both equivalence round-trips");
  roundtrip->add_option("file", file)->required();

  auto* components = app.add_subcommand("components", "transitive components");
  components->add_option("name", name)->required();
  components->add_option("file", file)->required();

  auto* vertex = app.add_subcommand("vertex-group", "vertex group at an object");
  vertex->add_option("name", name)->required();
  vertex->add_option("object", object)->required();
  vertex->add_option("file", file)->required();

  auto* ce = app.add_subcommand("ce", "transitive component of the unit");
  ce->add_option("name", name)->required();
  ce->add_option("file", file)->required();

  for (auto* sub : {validate, banal_cmd, action_gpd, check_cov, check_act, phi,
                    gamma, roundtrip, components, vertex, ce})
    sub->add_flag("--json", json_mode, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, json_mode);
    if (banal_cmd->parsed()) return cmd_banal(name, file, json_mode);
    if (action_gpd->parsed()) return cmd_action_groupoid(name, file, json_mode);
    if (check_cov->parsed()) return cmd_check_covering(name, file, json_mode);
    if (check_act->parsed()) return cmd_check_action(name, file, json_mode);
    if (phi->parsed()) return cmd_phi(name, file, json_mode);
    if (gamma->parsed()) return cmd_gamma(name, file, json_mode);
    if (roundtrip->parsed()) return cmd_roundtrip(file, json_mode);
    if (components->parsed()) return cmd_components(name, file, json_mode);
    if (vertex->parsed()) return cmd_vertex_group(name, object, file, json_mode);
    if (ce->parsed()) return cmd_ce(name, file, json_mode);
  } catch (const gpd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
