#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "evlogic/error.hpp"

namespace {

void add_shared(CLI::App* cmd, evlogic::cli::Shared& s) {
  cmd->add_option("--mode", s.mode, "explicit: use stored B and P relations; intended: derive them from evidence")
      ->check(CLI::IsMember({"explicit", "intended"}));
  cmd->add_flag("--strict", s.strict, "Reject model files that omit W from an evidence family or fail validation");
  cmd->add_option("--seed", s.seed, "Seed for random model generation");
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace evlogic::cli;
  CLI::App app{"evlogic: model checking and validity sweeps for evidence logic over neighborhood models"};
  app.require_subcommand(1);
  Shared shared;

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Evaluate a formula on a model");
  c_check->add_option("model", check.model, "Model file")->required();
  c_check->add_option("formula", check.formula, "Formula")->required();
  c_check->add_option("--world", check.world, "Report the value at one world");
  add_shared(c_check, shared);

  std::string classify_model;
  auto* c_classify = app.add_subcommand("classify", "Validate a model and report its classes");
  c_classify->add_option("model", classify_model, "Model file")->required();
  add_shared(c_classify, shared);

  ScenarioArgs scen;
  auto* c_scen = app.add_subcommand("scenarios", "List maximal consistent evidence families");
  c_scen->add_option("model", scen.model, "Model file")->required();
  c_scen->add_option("--world", scen.world, "Only this world");
  c_scen->add_option("--relative-to", scen.relative_to, "Relativize to the truth set of a formula");
  add_shared(c_scen, shared);

  std::string derive_model, derive_out;
  auto* c_derive = app.add_subcommand("derive", "Derive belief and plausibility from evidence");
  c_derive->add_option("model", derive_model, "Model file")->required();
  c_derive->add_option("-o,--out", derive_out, "Write the lifted model here");
  add_shared(c_derive, shared);

  UpdateArgs add;
  auto* c_add = app.add_subcommand("add-evidence", "Add the truth set of a formula as evidence at every world");
  c_add->add_option("model", add.model, "Model file")->required();
  c_add->add_option("formula", add.formula, "Formula")->required();
  c_add->add_flag("--closed", add.closed, "Add the upward closure under the plausibility order");
  c_add->add_option("-o,--out", add.out, "Write the updated model here");
  add_shared(c_add, shared);

  UpdateArgs harm;
  auto* c_harm = app.add_subcommand("harmony", "Compare order cut and order re-derivation after adding evidence");
  c_harm->add_option("model", harm.model, "Model file")->required();
  c_harm->add_option("formula", harm.formula, "Formula")->required();
  add_shared(c_harm, shared);

  RepresentArgs rep;
  auto* c_rep = app.add_subcommand("represent", "Build and verify an intended representation");
  c_rep->add_option("model", rep.model, "Model file")->required();
  c_rep->add_option("--logic", rep.logic, "Construction")->check(CLI::IsMember({"flat", "concise"}));
  c_rep->add_option("--verify-depth", rep.verify_depth, "Formula depth for truth agreement");
  c_rep->add_option("--max-worlds", rep.max_worlds, "Refuse verification above this many worlds");
  c_rep->add_option("-o,--out", rep.out, "Write the lifted representation here");
  add_shared(c_rep, shared);

  UpdateArgs filt;
  auto* c_filt = app.add_subcommand("filter", "Filtrate a model through the subformulas of a formula");
  c_filt->add_option("model", filt.model, "Model file")->required();
  c_filt->add_option("formula", filt.formula, "Pivot formula")->required();
  c_filt->add_option("-o,--out", filt.out, "Write the quotient here");
  add_shared(c_filt, shared);

  PMorphismArgs pm;
  auto* c_pm = app.add_subcommand("pmorphism", "Check a world map, or search for a surjective one");
  c_pm->add_option("source", pm.source, "Source model file")->required();
  c_pm->add_option("target", pm.target, "Target model file")->required();
  c_pm->add_option("--map", pm.map, "Map as a comma list of src=tgt world ids");
  c_pm->add_option("--depth", pm.depth, "Formula depth for truth preservation");
  add_shared(c_pm, shared);

  ValidateArgs val;
  auto* c_val = app.add_subcommand("validate", "Search for counterexamples to an axiom or rule");
  auto* axiom_opt = c_val->add_option("--axiom", val.axiom, "Registry name");
  c_val->add_flag("--all", val.all, "Every row over each of its declared classes")->excludes(axiom_opt);
  c_val->add_option("--class", val.cls, "all, flat, uniform, concise or intended (default: first declared class)");
  c_val->add_option("--max-worlds", val.max_worlds, "Exhaustive family size bound");
  c_val->add_option("--max-proper-sets", val.max_proper_sets, "Distinct evidence sets other than W");
  c_val->add_option("--depth", val.depth, "Instance depth for definable instances");
  c_val->add_option("--random", val.random, "Additional seeded random models");
  c_val->add_option("--source", val.source, "Model families")->check(CLI::IsMember({"both", "general", "intended"}));
  c_val->add_option("--out", val.out, "Where to write a counterexample model");
  add_shared(c_val, shared);

  auto* c_ex = app.add_subcommand("examples", "Check fixed verdicts on the built-in witness models");
  add_shared(c_ex, shared);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_check) return run_check(shared, check);
    if (*c_classify) return run_classify(shared, classify_model);
    if (*c_scen) return run_scenarios(shared, scen);
    if (*c_derive) return run_derive(shared, derive_model, derive_out);
    if (*c_add) return run_add_evidence(shared, add);
    if (*c_harm) return run_harmony(shared, harm);
    if (*c_rep) return run_represent(shared, rep);
    if (*c_filt) return run_filter(shared, filt);
    if (*c_pm) return run_pmorphism(shared, pm);
    if (*c_val) {
      if (!val.all && val.axiom.empty()) {
        std::cerr << "validate: give --axiom NAME or --all\n";
        return 2;
      }
      return run_validate(shared, val);
    }
    if (*c_ex) return run_examples(shared);
  } catch (const evlogic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
