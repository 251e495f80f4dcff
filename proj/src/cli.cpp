#include "fairagg/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "fairagg/errors.hpp"
#include "fairagg/io.hpp"
#include "fairagg/random.hpp"
#include "fairagg/welfare_analysis.hpp"

namespace fairagg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string key_text(const std::vector<double>& key) {
  std::string s = "[";
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? ", " : "") + num(key[i]);
  return s + "]";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << dump(j);
  } else {
    write_json_file(path, j);
  }
}

WeightSet segment(double a, double b) {
  return WeightSet({WeightVector({a, 1 - a}), WeightVector({b, 1 - b})});
}

// ---------------------------------------------------------------------------

struct EvaluateArgs {
  std::string problem, rule, acts, out;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const ProblemFile file = parse_problem(read_json_file(a.problem));
  const AggregationRule rule = parse_rule(read_json_file(a.rule));
  std::vector<NamedAct> chosen;
  if (a.acts.empty()) {
    chosen = file.acts;
  } else {
    for (const auto& name : split_list(a.acts)) chosen.push_back({name, file.act(name)});
  }
  if (chosen.empty()) throw Error(ErrorCode::kParseError, "the problem file lists no acts");

  // Best first; ties keep file order.
  std::vector<std::size_t> order(chosen.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return rule.compare(file.problem, chosen[x].act, chosen[y].act) == Ordering::kFirstStrict;
  });

  Json j;
  j["schema"] = kEvaluationSchema;
  j["rule"] = rule.label();
  Json rows = Json::array();
  out << "rule: " << rule.label() << "\n";
  for (const auto& c : chosen) {
    const auto profile = normalized_profile(file.problem, c.act);
    Json row{{"act", c.name}, {"profile", profile}};
    if (rule.has_score()) {
      const double s = rule.evaluate(file.problem, c.act);
      row["score"] = s;
      out << c.name << "  score " << num(s) << "\n";
    } else {
      const auto key = leximin_key(profile);
      row["key"] = key;
      out << c.name << "  key " << key_text(key) << "\n";
    }
    rows.push_back(row);
  }
  std::string ranking;
  Json names = Json::array();
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) {
      const auto o = rule.compare(file.problem, chosen[order[k - 1]].act, chosen[order[k]].act);
      ranking += o == Ordering::kFirstStrict ? " > " : " ~ ";
    }
    ranking += chosen[order[k]].name;
    names.push_back(chosen[order[k]].name);
  }
  out << "ranking: " << ranking << "\n";
  j["acts"] = rows;
  j["ranking"] = names;
  if (!a.out.empty()) write_json_file(a.out, j);
  return kExitOk;
}

struct CompareArgs {
  std::string problem, rule, first, second;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const ProblemFile file = parse_problem(read_json_file(a.problem));
  const AggregationRule rule = parse_rule(read_json_file(a.rule));
  const Ordering o = rule.compare(file.problem, file.act(a.first), file.act(a.second));
  const char* sign = o == Ordering::kFirstStrict    ? " > "
                     : o == Ordering::kSecondStrict ? " < "
                                                    : " ~ ";
  out << a.first << sign << a.second << "\n";
  return kExitOk;
}

struct AxiomsArgs {
  std::string rule, problem, config, axioms, out;
  std::size_t n = 0, outcomes = 0, cells = 0;
  std::string values, beliefs;
  std::size_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  bool no_golden = false;
};

int cmd_axioms(const AxiomsArgs& a, std::ostream& out) {
  const AggregationRule rule = parse_rule(read_json_file(a.rule));
  GeneratorConfig c;
  if (!a.config.empty()) c = parse_generator_config(read_json_file(a.config));
  if (!a.problem.empty()) {
    // Take the shape of a concrete problem.
    const ProblemFile file = parse_problem(read_json_file(a.problem));
    c.n = file.problem.num_individuals();
    c.outcomes = file.problem.num_outcomes();
    c.cells = file.problem.num_cells();
  } else if (!rule.accepts(c.n) && rule.dimension()) {
    c.n = *rule.dimension();
  }
  if (a.n) c.n = a.n;
  if (a.outcomes) c.outcomes = a.outcomes;
  if (a.cells) c.cells = a.cells;
  if (!a.values.empty()) {
    auto m = value_mode_from_name(a.values);
    if (!m) throw Error(ErrorCode::kInvalidConfig, "unknown value mode '" + a.values + "'");
    c.values = *m;
  }
  if (!a.beliefs.empty()) {
    auto m = belief_mode_from_name(a.beliefs);
    if (!m) throw Error(ErrorCode::kInvalidConfig, "unknown belief mode '" + a.beliefs + "'");
    c.beliefs = *m;
  }
  c.trials = a.trials;
  c.seed = a.seed;
  if (a.no_golden) c.inject_golden = false;
  validate_config(c);

  std::vector<Axiom> axioms;
  if (a.axioms.empty()) {
    axioms = characterization_axioms();
  } else if (a.axioms == "all") {
    axioms = all_axioms();
  } else {
    for (const auto& name : split_list(a.axioms)) {
      auto ax = axiom_from_name(name);
      if (!ax) throw Error(ErrorCode::kInvalidConfig, "unknown axiom '" + name + "'");
      axioms.push_back(*ax);
    }
  }
  std::vector<AxiomReport> reports;
  bool any = false;
  for (Axiom ax : axioms) {
    reports.push_back(check_axiom(rule, ax, c));
    const auto& r = reports.back();
    any = any || r.status == VerdictStatus::kViolated;
    out << axiom_name(ax) << "  " << verdict_name(r.status) << "  trials " << r.trials;
    if (r.status == VerdictStatus::kViolated) out << "  (" << r.source << ") " << r.detail;
    out << "\n";
  }
  if (!a.out.empty()) write_json_file(a.out, reports_to_json(rule, reports));
  return any ? kExitViolation : kExitOk;
}

struct RecoverArgs {
  std::string rule, out;
  std::size_t grid = 1000;
  std::size_t n = 0;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_recover(const RecoverArgs& a, std::ostream& out) {
  const AggregationRule rule = parse_rule(read_json_file(a.rule));
  if (rule.comparator_only()) {
    throw Error(ErrorCode::kComparatorOnly, rule.label() + " has no score to probe");
  }
  std::size_t n = a.n ? a.n : rule.dimension().value_or(2);
  const WelfareFunction psi = welfare_of_rule(rule, n);
  const RecoveredWeightSet rec = recover_weight_set(psi, make_direction_grid(n, a.grid, a.seed));
  Json j = recovered_to_json(rec);

  // Compare against the weight set the rule file states, when there is one.
  std::optional<WeightSet> truth;
  if (const auto* p = std::get_if<RelativeFairParams>(&rule.params())) truth = p->weights;
  if (const auto* p = std::get_if<RelativeUtilitarianParams>(&rule.params())) {
    truth = WeightSet::singleton(p->weight);
  }
  if (std::holds_alternative<RelativeMaximinParams>(rule.params())) truth = WeightSet::simplex(n);
  out << "recovered " << rec.halfspaces.size() << " halfspaces";
  if (rec.has_vertices) out << ", " << rec.vertices.size() << " vertices";
  out << "\n";
  if (truth && rec.has_vertices) {
    const double d = hausdorff_distance(*truth, rec);
    j["hausdorff_to_rule"] = d;
    out << "hausdorff distance to the rule's weight set: " << num(d) << "\n";
  }
  if (!a.out.empty()) write_json_file(a.out, j);
  return kExitOk;
}

struct GenArgs {
  std::size_t n = 2, outcomes = 3, cells = 3, acts = 3;
  std::string values = "iid", beliefs = "iid", out;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GeneratorConfig c;
  c.n = a.n;
  c.outcomes = a.outcomes;
  c.cells = a.cells;
  auto vm = value_mode_from_name(a.values);
  auto bm = belief_mode_from_name(a.beliefs);
  if (!vm) throw Error(ErrorCode::kInvalidConfig, "unknown value mode '" + a.values + "'");
  if (!bm) throw Error(ErrorCode::kInvalidConfig, "unknown belief mode '" + a.beliefs + "'");
  c.values = *vm;
  c.beliefs = *bm;
  Problem p = gen_problem(c, a.seed);
  Rng rng(derive_seed(a.seed, 7, 0));
  std::vector<NamedAct> acts;
  for (std::size_t k = 0; k < a.acts; ++k) {
    std::vector<std::size_t> assignment(p.num_cells());
    for (auto& o : assignment) o = rng.index(p.num_outcomes());
    acts.push_back({"act" + std::to_string(k + 1), Act(std::move(assignment))});
  }
  emit(problem_to_json(p, acts), a.out, out);
  return kExitOk;
}

struct GalleryArgs {
  std::string out = "gallery";
  GalleryOptions options;
};

int cmd_gallery(const GalleryArgs& a, std::ostream& out) {
  auto files = write_gallery(a.out, a.options, out);
  out << "wrote " << files.size() << " files to " << a.out << "\n";
  return kExitOk;
}

}  // namespace

std::vector<Counterexample> counterexample_rules() {
  return {{indifference_rule(), Axiom::kPareto},
          {relative_leximin(), Axiom::kContinuity},
          {parity_rule(), Axiom::kIie},
          {max_weight_rule(segment(0.3, 0.7)), Axiom::kWpm},
          {belief_weighted_utilitarian(), Axiom::kBeliefIrrelevance},
          {nash_rule(), Axiom::kRci}};
}

std::vector<std::string> write_gallery(const std::string& dir, const GalleryOptions& options,
                                       std::ostream& log) {
  std::filesystem::create_directories(dir);
  GeneratorConfig c;
  c.n = 2;
  c.trials = options.trials;
  c.seed = options.seed;
  const auto& axioms = characterization_axioms();

  std::vector<AggregationRule> rules;
  for (const auto& ce : counterexample_rules()) rules.push_back(ce.rule);
  rules.push_back(relative_fair(segment(0.2, 0.6)));

  std::vector<std::string> files;
  std::vector<AxiomMatrixRow> rows;
  for (const auto& rule : rules) {
    AxiomMatrixRow row{rule.label(), {}};
    for (Axiom ax : axioms) row.reports.push_back(check_axiom(rule, ax, c));
    const bool designed = rows.size() < counterexample_rules().size();
    const std::string name =
        designed ? "counterexample_" + rule.label() + ".json" : rule.label() + "_reports.json";
    write_json_file(dir + "/" + name, reports_to_json(rule, row.reports));
    files.push_back(name);
    log << rule.label() << ":";
    for (const auto& r : row.reports) {
      if (r.status == VerdictStatus::kViolated) log << " violates " << axiom_name(r.axiom);
    }
    log << "\n";
    rows.push_back(std::move(row));
  }
  write_json_file(dir + "/axiom_matrix.json", axiom_matrix_to_json(rows, axioms, c));
  files.push_back("axiom_matrix.json");

  std::vector<std::pair<std::string, WelfareFunction>> functions;
  functions.emplace_back("relative_maximin", welfare_of_rule(relative_maximin(), 2));
  functions.emplace_back("relative_utilitarian_equal",
                         welfare_of_rule(relative_utilitarian(WeightVector::equal(2)), 2));
  functions.emplace_back("relative_utilitarian_asymmetric",
                         welfare_of_rule(relative_utilitarian(WeightVector({0.9, 0.1})), 2));
  functions.emplace_back("nash", welfare_of_rule(nash_rule(), 2));
  functions.emplace_back("max_weight", welfare_of_rule(max_weight_rule(segment(0.3, 0.7)), 2));
  write_json_file(dir + "/welfare_properties.json",
                  property_matrix_to_json(property_matrix(functions, options.samples, options.seed),
                                          options.samples, options.seed));
  files.push_back("welfare_properties.json");
  return files;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair aggregation of individual preferences under uncertainty", "fairagg"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score and rank the acts of a problem file");
  evaluate->add_option("problem", ev.problem, "Problem file")->required();
  evaluate->add_option("rule", ev.rule, "Rule file")->required();
  evaluate->add_option("--acts", ev.acts, "Comma-separated act names (default: all)");
  evaluate->add_option("--out", ev.out, "Write the evaluation as JSON");

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Compare two acts of a problem file");
  compare->add_option("problem", cmp.problem, "Problem file")->required();
  compare->add_option("rule", cmp.rule, "Rule file")->required();
  compare->add_option("first", cmp.first, "First act")->required();
  compare->add_option("second", cmp.second, "Second act")->required();

  AxiomsArgs ax;
  auto* axioms = app.add_subcommand("axioms", "Audit a rule against axioms");
  axioms->add_option("rule", ax.rule, "Rule file")->required();
  axioms->add_option("--problem", ax.problem, "Problem file giving n, |X| and the cell count");
  axioms->add_option("--config", ax.config, "Generator config file");
  axioms->add_option("--axioms", ax.axioms, "Comma-separated axiom names or all (default: the six characterizing axioms)");
  axioms->add_option("--n", ax.n, "Number of individuals");
  axioms->add_option("--outcomes", ax.outcomes, "Outcomes per generated problem");
  axioms->add_option("--cells", ax.cells, "Cells per generated problem");
  axioms->add_option("--values", ax.values, "iid or common_values");
  axioms->add_option("--beliefs", ax.beliefs, "iid, common_beliefs or designed_event");
  axioms->add_option("--trials", ax.trials, "Random trials per axiom");
  axioms->add_option("--seed", ax.seed, "Base seed");
  axioms->add_flag("--no-golden", ax.no_golden, "Do not inject golden witnesses");
  axioms->add_option("--out", ax.out, "Write the reports as JSON");

  RecoverArgs rc;
  auto* recover = app.add_subcommand("recover", "Rebuild the weight set from rule scores");
  recover->add_option("rule", rc.rule, "Rule file")->required();
  recover->add_option("--grid", rc.grid, "Number of probe directions");
  recover->add_option("--n", rc.n, "Individuals, for rules without a fixed dimension");
  recover->add_option("--seed", rc.seed, "Grid seed");
  recover->add_option("--out", rc.out, "Write the recovered set as JSON");

  GalleryArgs gl;
  auto* gallery = app.add_subcommand("gallery", "Regenerate the counterexample gallery");
  gallery->add_option("--out", gl.out, "Output directory");
  gallery->add_option("--seed", gl.options.seed, "Base seed");
  gallery->add_option("--trials", gl.options.trials, "Random trials per axiom");
  gallery->add_option("--samples", gl.options.samples, "Samples per welfare property");

  GenArgs gn;
  auto* gen = app.add_subcommand("gen", "Generate a random problem file");
  gen->add_option("--n", gn.n, "Number of individuals");
  gen->add_option("--outcomes", gn.outcomes, "Number of outcomes");
  gen->add_option("--cells", gn.cells, "Number of cells");
  gen->add_option("--values", gn.values, "iid or common_values");
  gen->add_option("--beliefs", gn.beliefs, "iid, common_beliefs or designed_event");
  gen->add_option("--acts", gn.acts, "Number of random acts");
  gen->add_option("--seed", gn.seed, "Seed");
  gen->add_option("--out", gn.out, "Output file (default: stdout)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*evaluate) return cmd_evaluate(ev, out);
    if (*compare) return cmd_compare(cmp, out);
    if (*axioms) return cmd_axioms(ax, out);
    if (*recover) return cmd_recover(rc, out);
    if (*gallery) return cmd_gallery(gl, out);
    if (*gen) return cmd_gen(gn, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace fairagg
