#include "fairagg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fairagg/errors.hpp"

namespace fairagg {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    parse_error("field '" + what + "' has the wrong type");
  }
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) parse_error("field '" + what + "' must be a number");
  return j.get<double>();
}

std::vector<double> numbers(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_error("field '" + what + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

void check_schema(const Json& j, const char* expected) {
  const auto s = as<std::string>(field(j, "schema"), "schema");
  if (s != expected) parse_error("schema '" + s + "' is not '" + expected + "'");
}

Json act_to_json(const Problem& p, const Act& act) {
  Json j = Json::object();
  for (std::size_t c = 0; c < p.num_cells(); ++c) j[p.cells()[c]] = p.outcomes().at(act[c]);
  return j;
}

Act act_from_json(const Problem& p, const Json& j, const std::string& name) {
  if (!j.is_object()) parse_error("act '" + name + "' must map cells to outcomes");
  std::map<std::string, std::string> labels;
  for (auto it = j.begin(); it != j.end(); ++it) {
    labels[it.key()] = as<std::string>(it.value(), "act " + name);
  }
  return Act::from_labels(p, labels);
}

Problem problem_body(const Json& j) {
  const auto outcomes = as<std::vector<std::string>>(field(j, "outcomes"), "outcomes");
  const auto cells = as<std::vector<std::string>>(field(j, "partition"), "partition");
  std::map<std::string, std::size_t> outcome_at, cell_at;
  for (std::size_t k = 0; k < outcomes.size(); ++k) outcome_at.emplace(outcomes[k], k);
  for (std::size_t c = 0; c < cells.size(); ++c) cell_at.emplace(cells[c], c);

  const Json& people = field(j, "individuals");
  if (!people.is_array()) parse_error("'individuals' must be an array");
  std::vector<Individual> individuals;
  for (std::size_t i = 0; i < people.size(); ++i) {
    const std::string who = "individual " + std::to_string(i);
    const Json& values = field(people[i], "values");
    const Json& belief = field(people[i], "belief");
    if (!values.is_object() || !belief.is_object()) {
      parse_error(who + ": values and belief must be objects");
    }
    Individual ind{ValueFunction(outcomes.size(), 0.0), Belief(cells.size(), 0.0)};
    std::vector<bool> seen_value(outcomes.size(), false), seen_cell(cells.size(), false);
    for (auto it = values.begin(); it != values.end(); ++it) {
      auto o = outcome_at.find(it.key());
      if (o == outcome_at.end()) {
        throw Error(ErrorCode::kUnknownOutcome, who + ": unknown outcome '" + it.key() + "'");
      }
      ind.values[o->second] = number(it.value(), who + " value");
      seen_value[o->second] = true;
    }
    for (auto it = belief.begin(); it != belief.end(); ++it) {
      auto c = cell_at.find(it.key());
      if (c == cell_at.end()) {
        throw Error(ErrorCode::kUnknownCell, who + ": unknown cell '" + it.key() + "'");
      }
      ind.belief[c->second] = number(it.value(), who + " belief");
      seen_cell[c->second] = true;
    }
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (!seen_value[k]) parse_error(who + " has no value for outcome '" + outcomes[k] + "'");
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!seen_cell[c]) parse_error(who + " has no belief for cell '" + cells[c] + "'");
    }
    individuals.push_back(std::move(ind));
  }

  std::vector<std::size_t> reference;
  if (auto it = j.find("reference_event"); it != j.end()) {
    for (const auto& label : as<std::vector<std::string>>(*it, "reference_event")) {
      auto c = cell_at.find(label);
      if (c == cell_at.end()) {
        throw Error(ErrorCode::kUnknownCell, "reference event cell '" + label + "'");
      }
      reference.push_back(c->second);
    }
    if (reference.empty()) parse_error("reference_event must not be empty");
  }
  Problem p(outcomes, cells, std::move(individuals), std::move(reference));
  require_valid(p);
  return p;
}

std::vector<std::vector<double>> weight_rows(const WeightSet& set) {
  std::vector<std::vector<double>> rows;
  for (const auto& v : set.vertices()) rows.push_back(v.values());
  return rows;
}

WeightSet weight_set_from(const Json& j) {
  if (auto it = j.find("simplex"); it != j.end()) {
    const auto n = as<std::size_t>(*it, "simplex");
    if (n < 2) parse_error("simplex needs n >= 2");
    return WeightSet::simplex(n);
  }
  const Json& rows = field(j, "vertices");
  if (!rows.is_array()) parse_error("'vertices' must be an array");
  std::vector<WeightVector> vertices;
  for (const auto& row : rows) vertices.emplace_back(numbers(row, "vertices"));
  return WeightSet(std::move(vertices));
}

void weight_set_to(Json& j, const WeightSet& set) {
  if (set.full_simplex()) {
    j["simplex"] = set.dimension();
  } else {
    j["vertices"] = weight_rows(set);
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

const Act& ProblemFile::act(const std::string& name) const {
  for (const auto& a : acts) {
    if (a.name == name) return a.act;
  }
  parse_error("unknown act '" + name + "'");
}

ProblemFile parse_problem(const Json& j) {
  check_schema(j, kProblemSchema);
  ProblemFile file{problem_body(j), {}};
  if (auto it = j.find("acts"); it != j.end()) {
    if (!it->is_object()) parse_error("'acts' must be an object");
    for (auto a = it->begin(); a != it->end(); ++a) {
      file.acts.push_back({a.key(), act_from_json(file.problem, a.value(), a.key())});
    }
  }
  return file;
}

Json problem_to_json(const Problem& p, const std::vector<NamedAct>& acts) {
  Json j;
  j["schema"] = kProblemSchema;
  j["outcomes"] = p.outcomes();
  j["partition"] = p.cells();
  Json people = Json::array();
  for (const auto& ind : p.individuals()) {
    Json values = Json::object(), belief = Json::object();
    for (std::size_t k = 0; k < p.num_outcomes(); ++k) values[p.outcomes()[k]] = ind.values[k];
    for (std::size_t c = 0; c < p.num_cells(); ++c) belief[p.cells()[c]] = ind.belief[c];
    people.push_back(Json{{"values", values}, {"belief", belief}});
  }
  j["individuals"] = people;
  if (p.reference_event() != std::vector<std::size_t>{0}) {
    Json ref = Json::array();
    for (std::size_t c : p.reference_event()) ref.push_back(p.cells()[c]);
    j["reference_event"] = ref;
  }
  if (!acts.empty()) {
    Json a = Json::object();
    for (const auto& named : acts) a[named.name] = act_to_json(p, named.act);
    j["acts"] = a;
  }
  return j;
}

AggregationRule parse_rule(const Json& j) {
  check_schema(j, kRuleSchema);
  const auto name = as<std::string>(field(j, "kind"), "kind");
  const auto kind = rule_kind_from_name(name);
  if (!kind) parse_error("unknown rule kind '" + name + "'");
  std::string label;
  if (auto it = j.find("label"); it != j.end()) label = as<std::string>(*it, "label");

  RuleParams params = RelativeMaximinParams{};
  switch (*kind) {
    case RuleKind::kRelativeFair: params = RelativeFairParams{weight_set_from(j)}; break;
    case RuleKind::kRelativeUtilitarian:
      params = RelativeUtilitarianParams{WeightVector(numbers(field(j, "weight"), "weight"))};
      break;
    case RuleKind::kRelativeMaximin: params = RelativeMaximinParams{}; break;
    case RuleKind::kRelativeLeximin: params = RelativeLeximinParams{}; break;
    case RuleKind::kVariational: {
      const Json& list = field(j, "candidates");
      if (!list.is_array()) parse_error("'candidates' must be an array");
      std::vector<PenalizedWeight> candidates;
      for (const auto& c : list) {
        candidates.push_back({WeightVector(numbers(field(c, "weight"), "weight")),
                              number(field(c, "penalty"), "penalty")});
      }
      params = VariationalParams{CostFunction(std::move(candidates))};
      break;
    }
    case RuleKind::kIndifference: params = IndifferenceParams{}; break;
    case RuleKind::kParity: params = ParityParams{}; break;
    case RuleKind::kMaxWeight: params = MaxWeightParams{weight_set_from(j)}; break;
    case RuleKind::kNash: params = NashParams{}; break;
    case RuleKind::kBeliefWeightedUtilitarian: {
      BeliefWeightedParams b;
      if (auto it = j.find("reference_event"); it != j.end()) {
        const auto sel = as<std::string>(*it, "reference_event");
        if (sel == "designated") {
          b.selector = ReferenceEventSelector::kDesignated;
        } else if (sel == "first_cell") {
          b.selector = ReferenceEventSelector::kFirstCell;
        } else {
          parse_error("reference_event must be 'designated' or 'first_cell'");
        }
      }
      if (auto it = j.find("offset"); it != j.end()) b.offset = number(*it, "offset");
      if (!(b.offset > 0.0)) throw Error(ErrorCode::kInvalidWeight, "offset must be positive");
      params = b;
      break;
    }
  }
  AggregationRule rule(std::move(params), label);
  if (auto it = j.find("strict_threshold"); it != j.end()) {
    const double t = number(*it, "strict_threshold");
    if (!(t >= 0.0)) parse_error("strict_threshold must be non-negative");
    rule.set_strict_threshold(t);
  }
  return rule;
}

Json rule_to_json(const AggregationRule& rule) {
  Json j;
  j["schema"] = kRuleSchema;
  j["kind"] = std::string(rule_kind_name(rule.kind()));
  if (rule.label() != rule_kind_name(rule.kind())) j["label"] = rule.label();
  std::visit(Overloaded{
                 [&](const RelativeFairParams& p) { weight_set_to(j, p.weights); },
                 [&](const RelativeUtilitarianParams& p) { j["weight"] = p.weight.values(); },
                 [&](const VariationalParams& p) {
                   Json list = Json::array();
                   for (const auto& c : p.cost.candidates()) {
                     list.push_back(Json{{"weight", c.weight.values()}, {"penalty", c.penalty}});
                   }
                   j["candidates"] = list;
                 },
                 [&](const MaxWeightParams& p) { weight_set_to(j, p.weights); },
                 [&](const BeliefWeightedParams& p) {
                   j["reference_event"] = p.selector == ReferenceEventSelector::kDesignated
                                              ? "designated"
                                              : "first_cell";
                   j["offset"] = p.offset;
                 },
                 [](const auto&) {},
             },
             rule.params());
  if (rule.strict_threshold() != kStrictThreshold) j["strict_threshold"] = rule.strict_threshold();
  return j;
}

GeneratorConfig parse_generator_config(const Json& j) {
  check_schema(j, kGeneratorSchema);
  GeneratorConfig c;
  auto size = [&](const char* key, std::size_t& out) {
    if (auto it = j.find(key); it != j.end()) out = as<std::size_t>(*it, key);
  };
  size("n", c.n);
  size("outcomes", c.outcomes);
  size("cells", c.cells);
  size("trials", c.trials);
  if (auto it = j.find("seed"); it != j.end()) c.seed = as<std::uint64_t>(*it, "seed");
  if (auto it = j.find("values"); it != j.end()) {
    auto m = value_mode_from_name(as<std::string>(*it, "values"));
    if (!m) parse_error("values must be 'iid' or 'common_values'");
    c.values = *m;
  }
  if (auto it = j.find("beliefs"); it != j.end()) {
    auto m = belief_mode_from_name(as<std::string>(*it, "beliefs"));
    if (!m) parse_error("beliefs must be 'iid', 'common_beliefs' or 'designed_event'");
    c.beliefs = *m;
  }
  if (auto it = j.find("inject_golden"); it != j.end()) {
    c.inject_golden = as<bool>(*it, "inject_golden");
  }
  validate_config(c);
  return c;
}

Json generator_config_to_json(const GeneratorConfig& c) {
  Json j;
  j["schema"] = kGeneratorSchema;
  j["n"] = c.n;
  j["outcomes"] = c.outcomes;
  j["cells"] = c.cells;
  j["values"] = std::string(value_mode_name(c.values));
  j["beliefs"] = std::string(belief_mode_name(c.beliefs));
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["inject_golden"] = c.inject_golden;
  return j;
}

Witness parse_witness(const Json& j) {
  Witness w;
  for (const auto& p : field(j, "problems")) w.problems.push_back(parse_problem(p).problem);
  const Json& acts = field(j, "acts");
  const Json& outcomes = field(j, "outcomes");
  if ((!acts.empty() || !outcomes.empty()) && w.problems.empty()) {
    parse_error("acts and outcomes need a problem");
  }
  for (const auto& a : acts) w.acts.push_back(act_from_json(w.problems.front(), a, "witness"));
  for (const auto& o : outcomes) {
    w.outcomes.push_back(w.problems.front().outcome_index(as<std::string>(o, "outcomes")));
  }
  w.scalars = numbers(field(j, "scalars"), "scalars");
  w.indices = as<std::vector<std::size_t>>(field(j, "indices"), "indices");
  return w;
}

Json witness_to_json(const Witness& w) {
  Json j;
  Json problems = Json::array();
  for (const auto& p : w.problems) problems.push_back(problem_to_json(p));
  j["problems"] = problems;
  Json acts = Json::array();
  for (const auto& a : w.acts) acts.push_back(act_to_json(w.problems.front(), a));
  j["acts"] = acts;
  Json outcomes = Json::array();
  for (std::size_t o : w.outcomes) outcomes.push_back(w.problems.front().outcomes().at(o));
  j["outcomes"] = outcomes;
  j["scalars"] = w.scalars;
  j["indices"] = w.indices;
  return j;
}

AxiomReport parse_report(const Json& j) {
  AxiomReport r;
  const auto name = as<std::string>(field(j, "axiom"), "axiom");
  auto axiom = axiom_from_name(name);
  if (!axiom) parse_error("unknown axiom '" + name + "'");
  r.axiom = *axiom;
  r.rule = as<std::string>(field(j, "rule"), "rule");
  const auto status = as<std::string>(field(j, "status"), "status");
  if (status == verdict_name(VerdictStatus::kViolated)) {
    r.status = VerdictStatus::kViolated;
  } else if (status == verdict_name(VerdictStatus::kNoViolationFound)) {
    r.status = VerdictStatus::kNoViolationFound;
  } else {
    parse_error("unknown status '" + status + "'");
  }
  r.trials = as<std::size_t>(field(j, "trials"), "trials");
  r.golden = as<std::size_t>(field(j, "golden"), "golden");
  r.config = parse_generator_config(field(j, "config"));
  if (auto it = j.find("witness"); it != j.end() && !it->is_null()) r.witness = parse_witness(*it);
  if (auto it = j.find("source"); it != j.end()) r.source = as<std::string>(*it, "source");
  if (auto it = j.find("detail"); it != j.end()) r.detail = as<std::string>(*it, "detail");
  return r;
}

Json report_to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = std::string(axiom_name(r.axiom));
  j["rule"] = r.rule;
  j["status"] = std::string(verdict_name(r.status));
  j["trials"] = r.trials;
  j["golden"] = r.golden;
  if (r.status == VerdictStatus::kViolated) {
    j["source"] = r.source;
    j["detail"] = r.detail;
  }
  j["config"] = generator_config_to_json(r.config);
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  return j;
}

Json reports_to_json(const AggregationRule& rule, const std::vector<AxiomReport>& reports) {
  Json j;
  j["schema"] = kReportSchema;
  j["rule"] = rule_to_json(rule);
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  j["reports"] = list;
  return j;
}

Json axiom_matrix_to_json(const std::vector<AxiomMatrixRow>& rows,
                          const std::vector<Axiom>& axioms, const GeneratorConfig& config) {
  Json j;
  j["schema"] = kMatrixSchema;
  j["config"] = generator_config_to_json(config);
  Json names = Json::array();
  for (Axiom a : axioms) names.push_back(std::string(axiom_name(a)));
  j["axioms"] = names;
  Json out = Json::array();
  for (const auto& row : rows) {
    Json cells = Json::object();
    for (const auto& r : row.reports) {
      cells[std::string(axiom_name(r.axiom))] =
          Json{{"status", std::string(verdict_name(r.status))}, {"trials", r.trials}};
    }
    out.push_back(Json{{"rule", row.rule}, {"verdicts", cells}});
  }
  j["rows"] = out;
  return j;
}

Json property_matrix_to_json(const std::vector<PropertyRow>& rows, std::size_t samples,
                             std::uint64_t seed) {
  Json j;
  j["schema"] = kPropertySchema;
  j["samples"] = samples;
  j["seed"] = seed;
  Json names = Json::array();
  for (auto p : all_welfare_properties()) names.push_back(std::string(property_name(p)));
  j["properties"] = names;
  Json out = Json::array();
  for (const auto& row : rows) {
    Json verdicts = Json::object();
    for (const auto& v : row.verdicts) {
      Json cell;
      cell["status"] = std::string(verdict_name(v.status));
      cell["samples"] = v.samples;
      if (v.status == VerdictStatus::kViolated) {
        cell["points"] = v.points;
        cell["scalar"] = v.scalar;
      }
      verdicts[std::string(property_name(v.property))] = cell;
    }
    out.push_back(Json{{"name", row.name}, {"verdicts", verdicts}});
  }
  j["rows"] = out;
  return j;
}

Json recovered_to_json(const RecoveredWeightSet& rec) {
  Json j;
  j["schema"] = kRecoverySchema;
  j["dimension"] = rec.dimension;
  j["grid_size"] = rec.grid_size;
  j["refinement_cuts"] = rec.refinement_cuts;
  j["vertices"] = rec.has_vertices ? Json(rec.vertices) : Json(nullptr);
  Json hs = Json::array();
  for (const auto& h : rec.halfspaces) {
    hs.push_back(Json{{"direction", h.direction}, {"bound", h.bound}});
  }
  j["halfspaces"] = hs;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  out << dump(j);
}

}  // namespace fairagg
