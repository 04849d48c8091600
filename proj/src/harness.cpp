#include "szk/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "szk/errors.h"
#include "szk/functions.h"
#include "szk/operators.h"

namespace szk {

using json = nlohmann::json;

namespace {

const std::map<std::string, double (*)(double)>& expressions() {
  static const std::map<std::string, double (*)(double)> table = {
      {"n", [](double n) { return n; }},
      {"n+1", [](double n) { return n + 1.0; }},
      {"n^2-n+1", [](double n) { return n * n - n + 1.0; }},
      {"n^2", [](double n) { return n * n; }},
      {"n^2+1/2", [](double n) { return n * n + 0.5; }},
      {"n^2+n+1", [](double n) { return n * n + n + 1.0; }},
      {"(n+1)^2", [](double n) { return (n + 1.0) * (n + 1.0); }},
      {"n^2+1", [](double n) { return n * n + 1.0; }},
  };
  return table;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

AlphaRule AlphaRule::fixed(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) throw ConfigError("alpha_rule: fixed value must be finite and >= 0");
  return {Kind::fixed, value, "", format_number(value)};
}

AlphaRule AlphaRule::reciprocal(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("alpha_rule: reciprocal must be finite and > 0");
  return {Kind::fixed, 1.0 / k, "", "1/" + format_number(k)};
}

AlphaRule AlphaRule::one_over_beta() { return {Kind::one_over_beta, 0.0, "", "1/beta"}; }

AlphaRule AlphaRule::one_over(const std::string& expr) {
  if (!expressions().count(expr)) throw ConfigError("alpha_rule: unknown expression '" + expr + "'");
  return {Kind::one_over_expr, 0.0, expr, expr == "n" ? "1/n" : "1/(" + expr + ")"};
}

double AlphaRule::alpha(int n, double beta) const {
  switch (kind) {
    case Kind::fixed:
      return value;
    case Kind::one_over_beta:
      return 1.0 / beta;
    case Kind::one_over_expr:
      return 1.0 / expressions().at(expr)(static_cast<double>(n));
  }
  return value;
}

std::vector<double> GridSpec::points() const {
  const auto count = static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
  std::vector<double> pts(count);
  for (std::size_t k = 0; k < count; ++k) pts[k] = start + static_cast<double>(k) * step;
  return pts;
}

double ExperimentConfig::beta(int n) const {
  const double v = static_cast<double>(n);
  return beta_rule == BetaRule::n ? v : v * v;
}

void ExperimentConfig::validate() const {
  if (ns.empty()) throw ConfigError("config: ns must be nonempty");
  for (int n : ns) {
    if (n < 1) throw ConfigError("config: every n must be >= 1");
  }
  if (xs.empty() && !grid) throw ConfigError("config: xs must be nonempty");
  for (double x : xs) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw ConfigError("config: every x must be finite and >= 0");
  }
  if (alpha_rules.empty()) throw ConfigError("config: alpha_rule is required");
  if (alpha_ladder && xs.size() != 1) throw ConfigError("config: an alpha ladder needs exactly one x");
  if (!(phi >= 0.0) || !(psi >= 0.0) || phi > psi) throw ConfigError("config: need 0 <= phi <= psi");
  try {
    truncation.validate();
    builtin(function);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (grid) {
    if (!(grid->step > 0.0) || !(grid->stop >= grid->start) || !(grid->start >= 0.0)) {
      throw ConfigError("config: grid needs 0 <= start <= stop and step > 0");
    }
  }
}

namespace {

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config: field '") + key + "' has the wrong type");
  }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; })) {
      throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

AlphaRule parse_alpha(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "one_over_beta") return AlphaRule::one_over_beta();
    throw ConfigError("alpha_rule: unknown rule '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || j.size() != 1) throw ConfigError("alpha_rule: expected a string or a single-key object");
  const std::string key = j.begin().key();
  const json& val = j.begin().value();
  if (key == "fixed") return AlphaRule::fixed(get_as<double>(val, "alpha_rule.fixed"));
  if (key == "reciprocal") return AlphaRule::reciprocal(get_as<double>(val, "alpha_rule.reciprocal"));
  if (key == "one_over") return AlphaRule::one_over(get_as<std::string>(val, "alpha_rule.one_over"));
  throw ConfigError("alpha_rule: unknown rule '" + key + "'");
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(j,
                 {"operator", "function", "alpha_rule", "beta_rule", "phi", "psi", "xs", "ns", "truncation", "output",
                  "quantity", "grid"},
                 "config");

  ExperimentConfig c;
  if (j.contains("operator")) {
    const auto op = get_as<std::string>(j["operator"], "operator");
    if (op == "RL") {
      c.op = OperatorKind::RL;
    } else if (op == "L") {
      c.op = OperatorKind::L;
    } else if (op == "both") {
      c.op = OperatorKind::both;
    } else {
      throw ConfigError("config: operator must be RL, L or both");
    }
  }
  if (j.contains("function")) c.function = get_as<std::string>(j["function"], "function");
  if (!j.contains("alpha_rule")) throw ConfigError("config: alpha_rule is required");
  if (j["alpha_rule"].is_array()) {
    c.alpha_ladder = true;
    for (const auto& item : j["alpha_rule"]) c.alpha_rules.push_back(parse_alpha(item));
  } else {
    c.alpha_rules.push_back(parse_alpha(j["alpha_rule"]));
  }
  if (j.contains("beta_rule")) {
    const auto b = get_as<std::string>(j["beta_rule"], "beta_rule");
    if (b == "n") {
      c.beta_rule = BetaRule::n;
    } else if (b == "n^2") {
      c.beta_rule = BetaRule::n_squared;
    } else {
      throw ConfigError("config: beta_rule must be n or n^2");
    }
  }
  if (j.contains("phi")) c.phi = get_as<double>(j["phi"], "phi");
  if (j.contains("psi")) c.psi = get_as<double>(j["psi"], "psi");
  if (j.contains("xs")) c.xs = get_as<std::vector<double>>(j["xs"], "xs");
  if (j.contains("ns")) c.ns = get_as<std::vector<int>>(j["ns"], "ns");
  if (j.contains("truncation")) {
    const auto& t = j["truncation"];
    if (!t.is_object()) throw ConfigError("config: truncation must be an object");
    reject_unknown(t, {"mass_tol", "max_terms", "tail_guard"}, "truncation");
    if (t.contains("mass_tol")) c.truncation.mass_tol = get_as<double>(t["mass_tol"], "truncation.mass_tol");
    if (t.contains("max_terms")) c.truncation.max_terms = get_as<std::size_t>(t["max_terms"], "truncation.max_terms");
    if (t.contains("tail_guard")) c.truncation.tail_guard = get_as<std::size_t>(t["tail_guard"], "truncation.tail_guard");
  }
  if (j.contains("output")) c.output = get_as<std::string>(j["output"], "output");
  if (j.contains("quantity")) {
    const auto q = get_as<std::string>(j["quantity"], "quantity");
    if (q == "value") {
      c.quantity = Quantity::value;
    } else if (q == "value_minus_x") {
      c.quantity = Quantity::value_minus_x;
    } else if (q == "abs_error") {
      c.quantity = Quantity::abs_error;
    } else {
      throw ConfigError("config: quantity must be value, value_minus_x or abs_error");
    }
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object()) throw ConfigError("config: grid must be an object");
    reject_unknown(g, {"start", "stop", "step"}, "grid");
    GridSpec spec;
    if (!g.contains("stop") || !g.contains("step")) throw ConfigError("config: grid needs stop and step");
    if (g.contains("start")) spec.start = get_as<double>(g["start"], "grid.start");
    spec.stop = get_as<double>(g["stop"], "grid.stop");
    spec.step = get_as<double>(g["step"], "grid.step");
    c.grid = spec;
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::optional<double> TableResult::abs_dev(std::size_t i, std::size_t j) const {
  if (!reference) return std::nullopt;
  const auto& v = values.at(i).at(j);
  const auto& r = reference->at(i).at(j);
  if (!v || !r) return std::nullopt;
  return std::abs(*v - *r);
}

double TableResult::max_abs_dev() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values[i].size(); ++j) {
      if (const auto d = abs_dev(i, j)) worst = std::max(worst, *d);
    }
  }
  return worst;
}

namespace {

std::optional<double> table_cell(const ExperimentConfig& c, const FunctionSpec& f, int n, const AlphaRule& rule,
                                 double x) {
  const double beta = c.beta(n);
  const OperatorParams p{rule.alpha(n, beta), c.op == OperatorKind::L ? 0.0 : c.phi,
                         c.op == OperatorKind::L ? 0.0 : c.psi, beta};
  if (!p.asymptotic_regime()) return std::nullopt;
  try {
    const double v = apply(p, f, x, c.truncation);
    switch (c.quantity) {
      case Quantity::value:
        return v;
      case Quantity::value_minus_x:
        return v - x;
      case Quantity::abs_error:
        return std::abs(v - f.eval(x));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

TableResult run_table(const ExperimentConfig& config) {
  config.validate();
  if (config.op == OperatorKind::both) throw ConfigError("table: operator must be RL or L");
  if (config.xs.empty()) throw ConfigError("table: xs must be nonempty");
  const FunctionSpec f = builtin(config.function);
  TableResult t;
  if (config.alpha_ladder) {
    t.row_header = "n";
    t.col_header = "alpha";
    for (int n : config.ns) t.row_labels.push_back(std::to_string(n));
    for (const auto& r : config.alpha_rules) t.col_labels.push_back(r.label());
    for (int n : config.ns) {
      auto& row = t.values.emplace_back();
      for (const auto& r : config.alpha_rules) row.push_back(table_cell(config, f, n, r, config.xs.front()));
    }
  } else {
    t.row_header = "x";
    t.col_header = "n";
    for (double x : config.xs) t.row_labels.push_back(format_number(x));
    for (int n : config.ns) t.col_labels.push_back(std::to_string(n));
    for (double x : config.xs) {
      auto& row = t.values.emplace_back();
      for (int n : config.ns) row.push_back(table_cell(config, f, n, config.alpha_rules.front(), x));
    }
  }
  return t;
}

const std::vector<std::vector<std::optional<double>>>& reference_table(int k) {
  using Row = std::vector<std::optional<double>>;
  constexpr std::nullopt_t no = std::nullopt;
  static const std::vector<Row> t1 = {
      {1.11666, 1.06464, 1.03632, 1.02651, 1.02153, 1.01852},
      {1.26644, 1.21685, 1.18838, 1.17828, 1.17311, 1.16997},
      {1.66465, 1.63087, 1.60865, 1.60032, 1.59597, 1.5933},
      {1.81521, 1.78871, 1.7697, 1.76235, 1.75847, 1.75608},
  };
  static const std::vector<Row> t2 = {
      {1.13814, 1.06966, 1.03736, 1.02687, 1.02168, 1.01858},
      {1.43749, 1.2894, 1.22141, 1.19958, 1.18881, 1.1824},
      {2.13185, 1.83752, 1.70538, 1.66335, 1.6427, 1.63042},
      {2.39098, 2.04452, 1.8898, 1.84069, 1.81658, 1.80226},
  };
  static const std::vector<Row> t3 = {
      {1.12752, 1.12115, 1.11828, 1.11737, 1.11666, 1.11613, 1.11595, 1.11587, 1.11581, 1.11571},
      {no, 1.06931, 1.06633, 1.06539, 1.06464, 1.0641, 1.06391, 1.06382, 1.06377, 1.06366},
      {no, no, 1.04765, 1.0467, 1.04595, 1.04539, 1.04521, 1.04512, 1.04506, 1.04495},
      {no, no, 1.03804, 1.03708, 1.03632, 1.03577, 1.03558, 1.03549, 1.03544, 1.03533},
  };
  static const std::vector<Row> t4 = {
      {1.15457, 1.14482, 1.14054, 1.13919, 1.13814, 1.13737, 1.13711, 1.13698, 1.13691, 1.13675},
      {no, 1.07532, 1.0717, 1.07055, 1.06966, 1.069, 1.06878, 1.06867, 1.0686, 1.06847},
      {no, no, 1.04992, 1.04884, 1.04799, 1.04736, 1.04716, 1.04705, 1.04699, 1.04687},
      {no, no, 1.04687, 1.03819, 1.03736, 1.03675, 1.03655, 1.03645, 1.03639, 1.03627},
  };
  static const std::vector<Row> t5 = {
      {0.488391, 0.483345, 0.418235, 0.609517, 0.417913, 0.417613, 0.417357},
      {0.422315, 0.420564, 0.380506, 0.465024, 0.380438, 0.380372, 0.380313},
      {0.405894, 0.404689, 0.371123, 0.394481, 0.371084, 0.371046, 0.371012},
      {0.373167, 0.372742, 0.352398, 0.371085, 0.352389, 0.352381, 0.352373},
      {0.348721, 0.348617, 0.338375, 0.359399, 0.338374, 0.338373, 0.338372},
      {0.33653, 0.336505, 0.331368, 0.352389, 0.331368, 0.331367, 0.331367},
  };
  switch (k) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
    case 4:
      return t4;
    case 5:
      return t5;
    default:
      throw ConfigError("reference table must be 1..5, got " + std::to_string(k));
  }
}

ExperimentConfig table_config(int k) {
  ExperimentConfig c;
  c.function = "exp";
  c.beta_rule = BetaRule::n;
  c.phi = 0.1;
  c.psi = 0.9;
  c.quantity = Quantity::value_minus_x;
  switch (k) {
    case 1:
    case 2:
      c.op = k == 1 ? OperatorKind::RL : OperatorKind::L;
      c.alpha_rules = {AlphaRule::reciprocal(50)};
      c.xs = {0.1, 0.5, 0.9, 1.0};
      c.ns = {5, 10, 20, 30, 40, 50};
      break;
    case 3:
    case 4:
      c.op = k == 3 ? OperatorKind::RL : OperatorKind::L;
      c.alpha_ladder = true;
      for (double d : {5, 10, 20, 30, 50, 100, 150, 200, 250, 500}) c.alpha_rules.push_back(AlphaRule::reciprocal(d));
      c.xs = {0.1};
      c.ns = {5, 10, 15, 20};
      break;
    case 5:
      c.op = OperatorKind::RL;
      c.alpha_ladder = true;
      for (const char* e : {"n", "n+1", "n^2-n+1", "n^2", "n^2+1/2", "n^2+n+1", "(n+1)^2"}) {
        c.alpha_rules.push_back(AlphaRule::one_over(e));
      }
      c.xs = {0.5};
      c.ns = {15, 25, 30, 50, 100, 200};
      c.quantity = Quantity::abs_error;
      break;
    default:
      throw ConfigError("table must be 1..5, got " + std::to_string(k));
  }
  if (c.op == OperatorKind::L) {
    c.phi = 0.0;
    c.psi = 0.0;
  }
  return c;
}

void attach_reference(TableResult& result, int k) {
  const auto& ref = reference_table(k);
  bool match = ref.size() == result.values.size();
  for (std::size_t i = 0; match && i < ref.size(); ++i) match = ref[i].size() == result.values[i].size();
  if (!match) throw ConfigError("reference table " + std::to_string(k) + " does not match the table shape");
  result.reference = ref;
}

void write_table(const TableResult& result, std::ostream& out, char sep) {
  out << "row_label" << sep << "col_label" << sep << "value" << sep << "reference" << sep << "abs_dev\n";
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    for (std::size_t j = 0; j < result.values[i].size(); ++j) {
      const auto& v = result.values[i][j];
      out << result.row_labels[i] << sep << result.col_labels[j] << sep << (v ? format_number(*v) : "") << sep;
      if (result.reference) {
        const auto& r = (*result.reference)[i][j];
        out << (r ? format_number(*r) : "");
      }
      out << sep;
      if (const auto d = result.abs_dev(i, j)) out << format_number(*d);
      out << '\n';
    }
  }
}

void emit_curves(const ExperimentConfig& config, std::ostream& out, char sep) {
  config.validate();
  if (config.alpha_ladder) throw ConfigError("curves: alpha_rule must be a single rule");
  const FunctionSpec f = builtin(config.function);
  const std::vector<double> xs = config.grid ? config.grid->points() : config.xs;
  const AlphaRule& rule = config.alpha_rules.front();

  struct Column {
    OperatorParams params;
  };
  std::vector<Column> cols;
  out << "x" << sep << "f";
  for (OperatorKind kind : {OperatorKind::RL, OperatorKind::L}) {
    if (config.op != OperatorKind::both && config.op != kind) continue;
    for (int n : config.ns) {
      const double beta = config.beta(n);
      const bool shifted = kind == OperatorKind::RL;
      cols.push_back({{rule.alpha(n, beta), shifted ? config.phi : 0.0, shifted ? config.psi : 0.0, beta}});
      out << sep << (shifted ? "RL_n=" : "L_n=") << n;
    }
  }
  out << '\n';
  for (double x : xs) {
    out << format_number(x) << sep << format_number(f.eval(x));
    for (const auto& c : cols) out << sep << format_number(apply(c.params, f, x, config.truncation));
    out << '\n';
  }
}

}  // namespace szk
