#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "szk/basis.h"

namespace szk {

enum class OperatorKind { RL, L, both };
enum class BetaRule { n, n_squared };

/// What a table cell holds: the operator value, the value minus x (the
/// convention of the published convergence tables), or |value - f(x)|.
enum class Quantity { value, value_minus_x, abs_error };

/// alpha as a function of n and beta_n.
struct AlphaRule {
  enum class Kind { fixed, one_over_beta, one_over_expr };
  Kind kind = Kind::fixed;
  double value = 0.0;     // fixed
  std::string expr;       // one_over_expr: n, n+1, n^2-n+1, n^2, n^2+1/2, n^2+n+1, (n+1)^2, n^2+1
  std::string label_text; // column label

  double alpha(int n, double beta) const;
  const std::string& label() const { return label_text; }

  static AlphaRule fixed(double value);
  static AlphaRule reciprocal(double k);
  static AlphaRule one_over_beta();
  static AlphaRule one_over(const std::string& expr);
};

/// Equally spaced points start, start + step, ..., stop.
struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;

  std::vector<double> points() const;
};

struct ExperimentConfig {
  OperatorKind op = OperatorKind::RL;
  std::string function = "exp";
  /// One rule, or a ladder of rules that become table columns.
  std::vector<AlphaRule> alpha_rules;
  bool alpha_ladder = false;
  BetaRule beta_rule = BetaRule::n;
  double phi = 0.0;
  double psi = 0.0;
  std::vector<double> xs;
  std::vector<int> ns;
  TruncationPolicy truncation;
  std::string output;
  Quantity quantity = Quantity::value;
  std::optional<GridSpec> grid;

  double beta(int n) const;
  /// Throws ConfigError.
  void validate() const;
};

/// Parse JSON text; unknown keys and malformed values raise ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

struct TableResult {
  std::string row_header;
  std::string col_header;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  /// Absent cells (alpha beta > 1 or a failed evaluation) are nullopt.
  std::vector<std::vector<std::optional<double>>> values;
  std::optional<std::vector<std::vector<std::optional<double>>>> reference;

  std::optional<double> abs_dev(std::size_t i, std::size_t j) const;
  /// Largest deviation over cells where both value and reference exist.
  double max_abs_dev() const;
};

/// Rows are x and columns n for a single alpha rule; with an alpha ladder
/// rows are n and columns alpha (single x).
TableResult run_table(const ExperimentConfig& config);

/// The published convergence tables, 1..5, as printed ('-' cells absent).
const std::vector<std::vector<std::optional<double>>>& reference_table(int k);

/// Built-in configurations that reproduce tables 1..5.
ExperimentConfig table_config(int k);

/// Attach reference values; ConfigError on a shape mismatch.
void attach_reference(TableResult& result, int k);

/// row_label,col_label,value,reference,abs_dev
void write_table(const TableResult& result, std::ostream& out, char sep = ',');

/// Header x, f, then RL_n=... columns and L_n=... columns.
void emit_curves(const ExperimentConfig& config, std::ostream& out, char sep = ',');

/// Text used for numbers in CSV output.
std::string format_number(double v);

struct SuiteOptions {
  /// Relative perturbation applied to the closed-form Phi_2 in the moments
  /// suite; nonzero values exist to show the suite catches a bad formula.
  double phi2_mutation = 0.0;
  unsigned seed = 2024;
};

struct CheckRecord {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  /// "pass", "fail" or "info" (recorded, never fails the suite).
  std::string status;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRecord> records;

  bool ok() const;
  std::size_t failures() const;
};

/// name in {moments, bounds, asymptotics, tables, all}; ConfigError otherwise.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// check,lhs,rhs,status
void write_suite(const SuiteResult& result, std::ostream& out, char sep = ',');

}  // namespace szk
