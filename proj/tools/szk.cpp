// Command-line front end: evaluations, moment reports, tables, curves and suites.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "szk/bounds.h"
#include "szk/errors.h"
#include "szk/functions.h"
#include "szk/harness.h"
#include "szk/moments.h"
#include "szk/operators.h"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 2;
constexpr int kConfig = 3;
constexpr int kTruncation = 4;

struct Common {
  double alpha = 0.02;
  double phi = 0.0;
  double psi = 0.0;
  double beta = 50.0;
  double x = 0.5;
  std::string function = "exp";
  double mass_tol = 1e-12;
  std::size_t max_terms = 1'000'000;
  std::string out;
  std::string format = "csv";

  szk::OperatorParams params() const {
    szk::OperatorParams p{alpha, phi, psi, beta};
    p.validate();
    return p;
  }
  szk::TruncationPolicy policy() const {
    szk::TruncationPolicy t;
    t.mass_tol = mass_tol;
    t.max_terms = max_terms;
    t.validate();
    return t;
  }
  char sep() const { return format == "tsv" ? '\t' : ','; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--alpha", c.alpha, "Polya parameter alpha >= 0");
  cmd->add_option("--phi", c.phi, "shift phi, 0 <= phi <= psi");
  cmd->add_option("--psi", c.psi, "Stancu scale psi >= 0");
  cmd->add_option("--beta", c.beta, "beta_n > 0");
  cmd->add_option("--x", c.x, "evaluation point x >= 0");
  cmd->add_option("--function", c.function, "built-in function name");
  cmd->add_option("--mass-tol", c.mass_tol, "truncation mass tolerance");
  cmd->add_option("--max-terms", c.max_terms, "truncation term cap");
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_option("--format", c.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw szk::ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string opt(const std::optional<double>& v) { return v ? szk::format_number(*v) : ""; }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw szk::ConfigError("cannot parse '" + item + "' as a number");
    }
  }
  if (out.empty()) throw szk::ConfigError("empty list");
  return out;
}

int write_report(const szk::BoundReport& r, std::ostream& os, char sep) {
  os << "key" << sep << "value\n";
  os << "lhs" << sep << szk::format_number(r.lhs) << '\n';
  os << "rhs" << sep << szk::format_number(r.rhs) << '\n';
  for (const auto& [k, v] : r.terms) os << k << sep << szk::format_number(v) << '\n';
  os << "satisfied" << sep << (r.satisfied ? 1 : 0) << '\n';
  return r.satisfied ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stancu-type Polya-Kantorovich operators: evaluation, tables and checks"};
  app.require_subcommand(1);
  Common c;

  auto* eval = app.add_subcommand("eval", "evaluate RL(f; x)");
  add_common(eval, c);

  auto* moments = app.add_subcommand("moments", "raw and central moments, closed form against the series");
  add_common(moments, c);

  std::string config_path;
  std::string reference = "none";
  auto* table = app.add_subcommand("table", "reproduce a table from a config");
  add_common(table, c);
  table->add_option("--config", config_path, "JSON config")->required();
  table->add_option("--reference", reference, "embedded reference table")
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "none"}));

  auto* curves = app.add_subcommand("curves", "emit curve data over an x grid");
  add_common(curves, c);
  curves->add_option("--config", config_path, "JSON config")->required();

  std::string suite = "all";
  szk::SuiteOptions suite_opts;
  auto* bounds = app.add_subcommand("bounds", "run an invariant suite");
  add_common(bounds, c);
  bounds->add_option("--suite", suite, "moments, bounds, asymptotics, tables or all")
      ->check(CLI::IsMember({"moments", "bounds", "asymptotics", "tables", "all"}));
  bounds->add_option("--phi2-mutation", suite_opts.phi2_mutation)->group("");
  bounds->add_option("--seed", suite_opts.seed, "random seed for the moments suite");

  std::string betas_text = "100,1000,10000";
  auto* asymptotic = app.add_subcommand("asymptotic", "beta (RL f - f)(x) along alpha = 1/beta");
  add_common(asymptotic, c);
  asymptotic->add_option("--betas", betas_text, "comma-separated beta ladder");

  std::string second = "exp";
  auto* gruss = app.add_subcommand("gruss", "beta (RL(fg) - RL f RL g)(x) along alpha = 1/beta");
  add_common(gruss, c);
  gruss->add_option("--function2", second, "second built-in function");
  gruss->add_option("--betas", betas_text, "comma-separated beta ladder");

  auto* bv = app.add_subcommand("bv", "rate bound for functions with derivative of bounded variation");
  add_common(bv, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    Output out(c.out);
    std::ostream& os = out.stream();
    const char sep = c.sep();

    if (*eval) {
      const double v = szk::apply(c.params(), szk::builtin(c.function), c.x, c.policy());
      os << "alpha" << sep << "phi" << sep << "psi" << sep << "beta" << sep << "x" << sep << "function" << sep
         << "value\n";
      os << szk::format_number(c.alpha) << sep << szk::format_number(c.phi) << sep << szk::format_number(c.psi) << sep
         << szk::format_number(c.beta) << sep << szk::format_number(c.x) << sep << c.function << sep
         << szk::format_number(v) << '\n';
      return kOk;
    }
    if (*moments) {
      const auto p = c.params();
      os << "kind" << sep << "order" << sep << "closed_form" << sep << "oracle" << sep << "abs_discrepancy\n";
      for (int r = 0; r <= 3; ++r) {
        const auto m = szk::moment_report(p, c.x, szk::MomentKind::raw, r);
        os << "raw" << sep << r << sep << opt(m.closed_form) << sep << szk::format_number(m.oracle) << sep
           << opt(m.abs_discrepancy) << '\n';
      }
      for (int r = 1; r <= 6; ++r) {
        const auto m = szk::moment_report(p, c.x, szk::MomentKind::central, r);
        os << "central" << sep << r << sep << opt(m.closed_form) << sep << szk::format_number(m.oracle) << sep
           << opt(m.abs_discrepancy) << '\n';
      }
      return kOk;
    }
    if (*table) {
      auto cfg = szk::load_config(config_path);
      cfg.truncation = c.policy();
      auto result = szk::run_table(cfg);
      if (reference != "none") szk::attach_reference(result, std::stoi(reference));
      szk::write_table(result, os, sep);
      if (reference != "none" && reference != "5" && result.max_abs_dev() > 1e-3) {
        std::cerr << "max deviation " << szk::format_number(result.max_abs_dev()) << " exceeds 1e-3\n";
        return kViolation;
      }
      return kOk;
    }
    if (*curves) {
      auto cfg = szk::load_config(config_path);
      cfg.truncation = c.policy();
      szk::emit_curves(cfg, os, sep);
      return kOk;
    }
    if (*bounds) {
      const auto result = szk::run_suite(suite, suite_opts);
      szk::write_suite(result, os, sep);
      if (!result.ok()) {
        std::cerr << result.failures() << " check(s) failed\n";
        return kViolation;
      }
      return kOk;
    }
    if (*asymptotic) {
      const auto r = szk::voronovskaya_residual(c.phi, c.psi, szk::builtin(c.function), c.x, parse_list(betas_text));
      os << "beta" << sep << "residual" << sep << "l_consistent" << sep << "l_paper" << sep << "approached\n";
      for (const auto& [beta, v] : r.residuals) {
        os << szk::format_number(beta) << sep << szk::format_number(v) << sep << szk::format_number(r.l_consistent)
           << sep << szk::format_number(r.l_paper) << sep << szk::to_string(r.approached) << '\n';
      }
      return kOk;
    }
    if (*gruss) {
      const auto r = szk::gruss_residual(c.phi, c.psi, szk::builtin(c.function), szk::builtin(second), c.x,
                                         parse_list(betas_text));
      os << "beta" << sep << "residual" << sep << "limit\n";
      for (const auto& [beta, v] : r.residuals) {
        os << szk::format_number(beta) << sep << szk::format_number(v) << sep << szk::format_number(r.limit) << '\n';
      }
      return kOk;
    }
    if (*bv) {
      const auto r = szk::bv_rate_bound(c.params(), szk::builtin(c.function), c.x, szk::second_moment_constant());
      return write_report(r, os, sep);
    }
  } catch (const szk::TruncationFailure& e) {
    std::cerr << "truncation failure: " << e.what() << '\n';
    return kTruncation;
  } catch (const szk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}
