#include "qsphere/expr.hpp"
#include "qsphere/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

int run_expression(const std::string& text, bool evaluate) {
  using namespace qsphere::expr;
  try {
    const Expr tree = parse(text);
    if (!evaluate) {
      std::cout << render_tree(*tree) << '\n';
      return 0;
    }
    std::cout << render(qsphere::expr::evaluate(*tree)) << '\n';
    return 0;
  } catch (const ParseError& e) {
    std::cerr << text << '\n' << std::string(e.position(), ' ') << "^\n" << e.what() << '\n';
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << '\n';
  }
  return kUsage;
}

int run_suite(const std::string& suite, const qsphere::verify::Options& options, const std::string& json_path,
              bool quiet) {
  namespace v = qsphere::verify;
  v::Report report;
  try {
    report = v::run_suite(suite, options);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  if (!json_path.empty()) {
    const std::string json = v::to_json(report);
    if (json_path == "-") {
      std::cout << json << '\n';
    } else {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "cannot write " << json_path << '\n';
        return kUsage;
      }
      out << json << '\n';
    }
  }
  if (!quiet && json_path != "-") std::cout << v::to_text(report);
  return report.passed() ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the quantum group SL_q(2) and the standard q-sphere"};
  app.require_subcommand(0, 1);

  std::string suite;
  std::string json_path;
  std::string q_spec;
  bool quiet = false;
  qsphere::verify::Options options;
  int sample = 0;

  app.add_option("--suite", suite, "Verification suite to run")
      ->check(CLI::IsMember(qsphere::verify::suite_names()));
  app.add_option("--max-n", options.max_n, "Largest n for the bwb suite")->check(CLI::Range(0, 64));
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  app.add_option("--sample", sample, "Sample size for randomized checks")->check(CLI::PositiveNumber);
  app.add_option("--q-spec", q_spec, "Rational square q for numeric property checks");
  app.add_option("--json", json_path, "Write the JSON report to PATH ('-' for stdout)");
  app.add_flag("--quiet", quiet, "Suppress the text report");

  std::string text;
  CLI::App* parse_cmd = app.add_subcommand("parse", "Print the syntax tree of an expression");
  parse_cmd->add_option("expr", text, "Expression")->required();
  CLI::App* eval_cmd = app.add_subcommand("eval", "Print the normal form of an expression");
  eval_cmd->add_option("expr", text, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (parse_cmd->parsed()) return run_expression(text, false);
  if (eval_cmd->parsed()) return run_expression(text, true);

  if (suite.empty()) {
    std::cerr << "nothing to do: give --suite NAME or a subcommand\n" << app.help();
    return kUsage;
  }
  if (sample > 0) options.sample = sample;
  if (!q_spec.empty()) {
    try {
      options.q_spec = qsphere::parse_rational(q_spec);
    } catch (const std::exception& e) {
      std::cerr << "--q-spec: " << e.what() << '\n';
      return kUsage;
    }
  }
  return run_suite(suite, options, json_path, quiet);
}
