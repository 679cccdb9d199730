#include "qsphere/verify.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> suites;
  double budget_seconds;
};

bool run(const Criterion& c) {
  namespace v = qsphere::verify;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> failures;
  std::size_t checks = 0;
  for (const auto& suite : c.suites) {
    const v::Report report = v::run_suite(suite, {});
    for (const auto& r : report.results) {
      ++checks;
      if (!r.pass) failures.push_back(r.anchor + (r.witness ? " (" + *r.witness + ")" : ""));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds <= c.budget_seconds;
  const bool pass = failures.empty() && checks > 0 && in_time;
  std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << checks - failures.size() << "/" << checks
            << " checks, " << seconds << " s\n";
  for (const auto& f : failures) std::cout << "     failed " << f << '\n';
  if (!in_time) std::cout << "     over the " << c.budget_seconds << " s budget\n";
  return pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"Hopf suite", {"hopf"}, 120},
      {"Calculus suite", {"calculus"}, 120},
      {"Sphere suite", {"sphere"}, 120},
      {"Metric/Hodge suite", {"metric", "hodge"}, 120},
      {"Laplace suite", {"laplace"}, 120},
      {"Connection suite", {"connection"}, 120},
      {"Curvature suite", {"curvature"}, 120},
      {"Dirac suite", {"dirac"}, 120},
      {"BWB suite", {"bwb"}, 10},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria)
    if (!run(c)) ++failed;
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (total <= 120 ? "PASS " : "FAIL ") << "Total runtime: " << total << " s of 120 s\n";
  if (total > 120) ++failed;
  std::cout << criteria.size() + 1 - failed << "/" << criteria.size() + 1 << " criteria met\n";
  return failed == 0 ? 0 : 1;
}
