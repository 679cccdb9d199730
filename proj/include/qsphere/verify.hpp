#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsphere::verify {

struct Options {
  std::uint64_t seed = 7;
  /// Overrides the per-check sample sizes of randomized checks.
  std::optional<int> sample;
  int max_n = 6;
  /// Numeric mode for randomized checks: q = q_spec, which must be the square of a rational.
  std::optional<mpq_class> q_spec;
};

struct CheckResult {
  std::string anchor;
  bool pass = false;
  std::optional<std::string> witness;
  std::int64_t millis = 0;
};

struct Report {
  std::string suite;
  std::string engine_version;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;

  bool passed() const;
};

/// Collects the first failed expectation of a check.
class Check {
 public:
  const std::optional<std::string>& failure() const { return failure_; }

  void holds(bool ok, const std::string& label) {
    if (!failure_ && !ok) failure_ = label;
  }

  template <class X>
  void equal(const X& got, const X& want, const std::string& label) {
    if (!failure_ && !(got == want)) failure_ = label + ": got " + got.to_string() + ", expected " + want.to_string();
  }

  template <class X>
  void zero(const X& got, const std::string& label) {
    if (!failure_ && !got.is_zero()) failure_ = label + ": got " + got.to_string() + ", expected 0";
  }

 private:
  std::optional<std::string> failure_;
};

using CheckBody = std::function<void(Check&, const Options&)>;

struct NamedCheck {
  std::string anchor;
  CheckBody body;
};

const char* engine_version();

/// Suite names accepted by run_suite, including "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// The checks of one suite (not "all").
std::vector<NamedCheck> suite_checks(const std::string& name);

/// Runs a suite; results are sorted by anchor. Throws std::invalid_argument for unknown names
/// or a q_spec that is not a rational square.
Report run_suite(const std::string& name, const Options& options);

std::string to_json(const Report& report, bool with_millis = true);
std::string to_text(const Report& report);

/// Square root of a rational square; throws std::invalid_argument otherwise.
mpq_class rational_sqrt(const mpq_class& x);

}  // namespace qsphere::verify
