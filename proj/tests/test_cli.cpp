#include "doctest.h"

#include "qsphere/expr.hpp"
#include "qsphere/sphere.hpp"
#include "qsphere/verify.hpp"
#include "support.hpp"

#include <map>

using namespace qsphere;
using namespace qsphere::expr;
using qtest::q;
using qtest::two_q;

namespace {

Scalar random_scalar(Rng& rng) {
  Scalar x = rng.coin() ? rng.rational_scalar() : rng.scalar();
  if (rng.uniform(0, 2) == 0) x *= Scalar(mpq_class(rng.uniform(-5, 5) * 2 + 1, rng.uniform(2, 9)));
  if (rng.coin()) x *= Scalar::s_power(2 * rng.uniform(-3, 3) + 1);
  return x;
}

AlgebraElement<Scalar> random_element(Rng& rng) {
  AlgebraElement<Scalar> x = rng.element(3, 4);
  if (rng.coin()) x *= random_scalar(rng);
  return x;
}

Form<Scalar> random_form(Rng& rng) {
  Form<Scalar> x = Form<Scalar>::basis(static_cast<Word>(rng.uniform(1, 7)), random_element(rng));
  const int terms = rng.uniform(0, 2);
  for (int i = 0; i < terms; ++i) x += Form<Scalar>::basis(static_cast<Word>(rng.uniform(0, 7)), random_element(rng));
  return x;
}

void check_round_trip(const Value& x) {
  const std::string text = render(x);
  INFO(text);
  const Value y = evaluate(text);
  CHECK(y.index() <= x.index());
  CHECK(same_value(x, y));
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(render_tree(*parse("d(a)")) == "(d a)");
  CHECK(render_tree(*parse("q^2*bm*d(bp)")) == "(* (* (^ q 2) bm) (d bp))");
  CHECK(render_tree(*parse(" a +  b*c ")) == "(+ a (* b c))");
  CHECK(render_tree(*parse("-a^2")) == "(- (^ a 2))");
  CHECK(render_tree(*parse("q^-1")) == "(^ q -1)");
  CHECK(render_tree(*parse("d")) == "d");
  CHECK(render_tree(*parse("del(delbar(b0))")) == "(del (delbar b0))");
}

TEST_CASE("parse errors carry position and expected tokens") {
  const auto position = [](const std::string& text) -> std::optional<std::size_t> {
    try {
      parse(text);
    } catch (const ParseError& e) {
      CHECK(!e.expected().empty());
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(position("d(") == 2u);
  CHECK(position("a+") == 2u);
  CHECK(position("(a") == 2u);
  CHECK(position("a)") == 1u);
  CHECK(position("x") == 0u);
  CHECK(position("a^b") == 2u);
  CHECK(position("") == 0u);
  CHECK_FALSE(position("a*b").has_value());
}

TEST_CASE("eval examples") {
  CHECK(render(evaluate("d(a)")) == "a*e0 + q*b*ep");
  CHECK(render(evaluate("q^2*bm*d(bp)+bp*d(bm)-(1+(q+q^-1)*b0)*d(b0)")) == "0");
  CHECK(same_value(evaluate("lap(bp)"), evaluate("q^2*(q+q^-1)*bp")));
  CHECK(same_value(evaluate("lap(bp)"), Value(laplacian(bp<Scalar>()))));
  CHECK(same_value(evaluate("lap(bp)"), Value(bp<Scalar>() * (q() * q() * two_q()))));
  CHECK(render(evaluate("d(d(b))")) == "0");
  CHECK(render(evaluate("eps(a*d)")) == "1");
  CHECK(render(evaluate("S(a)")) == "d");
  CHECK(render(evaluate("a*d-q^-1*b*c")) == "1");
  CHECK(same_value(evaluate("dirac(s*a+b)"), evaluate("s*(s*a+b)")));
  CHECK(same_value(evaluate("ep*em+q^-2*em*ep"), Value(Scalar(0))));
}

TEST_CASE("eval reports type errors") {
  for (const char* text : {"star(a)", "dirac(ep)", "dirac(b0)", "lap(e0)", "a/b", "a^-1", "del(a)", "1/(q-q)",
                           "nabla(a)", "eps(ep)", "nabla(ep)+ep"})
    CHECK_THROWS_AS(evaluate(text), TypeError);
}

TEST_CASE("rendered values parse back to themselves") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) check_round_trip(random_scalar(rng));
  for (int i = 0; i < 100; ++i) check_round_trip(random_element(rng));
  for (int i = 0; i < 100; ++i) check_round_trip(random_form(rng));
}

TEST_CASE("reports are deterministic") {
  verify::Options options;
  options.seed = 3;
  for (const char* suite : {"hopf", "dirac"}) {
    const std::string first = verify::to_json(verify::run_suite(suite, options), false);
    const std::string second = verify::to_json(verify::run_suite(suite, options), false);
    CHECK(first == second);
  }
}

TEST_CASE("suite names are validated") {
  CHECK_THROWS_AS(verify::run_suite("nope", {}), std::invalid_argument);
  CHECK(verify::is_suite("all"));
  CHECK_FALSE(verify::is_suite("nope"));
}

TEST_CASE("bwb runs n+1 checks per n") {
  verify::Options options;
  options.max_n = 4;
  const verify::Report report = verify::run_suite("bwb", options);
  CHECK(report.results.size() == 15u);
  CHECK(report.passed());
}

TEST_CASE("curvature report contains the Riemann anchor") {
  const verify::Report report = verify::run_suite("curvature", {});
  bool found = false;
  for (const auto& r : report.results)
    if (r.anchor == "Prop-riemann") found = r.pass;
  CHECK(found);
}

TEST_CASE("numeric mode needs a rational square") {
  verify::Options options;
  options.q_spec = mpq_class(9, 4);
  options.sample = 10;
  CHECK(verify::run_suite("hopf", options).passed());
  options.q_spec = mpq_class(2);
  CHECK_THROWS_AS(verify::run_suite("hopf", options), std::invalid_argument);
}

TEST_CASE("json report follows the schema") {
  const verify::Report report = verify::run_suite("maxwell", {});
  const std::string json = verify::to_json(report);
  CHECK(json.find("\"suite\": \"maxwell\"") != std::string::npos);
  CHECK(json.find("\"engine_version\"") != std::string::npos);
  CHECK(json.find("\"millis\"") != std::string::npos);
  CHECK(verify::to_json(report, false).find("\"millis\"") == std::string::npos);
}
