#include "doctest.h"
#include "qsphere/calculus.hpp"
#include "support.hpp"

using namespace qsphere;
using namespace qtest;

namespace {

using E = AlgebraElement<Scalar>;
using Fm = Form<Scalar>;
const E a = gen<Scalar>(Gen::A);
const E b = gen<Scalar>(Gen::B);
const E c = gen<Scalar>(Gen::C);
const E d_ = gen<Scalar>(Gen::D);
const Fm ep = Fm::basis(kPlus);
const Fm em = Fm::basis(kMinus);
const Fm e0 = Fm::basis(kZero);

E Q(int k) { return E(qn(k)); }

}  // namespace

TEST_CASE("basis forms commute past functions by a power of q") {
  CHECK(ep * a == Q(1) * a * ep);
  CHECK(ep * b == Q(-1) * b * ep);
  CHECK(ep * c == Q(1) * c * ep);
  CHECK(ep * d_ == Q(-1) * d_ * ep);
  CHECK(em * a == Q(1) * a * em);
  CHECK(em * d_ == Q(-1) * d_ * em);
  CHECK(e0 * a == Q(2) * a * e0);
  CHECK(e0 * b == Q(-2) * b * e0);
  CHECK(e0 * c == Q(2) * c * e0);
  CHECK(e0 * d_ == Q(-2) * d_ * e0);
  const E f = b0<Scalar>() + bp<Scalar>() * bm<Scalar>();
  CHECK(wedge(ep, em) * f == f * wedge(ep, em));
}

TEST_CASE("exterior algebra relations") {
  CHECK(wedge(em, ep) == -Q(2) * wedge(ep, em));
  CHECK(wedge(e0, ep) == -Q(4) * wedge(ep, e0));
  CHECK(wedge(e0, em) == -Q(-4) * wedge(em, e0));
  CHECK(wedge(ep, ep).is_zero());
  CHECK(wedge(em, em).is_zero());
  CHECK(wedge(e0, e0).is_zero());
  CHECK(wedge(wedge(em, ep), e0) == -Q(2) * Fm::basis(kTop));
  CHECK(wedge(em, wedge(ep, e0)) == wedge(wedge(em, ep), e0));
}

TEST_CASE("wedge of three 1-forms is a multiple of the top form") {
  const Fm basis[] = {ep, em, e0};
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        const Fm t = wedge(wedge(x, y), z);
        for (const auto& [w, f] : t.terms()) {
          CHECK(w == kTop);
          CHECK(f.degree() == 0);
          CHECK(f.size() == 1);
        }
      }
}

TEST_CASE("derivatives of the generators") {
  CHECK(d(a) == a * e0 + Q(1) * b * ep);
  CHECK(d(b) == a * em - Q(-2) * b * e0);
  CHECK(d(c) == c * e0 + Q(1) * d_ * ep);
  CHECK(d(d_) == c * em - Q(-2) * d_ * e0);
  CHECK(d(b0<Scalar>()) == Q(1) * b * d_ * ep + Q(1) * a * c * em);
  CHECK(d(bm<Scalar>()) == b * b * ep + a * a * em);
  CHECK(d(bp<Scalar>()) == d_ * d_ * ep + c * c * em);
  CHECK(d(E(1)).is_zero());
  CHECK(d(a).to_string() == "a*e0 + q*b*ep");
}

TEST_CASE("derivatives of the basis forms") {
  CHECK(d(e0) == Q(3) * wedge(ep, em));
  CHECK(d(ep) == -(Q(2) + E(1)) * wedge(ep, e0));
  CHECK(d(em) == (Q(-2) + Q(-4)) * wedge(em, e0));
}

TEST_CASE("d squares to zero") {
  for (const E& x : {a, b, c, d_}) CHECK(d(d(x)).is_zero());
  for (const Fm& x : {ep, em, e0}) CHECK(d(d(x)).is_zero());
  Rng rng(3);
  for (int n = 0; n < 100; ++n) {
    const E x = normalize_word<Scalar>(rng.word(5));
    CHECK(d(d(x)).is_zero());
  }
}

TEST_CASE("Leibniz rules") {
  Rng rng(17);
  for (int n = 0; n < 100; ++n) {
    const E x = normalize_word<Scalar>(rng.word(4)), y = normalize_word<Scalar>(rng.word(4));
    CHECK(d(x * y) == d(x) * y + x * d(y));
  }
  for (int n = 0; n < 30; ++n) {
    const Fm x = d(rng.element(2, 3)) + rng.element(1, 2) * e0;
    const Fm y = d(rng.element(2, 3)) + rng.element(1, 2) * ep;
    CHECK(d(wedge(x, y)) == wedge(d(x), y) - wedge(x, d(y)));
  }
}

TEST_CASE("d preserves charge") {
  Rng rng(23);
  for (int n = 0; n < 40; ++n) {
    const int deg = rng.uniform(-3, 3);
    const E x = rng.homogeneous(deg, 2, 4);
    CHECK(d(x).has_charge(deg));
    CHECK(d(d(x) + x * e0).has_charge(deg));
  }
}

TEST_CASE("connection form of the monopole from the coproduct") {
  CHECK(d_ * d(a) - Q(1) * b * d(c) == e0);
  CHECK(monopole_omega<Scalar>(1) == e0);
  CHECK(monopole_omega<Scalar>(-1) == -Q(-2) * e0);
  CHECK(monopole_omega<Scalar>(0).is_zero());
  CHECK(monopole_omega<Scalar>(2) == (E(1) + Q(2)) * e0);
  for (int n = 1; n <= 6; ++n) {
    const Fm expected = E(qint(n, qn(2))) * e0;
    CHECK(sweedler_connection(pow(a, n)) == expected);
    CHECK(sweedler_connection(pow(d_, n)) == E(qint(-n, qn(2))) * e0);
    CHECK(monopole_omega<Scalar>(n) == expected);
  }
}

TEST_CASE("curvature of the monopole") {
  CHECK(monopole_curvature<Scalar>(1) == Q(3) * wedge(ep, em));
  CHECK(monopole_curvature<Scalar>(0).is_zero());
  for (int n = -6; n <= 6; ++n) {
    const Fm expected = E(qn(3) * qint(n, qn(2))) * wedge(ep, em);
    CHECK(monopole_curvature<Scalar>(n) == expected);
    const Fm omega = n >= 0 ? sweedler_connection(pow(a, n)) : sweedler_connection(pow(d_, -n));
    CHECK(d(omega) + wedge(omega, omega) == expected);
  }
}
