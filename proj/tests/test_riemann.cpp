#include "doctest.h"
#include "qsphere/riemann.hpp"
#include "support.hpp"

using namespace qsphere;
using namespace qtest;

namespace {

using E = AlgebraElement<Scalar>;
using Fm = Form<Scalar>;
using TF = TensorForm<Scalar>;

const E one(1);
const E bm_ = bm<Scalar>();
const E b0_ = b0<Scalar>();
const E bp_ = bp<Scalar>();
const Fm Y = volume<Scalar>();

E Q(int k) { return E(qn(k)); }
E two() { return E(two_q()); }

const std::array<Fm, 3> db = d_sphere_generators<Scalar>();
const std::array<E, 3> gens = sphere_generators<Scalar>();

Fm del_of(const E& f) { return del(f); }
Fm delbar_of(const E& f) { return delbar(f); }
Fm d_of(const E& f) { return d(f); }

Fm random_basic(Rng& rng) {
  return E(rng.sphere_element(2, 3)) * db[rng.uniform(0, 2)] + rng.sphere_element(1, 2) * db[rng.uniform(0, 2)];
}

}  // namespace

TEST_CASE("connection on the exact differentials") {
  const TF g = metric<Scalar>();
  const auto col = nabla_column<Scalar>();
  for (std::size_t i = 0; i < 3; ++i) CHECK(nabla(db[i]) == col[i] * g);
  CHECK(nabla(db[1]) == (one + two() * b0_) * g);
  const TF gpm = tensor_part(g, '+', '-');
  const TF gmp = tensor_part(g, '-', '+');
  CHECK(nabla(del(bp_)) == two() * bp_ * gmp);
  CHECK(nabla(del(bm_)) == two() * bm_ * gmp);
  CHECK(nabla(delbar(bp_)) == two() * bp_ * gpm);
  CHECK(nabla(delbar(bm_)) == two() * bm_ * gpm);
  for (std::size_t i = 0; i < 3; ++i) CHECK(nabla(db[i]).is_basic());
  CHECK_THROWS_AS(nabla(Fm::basis(kPlus)), std::invalid_argument);
}

TEST_CASE("connection obeys the left Leibniz rule") {
  Rng rng(53);
  for (int n = 0; n < 15; ++n) {
    const E f = rng.sphere_element(2, 4);
    const Fm tau = random_basic(rng);
    CHECK(nabla(f * tau) == tensor(d(f), tau) + f * nabla(tau));
  }
}

TEST_CASE("torsion vanishes") {
  for (const Fm& x : db) CHECK(torsion(x).is_zero());
  Rng rng(59);
  for (int n = 0; n < 15; ++n) {
    const E f = rng.sphere_element(2, 4);
    CHECK(torsion(f * db[rng.uniform(0, 2)]).is_zero());
  }
}

TEST_CASE("cotorsion vanishes") {
  const auto pairs = metric_pairs<Scalar>();
  CHECK(nabla_wedge_id(pairs).is_zero());
  CHECK(id_wedge_nabla(pairs).is_zero());
  CHECK(cotorsion<Scalar>().is_zero());
  CHECK((Q(2) * db[0] * bp_ + db[2] * bm_ - db[1] * (one + two() * b0_)).is_zero());
}

TEST_CASE("splitting into basic pairs reproduces the tensor") {
  Rng rng(61);
  for (int n = 0; n < 10; ++n) {
    const TF t = nabla(random_basic(rng));
    TF back;
    for (const auto& [omega, tau] : split_basic(t)) {
      CHECK(is_sphere_one_form(omega));
      CHECK(is_sphere_one_form(tau));
      back += tensor(omega, tau);
    }
    CHECK(back == t);
  }
}

TEST_CASE("projector") {
  const auto col = projector_column<Scalar>();
  const auto row = projector_row<Scalar>();
  E dot;
  for (std::size_t i = 0; i < 3; ++i) dot += row[i] * col[i];
  CHECK(dot == one);
  CHECK(recombine(row, db).is_zero());
  const auto e = projector<Scalar>();
  CHECK(multiply(e, e) == e);
  for (std::size_t i = 0; i < 3; ++i) CHECK(recombine(e[i], db).is_zero());
  TF drow;
  for (std::size_t k = 0; k < 3; ++k) drow += tensor(d(row[k]), db[k]);
  CHECK(drow == -metric<Scalar>());

  const auto de = differentiate<Scalar>(e, d_of);
  const auto ede = multiply(e, de);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(-act_on_column(de[i], db) == nabla(db[i]));
    CHECK(-act_on_column(ede[i], db) == nabla(db[i]));
  }

  std::array<Fm, 3> delb, delbarb;
  for (std::size_t i = 0; i < 3; ++i) {
    delb[i] = del(gens[i]);
    delbarb[i] = delbar(gens[i]);
  }
  const auto dele = differentiate<Scalar>(e, del_of);
  const auto delbare = differentiate<Scalar>(e, delbar_of);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(act_on_column(delbare[i], delbarb).is_zero());
    CHECK(act_on_column(dele[i], delb).is_zero());
    CHECK(-act_on_column(dele[i], delbarb) == nabla(delbarb[i]));
    CHECK(-act_on_column(delbare[i], delb) == nabla(delb[i]));
  }
}

TEST_CASE("Riemann tensor") {
  const auto [plus, minus] = riemann_scalars<Scalar>();
  CHECK(riemann_tensor(delbar(bp_)) == tensor(Y, delbar(bp_)) * two_q());
  CHECK(riemann_tensor(del(bp_)) == tensor(Y, del(bp_)) * (-qn(4) * two_q()));
  for (const E& f : gens) {
    CHECK(riemann_tensor(delbar(f)) == tensor(Y, delbar(f)) * minus);
    CHECK(riemann_tensor(del(f)) == tensor(Y, del(f)) * plus);
    CHECK(riemann_tensor(d(f)) == riemann_expected(d(f)));
  }
  const Fm tau = db[0] + db[2];
  const Scalar half(mpq_class(1, 2));
  const Fm hodge_form = tau * ((Scalar(1) - qn(4)) * half) - hodge_star(tau) * ((Scalar(1) + qn(4)) * half);
  CHECK(riemann_tensor(tau) == tensor(Y, hodge_form) * two_q());
  CHECK(plus.specialize(mpq_class(1)) == -2);
  CHECK(minus.specialize(mpq_class(1)) == 2);
}

TEST_CASE("Riemann tensor is a left module map") {
  Rng rng(67);
  for (int n = 0; n < 6; ++n) {
    const E f = rng.sphere_element(2, 3);
    const Fm tau = db[rng.uniform(0, 2)];
    CHECK(riemann_tensor(f * tau) == f * riemann_tensor(tau));
    CHECK(riemann_tensor(f * tau) == riemann_expected(f * tau));
  }
}

TEST_CASE("Ricci tensor") {
  const TF g = metric<Scalar>();
  CHECK(ricci(einstein_lift<Scalar>()) == g * (Scalar(2) * qn(-1) / (Scalar(1) + qn(-4))));
  const TF i = geometric_lift<Scalar>();
  const Scalar half(mpq_class(1, 2));
  CHECK(ricci(i) == g * (qn(-1) * (Scalar(1) + qn(4)) * half) + i * (two_q() * (Scalar(1) - qn(4)) * half));
  const Scalar c = qn(2) + Scalar(3);
  CHECK(ricci(i + g * c) == ricci(i) + ricci(g) * c);
  CHECK((Scalar(2) * qn(-1) / (Scalar(1) + qn(-4))).specialize(mpq_class(1)) == 1);
  CHECK((qn(-1) * (Scalar(1) + qn(4)) * half).specialize(mpq_class(1)) == 1);
  CHECK((two_q() * (Scalar(1) - qn(4)) * half).specialize(mpq_class(1)) == 0);
  CHECK_THROWS_AS(ricci(tensor(Fm::basis(kPlus), Fm::basis(kPlus))), std::invalid_argument);
}

TEST_CASE("metric is parallel at the classical point") {
  SpecializationScope scope(mpq_class(1));
  CHECK(metric_derivative<Specialized>().is_zero());
}
