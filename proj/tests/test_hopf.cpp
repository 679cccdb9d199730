#include "doctest.h"
#include "qsphere/hopf.hpp"
#include "support.hpp"

using namespace qsphere;
using namespace qtest;

namespace {

using E = AlgebraElement<Scalar>;
const E a = gen<Scalar>(Gen::A);
const E b = gen<Scalar>(Gen::B);
const E c = gen<Scalar>(Gen::C);
const E d = gen<Scalar>(Gen::D);

E S_then_multiply(const E& x) {
  return contract(coproduct(x), [](const Monomial& m) { return antipode<Scalar>(m); },
                  [](const Monomial& m) { return E::monomial(m); });
}

E multiply_then_S(const E& x) {
  return contract(coproduct(x), [](const Monomial& m) { return E::monomial(m); },
                  [](const Monomial& m) { return antipode<Scalar>(m); });
}

}  // namespace

TEST_CASE("straightening of generator pairs") {
  CHECK(d * a == E(1) + q() * b * c);
  CHECK(a * d == E(1) + qinv() * b * c);
  CHECK(b * a == q() * a * b);
  CHECK(c * a == q() * a * c);
  CHECK(d * b == q() * b * d);
  CHECK(d * c == q() * c * d);
  CHECK(c * b == b * c);
  CHECK((a * b).to_string() == "a*b");
  CHECK((d * a).to_string() == "q*b*c + 1");
}

TEST_CASE("normal form of abcd.dcba agrees with both rewriting strategies") {
  const std::vector<Gen> w{Gen::A, Gen::B, Gen::C, Gen::D, Gen::D, Gen::C, Gen::B, Gen::A};
  const E engine = normalize_word<Scalar>(w);
  CHECK(engine == reduce_word(w, Strategy::Leftmost));
  CHECK(engine == reduce_word(w, Strategy::Rightmost));
  CHECK(engine.degree() == 0);
}

TEST_CASE("confluence on random words") {
  Rng rng(42);
  for (int n = 0; n < 200; ++n) {
    auto w = rng.word(8);
    const E left = reduce_word(w, Strategy::Leftmost);
    CHECK(left == reduce_word(w, Strategy::Rightmost));
    CHECK(left == normalize_word<Scalar>(w));
  }
}

TEST_CASE("every rewrite preserves degree") {
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          if (i * l != 0) continue;
          Monomial m{i, j, k, l};
          for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D}) {
            const int dg = (g == Gen::A || g == Gen::C) ? 1 : -1;
            GeneratorProduct p = right_multiply(m, g);
            for (int t = 0; t < p.count; ++t) {
              CHECK(p.terms[t].m.is_normal());
              CHECK(p.terms[t].m.degree() == m.degree() + dg);
            }
          }
        }
}

TEST_CASE("multiplication is associative and graded") {
  Rng rng(7);
  for (int n = 0; n < 200; ++n) {
    E x = E::monomial(rng.monomial(4)), y = E::monomial(rng.monomial(4)), z = E::monomial(rng.monomial(4));
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * y).degree() == *x.degree() + *y.degree());
  }
  E x = rng.element(3, 4);
  CHECK(x * E(1) == x);
  CHECK(E(1) * x == x);
}

TEST_CASE("sphere relations") {
  const E B0 = b0<Scalar>(), Bp = bp<Scalar>(), Bm = bm<Scalar>();
  CHECK(B0 == b * c);
  CHECK(Bp == c * d);
  CHECK(Bm == a * b);
  CHECK(Bp * Bm == B0 * (E(1) + q() * B0));
}

TEST_CASE("degree split") {
  auto parts = (a + b).degree_split();
  CHECK(parts.size() == 2);
  CHECK(parts[1] == a);
  CHECK(parts[-1] == b);
  auto da = (d * a).degree_split();
  CHECK(da.size() == 1);
  CHECK(da[0] == E(1) + q() * b0<Scalar>());
}

TEST_CASE("coproduct") {
  CHECK(coproduct(E(1)) == TensorSquare<Scalar>::unit());
  CHECK(coproduct(a) == tensor(a, a) + tensor(b, c));
  const E B0 = b0<Scalar>();
  const TensorSquare<Scalar> expected = tensor(E(1), B0) + tensor(b * c, E(1) + two_q() * B0) +
                                        tensor(q() * a * c, bm<Scalar>()) + tensor(q() * b * d, bp<Scalar>());
  CHECK(coproduct(B0) == expected);
  CHECK(coproduct(a * b) == tensor(a * b, E(1) + two_q() * B0) + tensor(a * a, bm<Scalar>()) + tensor(b * b, bp<Scalar>()));
}

TEST_CASE("coproduct is multiplicative and coassociative") {
  for (const E& x : {a, b, c, d, a * b, c * d}) CHECK(coproduct_left(coproduct(x)) == coproduct_right(coproduct(x)));
  Rng rng(11);
  for (int n = 0; n < 20; ++n) {
    E x = rng.element(2, 4);
    CHECK(coproduct_left(coproduct(x)) == coproduct_right(coproduct(x)));
  }
}

TEST_CASE("antipode and counit") {
  CHECK(antipode(a) == d);
  CHECK(antipode(d) == a);
  CHECK(antipode(b) == -q() * b);
  CHECK(antipode(c) == -qinv() * c);
  CHECK(antipode(E(1)) == E(1));
  CHECK(antipode(a * b) == -q() * b * d);
  const E sab = antipode(a * b);
  for (const auto& [m, coef] : sab.terms()) CHECK(m.left_degree() == 0);
  CHECK(counit(a) == Scalar(1));
  CHECK(counit(b0<Scalar>()) == Scalar(0));
  CHECK(counit(d * a) == Scalar(1));
  for (const E& x : {a, b, c, d}) {
    CHECK(S_then_multiply(x) == E(counit(x)));
    CHECK(multiply_then_S(x) == E(counit(x)));
  }
}

TEST_CASE("Hopf axioms on random elements") {
  Rng rng(42);
  for (int n = 0; n < 30; ++n) {
    E x = normalize_word<Scalar>(rng.word(6));
    CHECK(S_then_multiply(x) == E(counit(x)));
    CHECK(multiply_then_S(x) == E(counit(x)));
    const auto dx = coproduct(x);
    CHECK(contract(dx, [](const Monomial& m) { return E(counit(E::monomial(m))); },
                   [](const Monomial& m) { return E::monomial(m); }) == x);
  }
}

TEST_CASE("antipode is antimultiplicative and exchanges the two gradings") {
  Rng rng(5);
  for (int n = 0; n < 50; ++n) {
    E x = rng.element(2, 4), y = rng.element(2, 4);
    CHECK(antipode(x * y) == antipode(y) * antipode(x));
    const int deg = rng.uniform(-3, 3);
    E h = rng.homogeneous(deg, 2, 4);
    const E sh = antipode(h);
    for (const auto& [m, coef] : sh.terms()) CHECK(m.left_degree() == -deg);
  }
}
