#include "qsphere/verify.hpp"

#include "qsphere/random.hpp"
#include "qsphere/spin.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace qsphere::verify {

namespace {

using E = AlgebraElement<Scalar>;
using Fm = Form<Scalar>;
using TF = TensorForm<Scalar>;

E Q(int k) { return E(q_power<Scalar>(k)); }
Scalar qs(int k) { return q_power<Scalar>(k); }
E two() { return E(q2<Scalar>()); }
E mu() { return Q(2) - Q(-2); }

const E& one() {
  static const E x(1);
  return x;
}
E ga() { return gen<Scalar>(Gen::A); }
E gb() { return gen<Scalar>(Gen::B); }
E gc() { return gen<Scalar>(Gen::C); }
E gd() { return gen<Scalar>(Gen::D); }
E bm_() { return bm<Scalar>(); }
E b0_() { return b0<Scalar>(); }
E bp_() { return bp<Scalar>(); }
Fm Y() { return volume<Scalar>(); }

int samples(const Options& o, int fallback) { return o.sample ? *o.sample : fallback; }

/// Runs body over the exact field, or over Specialized at s0 = sqrt(q_spec) in numeric mode.
template <class Body>
void sampled(const Options& o, Body&& body) {
  if (!o.q_spec) {
    body(std::type_identity<Scalar>{});
    return;
  }
  const mpq_class s0 = rational_sqrt(*o.q_spec);
  SpecializationScope scope(s0);
  body(std::type_identity<Specialized>{});
}

std::string label(const std::string& base, int n) { return base + " #" + std::to_string(n); }

template <CoefficientField F>
AlgebraElement<F> s_then_multiply(const AlgebraElement<F>& x) {
  return contract(coproduct(x), [](const Monomial& m) { return antipode<F>(m); },
                  [](const Monomial& m) { return AlgebraElement<F>::monomial(m); });
}

template <CoefficientField F>
AlgebraElement<F> multiply_then_s(const AlgebraElement<F>& x) {
  return contract(coproduct(x), [](const Monomial& m) { return AlgebraElement<F>::monomial(m); },
                  [](const Monomial& m) { return antipode<F>(m); });
}

template <CoefficientField F>
AlgebraElement<F> counit_left(const AlgebraElement<F>& x) {
  return contract(coproduct(x), [](const Monomial& m) { return AlgebraElement<F>(counit(AlgebraElement<F>::monomial(m))); },
                  [](const Monomial& m) { return AlgebraElement<F>::monomial(m); });
}

// ---------------------------------------------------------------------------
// hopf

std::vector<NamedCheck> hopf_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"Hopf-straightening", [](Check& c, const Options&) {
                   const E a = ga(), b = gb(), cc = gc(), d_ = gd();
                   c.equal(d_ * a, one() + Q(1) * b * cc, "da");
                   c.equal(a * d_, one() + Q(-1) * b * cc, "ad");
                   c.equal(b * a, Q(1) * a * b, "ba");
                   c.equal(cc * a, Q(1) * a * cc, "ca");
                   c.equal(d_ * b, Q(1) * b * d_, "db");
                   c.equal(d_ * cc, Q(1) * cc * d_, "dc");
                   c.equal(cc * b, b * cc, "cb");
                 }});
  out.push_back({"Hopf-confluence", [](Check& c, const Options& o) {
                   Rng rng(o.seed);
                   for (int n = 0; n < samples(o, 200); ++n) {
                     const auto w = rng.word(8);
                     const E left = reduce_word(w, Strategy::Leftmost);
                     c.equal(reduce_word(w, Strategy::Rightmost), left, label("rightmost", n));
                     c.equal(normalize_word<Scalar>(w), left, label("engine", n));
                   }
                 }});
  out.push_back({"Hopf-antipode", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     using EF = AlgebraElement<F>;
                     std::vector<EF> xs{gen<F>(Gen::A), gen<F>(Gen::B), gen<F>(Gen::C), gen<F>(Gen::D)};
                     Rng rng(o.seed);
                     for (int n = 0; n < samples(o, 100); ++n) xs.push_back(normalize_word<F>(rng.word(6)));
                     for (std::size_t n = 0; n < xs.size(); ++n) {
                       const EF eps(counit(xs[n]));
                       c.equal(s_then_multiply(xs[n]), eps, label("S(x1)x2", static_cast<int>(n)));
                       c.equal(multiply_then_s(xs[n]), eps, label("x1S(x2)", static_cast<int>(n)));
                     }
                   });
                 }});
  out.push_back({"Hopf-counit", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     using EF = AlgebraElement<F>;
                     std::vector<EF> xs{gen<F>(Gen::A), gen<F>(Gen::B), gen<F>(Gen::C), gen<F>(Gen::D)};
                     Rng rng(o.seed + 1);
                     for (int n = 0; n < samples(o, 100); ++n) xs.push_back(normalize_word<F>(rng.word(6)));
                     for (std::size_t n = 0; n < xs.size(); ++n)
                       c.equal(counit_left(xs[n]), xs[n], label("eps(x1)x2", static_cast<int>(n)));
                   });
                 }});
  out.push_back({"Hopf-coassociativity", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     using EF = AlgebraElement<F>;
                     std::vector<EF> xs{gen<F>(Gen::A), gen<F>(Gen::B), gen<F>(Gen::C), gen<F>(Gen::D)};
                     Rng rng(o.seed + 2);
                     for (int n = 0; n < samples(o, 100); ++n) xs.push_back(normalize_word<F>(rng.word(6)));
                     for (std::size_t n = 0; n < xs.size(); ++n) {
                       const auto dx = coproduct(xs[n]);
                       c.holds(coproduct_left(dx) == coproduct_right(dx), label("coassociativity", static_cast<int>(n)));
                     }
                   });
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// calculus

std::vector<NamedCheck> calculus_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"eq-3dcom", [](Check& c, const Options&) {
                   const Fm ep = Fm::basis(kPlus), em = Fm::basis(kMinus), e0 = Fm::basis(kZero);
                   const E a = ga(), b = gb(), cc = gc(), d_ = gd();
                   const std::pair<Fm, int> forms[] = {{ep, 1}, {em, 1}, {e0, 2}};
                   for (const auto& [e, k] : forms) {
                     c.equal(e * a, Q(k) * a * e, "e a");
                     c.equal(e * b, Q(-k) * b * e, "e b");
                     c.equal(e * cc, Q(k) * cc * e, "e c");
                     c.equal(e * d_, Q(-k) * d_ * e, "e d");
                   }
                 }});
  out.push_back({"calculus-generators", [](Check& c, const Options&) {
                   const Fm ep = Fm::basis(kPlus), em = Fm::basis(kMinus), e0 = Fm::basis(kZero);
                   const E a = ga(), b = gb(), cc = gc(), d_ = gd();
                   c.equal(d(a), a * e0 + Q(1) * b * ep, "da");
                   c.equal(d(b), a * em - Q(-2) * b * e0, "db");
                   c.equal(d(cc), cc * e0 + Q(1) * d_ * ep, "dc");
                   c.equal(d(d_), cc * em - Q(-2) * d_ * e0, "dd");
                 }});
  out.push_back({"calculus-d-squared", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D}) c.zero(d(d(gen<F>(g))), "generator");
                     for (Word w : {kPlus, kMinus, kZero}) c.zero(d(d(Form<F>::basis(w))), "basis form");
                     Rng rng(o.seed);
                     for (int n = 0; n < samples(o, 100); ++n) c.zero(d(d(normalize_word<F>(rng.word(5)))), label("word", n));
                   });
                 }});
  out.push_back({"calculus-exterior", [](Check& c, const Options&) {
                   const Fm ep = Fm::basis(kPlus), em = Fm::basis(kMinus), e0 = Fm::basis(kZero);
                   c.equal(wedge(em, ep), -Q(2) * wedge(ep, em), "e-e+");
                   c.equal(wedge(e0, ep), -Q(4) * wedge(ep, e0), "e0e+");
                   c.equal(wedge(e0, em), -Q(-4) * wedge(em, e0), "e0e-");
                   c.zero(wedge(ep, ep), "e+e+");
                   c.zero(wedge(em, em), "e-e-");
                   c.zero(wedge(e0, e0), "e0e0");
                   c.equal(d(e0), Q(3) * wedge(ep, em), "de0");
                   c.equal(d(ep), -(Q(2) + one()) * wedge(ep, e0), "de+");
                   c.equal(d(em), (Q(-2) + Q(-4)) * wedge(em, e0), "de-");
                 }});
  out.push_back({"calculus-monopole-form", [](Check& c, const Options&) {
                   for (int n = -6; n <= 6; ++n) {
                     const E t = n >= 0 ? pow(ga(), n) : pow(gd(), -n);
                     c.equal(sweedler_connection(t), E(qint(n, qs(2))) * Fm::basis(kZero), label("omega", n));
                   }
                 }});
  out.push_back({"calculus-monopole-curvature", [](Check& c, const Options&) {
                   const Fm ep = Fm::basis(kPlus), em = Fm::basis(kMinus);
                   for (int n = -6; n <= 6; ++n) {
                     const Fm omega = sweedler_connection(n >= 0 ? pow(ga(), n) : pow(gd(), -n));
                     c.equal(d(omega) + wedge(omega, omega), E(qs(3) * qint(n, qs(2))) * wedge(ep, em), label("F", n));
                   }
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// sphere

struct SphereData {
  Fm dbm, db0, dbp, Dm, D0, Dp, Bm, B0, Bp;
  SphereData()
      : dbm(d(bm_())),
        db0(d(b0_())),
        dbp(d(bp_())),
        Dm(del(bm_())),
        D0(del(b0_())),
        Dp(del(bp_())),
        Bm(delbar(bm_())),
        B0(delbar(b0_())),
        Bp(delbar(bp_())) {}
};

std::vector<NamedCheck> sphere_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"eq-Srel", [](Check& c, const Options&) {
                   const E bm = bm_(), b0 = b0_(), bp = bp_();
                   c.equal(bp * b0, Q(2) * b0 * bp, "b+b0");
                   c.equal(bm * b0, Q(-2) * b0 * bm, "b-b0");
                   c.equal(Q(2) * bm * bp, Q(-2) * bp * bm + (one() - Q(-2)) * b0, "b-b+");
                   c.equal(bp * bm, b0 * (one() + Q(1) * b0), "b+b-");
                 }});
  out.push_back({"Cor-dSrel", [](Check& c, const Options&) {
                   const SphereData s;
                   c.zero(Q(2) * bm_() * s.dbp + bp_() * s.dbm - (one() + two() * b0_()) * s.db0, "d relation");
                 }});
  const auto bimod = [](int line) {
    return [line](Check& c, const Options&) {
      const SphereData s;
      const E bm = bm_(), b0 = b0_(), bp = bp_(), m = mu();
      switch (line) {
        case 1:
          c.equal(s.db0 * b0, (Q(2) + Q(1) * m * b0) * b0 * s.db0 - m * b0 * bp * s.dbm, "db0 b0");
          break;
        case 2:
          c.equal(s.db0 * bp, Q(-2) * (one() - Q(1) * m * b0) * bp * s.db0 - (one() - Q(2) - Q(1) * m * b0) * b0 * s.dbp,
                  "db0 b+");
          break;
        case 3:
          c.equal(s.db0 * bm,
                  Q(2) * (one() + Q(-1) * m * b0) * bm * s.db0 - (one() - Q(-2) + Q(-1) * m * b0) * b0 * s.dbm, "db0 b-");
          break;
        case 4:
          c.equal(s.dbp * b0, (Q(4) + Q(3) * m * b0) * b0 * s.dbp - Q(-1) * m * bp * b0 * s.db0, "db+ b0");
          break;
        case 5:
          c.equal(s.dbm * b0, (Q(-4) - Q(-3) * m * b0) * b0 * s.dbm + Q(1) * m * bm * b0 * s.db0, "db- b0");
          break;
        case 6:
          c.equal(s.dbp * bm, Q(2) * (one() + Q(1) * m * b0) * bm * s.dbp - m * b0 * b0 * s.db0, "db+ b-");
          break;
        case 7:
          c.equal(s.dbm * bp, Q(-2) * (one() - Q(-1) * m * b0) * bp * s.dbm + Q(-2) * m * b0 * b0 * s.db0, "db- b+");
          break;
        case 8:
          c.equal(s.dbp * bp, Q(2) * (one() + Q(1) * m * b0) * bp * s.dbp - Q(-1) * m * bp * bp * s.db0, "db+ b+");
          break;
        default:
          c.equal(s.dbm * bm, Q(-2) * (one() - Q(-1) * m * b0) * bm * s.dbm + Q(1) * m * bm * bm * s.db0, "db- b-");
          break;
      }
    };
  };
  for (int line = 1; line <= 9; ++line) out.push_back({"Prop-dbbimod-line" + std::to_string(line), bimod(line)});
  out.push_back({"Prop-soldering", [](Check& c, const Options&) {
                   const SphereData s;
                   const E a = ga(), b = gb(), cc = gc(), d_ = gd();
                   c.equal(sweedler_connection(bm_()), Fm::basis(kMinus), "theta(b-)");
                   c.equal(sweedler_connection(bp_()), Fm::basis(kPlus), "theta(b+)");
                   c.zero(sweedler_connection(b0_()), "theta(b0)");
                   c.equal(d_ * d_ * s.dbm + Q(2) * b * b * s.dbp - E(qint(2, qs(2))) * b * d_ * s.db0, Fm::basis(kMinus),
                           "e- through d");
                   c.equal(a * a * s.dbp + Q(-2) * cc * cc * s.dbm - E(qint(2, qs(-2))) * a * cc * s.db0, Fm::basis(kPlus),
                           "e+ through d");
                 }});
  out.push_back({"Prop-delbardel-line1", [](Check& c, const Options&) {
                   const SphereData s;
                   c.equal(wedge(s.Dp, s.Bm) + Q(6) * wedge(s.Bm, s.Dp), Q(4) * mu() * (b0_() * b0_() - one()) * Y(), "line");
                 }});
  out.push_back({"Prop-delbardel-line2", [](Check& c, const Options&) {
                   const SphereData s;
                   c.equal(wedge(s.Dm, s.Bp), Q(2) * b0_() * b0_() * Y(), "left");
                   c.equal(wedge(s.Dm, s.Bp), -Q(2) * wedge(s.Bp, s.Dm), "middle");
                 }});
  out.push_back({"Prop-delbardel-line3", [](Check& c, const Options&) {
                   const SphereData s;
                   c.equal(wedge(s.Dm, s.Bm), Q(5) * bm_() * bm_() * Y(), "left");
                   c.equal(wedge(s.Dm, s.Bm), -Q(6) * wedge(s.Bm, s.Dm), "middle");
                 }});
  out.push_back({"Prop-delbardel-line4", [](Check& c, const Options&) {
                   const SphereData s;
                   c.equal(wedge(s.Dp, s.Bp), Q(5) * bp_() * bp_() * Y(), "left");
                   c.equal(wedge(s.Dp, s.Bp), -Q(6) * wedge(s.Bp, s.Dp), "middle");
                 }});
  out.push_back({"Prop-delbardel-aux", [](Check& c, const Options&) {
                   const SphereData s;
                   const E bm = bm_(), b0 = b0_(), bp = bp_();
                   c.equal(wedge(s.Bm, s.Dp), -(one() + Q(-3) * b0) * (one() + Q(-1) * b0) * Y(), "delbar b- del b+");
                   c.equal(wedge(s.D0, s.B0), Q(4) * (one() + Q(1) * b0) * b0 * Y(), "del b0 delbar b0");
                   c.equal(wedge(s.B0, s.D0), -(one() + Q(-1) * b0) * b0 * Y(), "delbar b0 del b0");
                   c.equal(wedge(s.D0, s.Bm), Q(4) * (one() + Q(1) * b0) * bm * Y(), "del b0 delbar b-");
                   c.equal(wedge(s.Bm, s.D0), -(one() + Q(-3) * b0) * bm * Y(), "delbar b- del b0");
                   c.equal(wedge(s.Dp, s.B0), Q(4) * bp * (one() + Q(1) * b0) * Y(), "del b+ delbar b0");
                   c.equal(wedge(s.B0, s.Dp), -bp * (one() + Q(-3) * b0) * Y(), "delbar b0 del b+");
                   c.equal(wedge(s.D0, s.Bp), Q(3) * bp * b0 * Y(), "del b0 delbar b+");
                   c.equal(wedge(s.D0, s.Bp), -Q(4) * wedge(s.Bp, s.D0), "del b0 delbar b+ swap");
                   c.equal(wedge(s.Dm, s.B0), Q(5) * bm * b0 * Y(), "del b- delbar b0");
                   c.equal(wedge(s.Dm, s.B0), -Q(4) * wedge(s.B0, s.Dm), "del b- delbar b0 swap");
                 }});
  out.push_back({"Prop-delbardel-further", [](Check& c, const Options&) {
                   const SphereData s;
                   c.equal(Q(-4) * wedge(s.D0, s.B0) + wedge(s.B0, s.D0), (Q(1) - Q(-1)) * b0_() * b0_() * Y(), "b0");
                   c.equal(wedge(s.D0, s.Bm) + Q(8) * wedge(s.Bm, s.D0), -Q(6) * mu() * bm_() * Y(), "b-");
                   c.equal(wedge(s.Dp, s.B0) + Q(8) * wedge(s.B0, s.Dp), -Q(6) * mu() * bp_() * Y(), "b+");
                 }});
  out.push_back({"Prop-laplace-wedges", [](Check& c, const Options&) {
                   const SphereData s;
                   const E bm = bm_(), b0 = b0_(), bp = bp_();
                   const E three = Q(2) + one() + Q(-2);
                   c.equal(wedge(s.dbm, s.dbp), -(one() + Q(-2) * two() * b0 - Q(-1) * (Q(1) - Q(-1)) * three * b0 * b0) * Y(),
                           "db- db+");
                   c.equal(wedge(s.db0, s.db0), (Q(1) - Q(-1)) * Q(2) * (two() + three * b0) * b0 * Y(), "db0 db0");
                   c.equal(wedge(s.db0, s.dbp), ((Q(5) - Q(-1)) * b0 - one()) * bp * Y(), "db0 db+");
                   c.equal(wedge(s.dbp, s.db0), ((Q(7) - Q(1)) * b0 + Q(4)) * bp * Y(), "db+ db0");
                   c.equal(wedge(s.dbm, s.db0), bm * ((Q(5) - Q(-1)) * b0 - one()) * Y(), "db- db0");
                   c.equal(wedge(s.db0, s.dbm), bm * ((Q(7) - Q(1)) * b0 + Q(4)) * Y(), "db0 db-");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// metric and hodge

std::vector<NamedCheck> metric_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"Prop-g-symmetry", [](Check& c, const Options&) { c.zero(as_form(wedge_first(metric<Scalar>())), "wedge g"); }});
  out.push_back({"Prop-g-type", [](Check& c, const Options&) {
                   const TF g = metric<Scalar>();
                   c.zero(tensor_part(g, '+', '+'), "g++");
                   c.zero(tensor_part(g, '-', '-'), "g--");
                 }});
  out.push_back({"Prop-g-invariance", [](Check& c, const Options&) {
                   const E a = ga(), b = gb(), cc = gc(), d_ = gd();
                   const E m[3][3] = {{a * a, two() * a * b, b * b},
                                      {cc * a, one() + two() * b * cc, d_ * b},
                                      {cc * cc, two() * cc * d_, d_ * d_}};
                   const E g[3][3] = {{E(), E(), Q(2)}, {E(), -two(), E()}, {one(), E(), E()}};
                   for (int i = 0; i < 3; ++i) {
                     for (int j = 0; j < 3; ++j) {
                       E sum;
                       for (int k = 0; k < 3; ++k)
                         for (int l = 0; l < 3; ++l) sum += m[k][i] * g[k][l] * m[l][j];
                       c.equal(sum, g[i][j], "entry " + std::to_string(i) + std::to_string(j));
                     }
                   }
                 }});
  return out;
}

std::vector<NamedCheck> hodge_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"hodge-involution", [](Check& c, const Options& o) {
                   c.equal(hodge_star(Fm(one())), Y(), "*1");
                   c.equal(hodge_star(Y()), Fm(one()), "*vol");
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     Rng rng(o.seed);
                     for (int n = 0; n < samples(o, 25); ++n) {
                       const AlgebraElement<F> f = convert<F>(rng.sphere_element(2, 4));
                       const Form<F> w = d(f);
                       c.equal(hodge_star(hodge_star(w)), w, label("**", n));
                       c.equal(hodge_star(del(f)), del(f), label("*del", n));
                       c.equal(hodge_star(delbar(f)), -delbar(f), label("*delbar", n));
                     }
                   });
                 }});
  out.push_back({"hodge-lift-volume", [](Check& c, const Options&) {
                   for (const Scalar& alpha : {qs(-1) / q2<Scalar>(), Scalar(0), qs(3) + Scalar(1)})
                     c.equal(as_form(wedge_first(volume_lift(alpha))), Y(), "alpha = " + alpha.to_string());
                 }});
  out.push_back({"hodge-lift-normalized", [](Check& c, const Options&) {
                   for (const Scalar& alpha : {qs(-1) / q2<Scalar>(), Scalar(0), qs(3) + Scalar(1)})
                     c.equal(as_form(wedge_first(normalized_lift(alpha))), Y(), "alpha = " + alpha.to_string());
                 }});
  out.push_back({"hodge-star-metric", [](Check& c, const Options&) {
                   const TF g = metric<Scalar>();
                   const TF star_first = tensor_part(g, '+', '-') - tensor_part(g, '-', '+');
                   c.equal(as_form(wedge_first(star_first)), Q(2) * E(2) * Y(), "wedge of (* x id) g");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// laplace and maxwell

std::vector<NamedCheck> laplace_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"Prop-laplace", [](Check& c, const Options&) {
                   const Scalar lambda = qs(2) * q2<Scalar>();
                   c.equal(laplacian(bm_()), bm_() * lambda, "b-");
                   c.equal(laplacian(bp_()), bp_() * lambda, "b+");
                   const E f = one() + two() * b0_();
                   c.equal(laplacian(f), f * lambda, "1 + [2] b0");
                 }});
  out.push_back({"laplace-constant", [](Check& c, const Options&) { c.zero(laplacian(one()), "box 1"); }});
  out.push_back({"laplace-spin1", [](Check& c, const Options&) {
                   c.equal(spin_eigenvalue<Scalar>(1), qs(2) * q2<Scalar>(), "eigenvalue");
                 }});
  out.push_back({"laplace-spin2", [](Check& c, const Options&) {
                   c.equal(spin_eigenvalue<Scalar>(2), qs(2) * q2<Scalar>() * qint_sym<Scalar>(3), "eigenvalue");
                 }});
  out.push_back({"laplace-star", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     Rng rng(o.seed);
                     for (int n = 0; n < samples(o, 25); ++n) {
                       const AlgebraElement<F> f = convert<F>(rng.sphere_element(3, 4));
                       c.equal(laplacian_by_star(f), laplacian(f), label("box", n));
                     }
                   });
                 }});
  return out;
}

std::vector<NamedCheck> maxwell_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"maxwell-modes", [](Check& c, const Options&) {
                   const Scalar m2 = qs(2) * q2<Scalar>() / Scalar(2);
                   for (const E& f : sphere_generators<Scalar>()) {
                     const Fm A = maxwell_mode(f);
                     c.equal(maxwell_operator(A), A * m2, "mode");
                   }
                 }});
  out.push_back({"maxwell-coclosed", [](Check& c, const Options&) {
                   for (const E& f : sphere_generators<Scalar>()) c.zero(hodge_star(d(hodge_star(maxwell_mode(f)))), "*d*A");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// connection and curvature

std::vector<NamedCheck> connection_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"Thm-cov", [](Check& c, const Options&) {
                   const TF g = metric<Scalar>();
                   const auto db = d_sphere_generators<Scalar>();
                   c.equal(nabla(db[0]), two() * bm_() * g, "db-");
                   c.equal(nabla(db[1]), (one() + two() * b0_()) * g, "db0");
                   c.equal(nabla(db[2]), two() * bp_() * g, "db+");
                 }});
  out.push_back({"Thm-cov-torsion", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     const auto db = d_sphere_generators<F>();
                     for (const auto& x : db) c.zero(torsion(x), "generator");
                     Rng rng(o.seed);
                     for (int n = 0; n < samples(o, 50); ++n) {
                       const AlgebraElement<F> f = convert<F>(rng.sphere_element(2, 4));
                       c.zero(torsion(f * db[static_cast<std::size_t>(rng.uniform(0, 2))]), label("f db", n));
                     }
                   });
                 }});
  out.push_back({"Thm-cov-cotorsion", [](Check& c, const Options&) { c.zero(cotorsion<Scalar>(), "cotorsion"); }});
  out.push_back({"Cor-projector", [](Check& c, const Options&) {
                   const auto col = projector_column<Scalar>();
                   const auto row = projector_row<Scalar>();
                   const auto db = d_sphere_generators<Scalar>();
                   E dot;
                   for (std::size_t i = 0; i < 3; ++i) dot += row[i] * col[i];
                   c.equal(dot, one(), "row . column");
                   c.zero(recombine(row, db), "row . db");
                   const auto e = projector<Scalar>();
                   c.holds(multiply(e, e) == e, "E^2 = E");
                 }});
  return out;
}

std::vector<NamedCheck> curvature_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"Prop-riemann", [](Check& c, const Options&) {
                   for (const E& f : sphere_generators<Scalar>()) {
                     c.equal(riemann_tensor(delbar(f)), tensor(Y(), delbar(f)) * q2<Scalar>(), "(0,1) part");
                     c.equal(riemann_tensor(del(f)), tensor(Y(), del(f)) * (-qs(4) * q2<Scalar>()), "(1,0) part");
                   }
                 }});
  out.push_back({"Prop-riemann-ricci", [](Check& c, const Options&) {
                   c.equal(ricci(einstein_lift<Scalar>()), metric<Scalar>() * (Scalar(2) * qs(-1) / (Scalar(1) + qs(-4))),
                           "Einstein lift");
                 }});
  out.push_back({"eq-altricci", [](Check& c, const Options&) {
                   const TF i = geometric_lift<Scalar>();
                   const Scalar half(mpq_class(1, 2));
                   c.equal(ricci(i),
                           metric<Scalar>() * (qs(-1) * (Scalar(1) + qs(4)) * half) +
                               i * (q2<Scalar>() * (Scalar(1) - qs(4)) * half),
                           "geometric lift");
                 }});
  out.push_back({"Prop-riemann-classical", [](Check& c, const Options&) {
                   SpecializationScope scope(mpq_class(1));
                   const auto g = metric<Specialized>();
                   c.equal(ricci(einstein_lift<Specialized>()), g, "Einstein lift");
                   c.equal(ricci(geometric_lift<Specialized>()), g, "geometric lift");
                 }});
  out.push_back({"Thm-cov-metric-classical", [](Check& c, const Options&) {
                   SpecializationScope scope(mpq_class(1));
                   c.zero(metric_derivative<Specialized>(), "nabla g");
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// dirac

using Sp = Spinor<Scalar>;

std::vector<NamedCheck> dirac_checks() {
  std::vector<NamedCheck> out;
  out.push_back({"eq-Dslabcd", [](Check& c, const Options&) {
                   c.equal(dirac(minus_spinor(ga())), plus_spinor(gb()), "a");
                   c.equal(dirac(minus_spinor(gc())), plus_spinor(gd()), "c");
                   c.equal(dirac(plus_spinor(gb())), minus_spinor(Q(1) * ga()), "b");
                   c.equal(dirac(plus_spinor(gd())), minus_spinor(Q(1) * gc()), "d");
                 }});
  out.push_back({"Lemma-gamma-table", [](Check& c, const Options&) {
                   const auto gens = sphere_generators<Scalar>();
                   const auto del_b = [&](std::size_t i) { return del(gens[i]); };
                   const auto delbar_b = [&](std::size_t i) { return delbar(gens[i]); };
                   const auto compose = [](const Fm& x, const Fm& y, const Sp& s) { return gamma(x, gamma(y, s)); };
                   const E bm = bm_(), b0 = b0_(), bp = bp_();
                   for (const auto& [m, p] : {std::pair{ga(), gb()}, std::pair{gc(), gd()}}) {
                     const Sp t = plus_spinor(p);
                     const Sp s = minus_spinor(m);
                     c.equal(compose(del_b(0), delbar_b(0), t), plus_spinor(Q(3) * bm * bm * p), "del b- delbar b-");
                     c.equal(compose(delbar_b(0), del_b(0), s), minus_spinor(Q(-1) * bm * bm * m), "delbar b- del b-");
                     c.equal(compose(del_b(2), delbar_b(2), t), plus_spinor(Q(3) * bp * bp * p), "del b+ delbar b+");
                     c.equal(compose(delbar_b(2), del_b(2), s), minus_spinor(Q(-1) * bp * bp * m), "delbar b+ del b+");
                     c.equal(compose(del_b(1), delbar_b(1), t), plus_spinor(Q(2) * (one() + Q(1) * b0) * b0 * p),
                             "del b0 delbar b0");
                     c.equal(compose(delbar_b(1), del_b(1), s), minus_spinor((one() + Q(-1) * b0) * b0 * m),
                             "delbar b0 del b0");
                     c.equal(compose(del_b(2), delbar_b(0), t), plus_spinor((one() + Q(3) * b0) * (one() + Q(1) * b0) * p),
                             "del b+ delbar b-");
                     c.equal(compose(delbar_b(0), del_b(2), s),
                             minus_spinor((one() + Q(-3) * b0) * (one() + Q(-1) * b0) * m), "delbar b- del b+");
                     c.equal(compose(del_b(0), delbar_b(2), t), plus_spinor(b0 * b0 * p), "del b- delbar b+");
                     c.equal(compose(delbar_b(2), del_b(0), s), minus_spinor(b0 * b0 * m), "delbar b+ del b-");
                   }
                 }});
  out.push_back({"Lemma-gamma-anticommutators", [](Check& c, const Options&) {
                   const auto gens = sphere_generators<Scalar>();
                   const auto db = d_sphere_generators<Scalar>();
                   const auto compose = [](const Fm& x, const Fm& y, const Sp& s) { return gamma(x, gamma(y, s)); };
                   for (const Sp& x : {Sp{ga(), gb()}, Sp{gc(), gd()}}) {
                     for (std::size_t i : {std::size_t{0}, std::size_t{2}}) {
                       const Fm w = db[i];
                       const Fm sw = hodge_star(w);
                       const E sq = gens[i] * gens[i];
                       const Sp expected{Q(-1) * sq * x.minus, Q(3) * sq * x.plus};
                       c.equal(compose(w, w, x), expected, "square");
                       c.equal(compose(sw, sw, x), Sp{} - expected, "star square");
                       c.zero(compose(w, sw, x) + compose(sw, w, x), "anticommutator");
                     }
                   }
                 }});
  out.push_back({"Lemma-gamma-metric", [](Check& c, const Options&) {
                   const auto pairs = metric_pairs<Scalar>();
                   for (const Sp& x : {Sp{ga(), gb()}, Sp{gc(), gd()}})
                     c.equal(gamma_gamma(pairs, x), Sp{Q(2) * x.minus, x.plus}, "diag(q^2, 1)");
                 }});
  out.push_back({"Prop-Dsl-table", [](Check& c, const Options&) {
                   const auto sp = generator_spinors<Scalar>();
                   const auto fs = square_test_functions<Scalar>();
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t k = 0; k < 4; ++k)
                       c.equal(dirac(dirac(fs[i] * sp[k])), dirac_square_expected<Scalar>(i, k),
                               "f" + std::to_string(i) + " x" + std::to_string(k));
                 }});
  out.push_back({"eq-Dsleval", [](Check& c, const Options&) {
                   for (int sign : {1, -1})
                     for (bool second : {false, true}) {
                       const Sp x = eigen_spinor<Scalar>(sign, second);
                       c.equal(dirac(x), x * (Scalar::s_power(1) * Scalar(sign)), x.to_string());
                     }
                 }});
  out.push_back({"eq-Dslcom", [](Check& c, const Options& o) {
                   sampled(o, [&](auto tag) {
                     using F = typename decltype(tag)::type;
                     const auto sp = generator_spinors<F>();
                     Rng rng(o.seed);
                     for (int n = 0; n < samples(o, 50); ++n) {
                       const AlgebraElement<F> f = convert<F>(rng.sphere_element(2, 4));
                       const Spinor<F> x = sp[static_cast<std::size_t>(rng.uniform(0, 3))];
                       c.equal(dirac(f * x) - f * dirac(x), gamma(d(f), x), label("commutator", n));
                     }
                   });
                 }});
  out.push_back({"final-Prop-trivialisation", [](Check& c, const Options&) {
                   const auto e = spinor_projector<Scalar>();
                   const auto ne = complement(e);
                   c.holds(multiply(e, e) == e, "e^2 = e");
                   for (const auto& x : apply_column(e, {ga(), gc()})) c.zero(x, "e (a, c)");
                   for (const auto& x : apply_column(ne, {gb(), gd()})) c.zero(x, "(1 - e)(b, d)");
                   const auto de = differentiate(e, [](const E& x) { return d(x); });
                   const auto dele = differentiate(e, [](const E& x) { return del(x); });
                   const auto delbare = differentiate(e, [](const E& x) { return delbar(x); });
                   c.holds(dele == multiply(e, de), "del e = e de");
                   c.holds(delbare == multiply(de, e), "delbar e = (de) e");
                   std::vector<SpinorRow<Scalar>> rows{{one(), E()}, {E(), one()}};
                   for (const auto& f : sphere_generators<Scalar>()) {
                     rows.push_back({f, E()});
                     rows.push_back({E(), f});
                   }
                   for (const auto& row : rows)
                     c.equal(transport(transported_dirac(row)), dirac(transport(row)), "row " + row[0].to_string() + ", " + row[1].to_string());
                 }});
  return out;
}

// ---------------------------------------------------------------------------
// bwb

std::vector<NamedCheck> bwb_checks(int max_n) {
  std::vector<NamedCheck> out;
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= n; ++s) {
      const int t = n - s;
      out.push_back({"App-bwb-n" + std::to_string(n) + "-s" + std::to_string(s), [n, s, t](Check& c, const Options&) {
                       const E f = pow(gc(), s) * pow(ga(), t);
                       c.equal(d(f), holomorphic_derivative<Scalar>(s, t), "derivative");
                       const Fm df = covariant_D(f, n);
                       c.zero(df.restricted({kMinus}), "e- part");
                       c.zero(df.restricted({kZero}), "e0 part");
                     }});
    }
  }
  return out;
}

const std::vector<std::string> kSuites{"hopf",    "calculus",   "sphere",    "metric", "hodge", "laplace",
                                       "maxwell", "connection", "curvature", "dirac",  "bwb",   "all"};

std::vector<NamedCheck> checks_for(const std::string& name, const Options& o) {
  if (name == "hopf") return hopf_checks();
  if (name == "calculus") return calculus_checks();
  if (name == "sphere") return sphere_checks();
  if (name == "metric") return metric_checks();
  if (name == "hodge") return hodge_checks();
  if (name == "laplace") return laplace_checks();
  if (name == "maxwell") return maxwell_checks();
  if (name == "connection") return connection_checks();
  if (name == "curvature") return curvature_checks();
  if (name == "dirac") return dirac_checks();
  if (name == "bwb") return bwb_checks(o.max_n);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

const char* engine_version() { return "1.0.0"; }

const std::vector<std::string>& suite_names() { return kSuites; }

bool is_suite(const std::string& name) { return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end(); }

std::vector<NamedCheck> suite_checks(const std::string& name) { return checks_for(name, Options{}); }

mpq_class rational_sqrt(const mpq_class& x) {
  if (x <= 0) throw std::invalid_argument("q must be a positive rational square");
  mpz_class num, den;
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) || !mpz_perfect_square_p(x.get_den().get_mpz_t()))
    throw std::invalid_argument("q must be the square of a rational: " + x.get_str());
  mpz_sqrt(num.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den().get_mpz_t());
  return mpq_class(num, den);
}

Report run_suite(const std::string& name, const Options& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  if (options.q_spec) rational_sqrt(*options.q_spec);
  std::vector<NamedCheck> checks;
  if (name == "all") {
    for (const auto& s : kSuites) {
      if (s == "all") continue;
      auto part = checks_for(s, options);
      for (auto& c : part) checks.push_back(std::move(c));
    }
  } else {
    checks = checks_for(name, options);
  }
  Report report{name, engine_version(), options.seed, {}};
  for (const auto& check : checks) {
    CheckResult r;
    r.anchor = check.anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      Check c;
      check.body(c, options);
      r.witness = c.failure();
    } catch (const std::exception& ex) {
      r.witness = std::string("exception: ") + ex.what();
    }
    r.pass = !r.witness;
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& x, const CheckResult& y) { return x.anchor < y.anchor; });
  return report;
}

std::string to_json(const Report& report, bool with_millis) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["engine_version"] = report.engine_version;
  j["seed"] = report.seed;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json e;
    e["anchor"] = r.anchor;
    e["status"] = r.pass ? "pass" : "fail";
    e["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    if (with_millis) e["millis"] = r.millis;
    j["results"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << r.anchor << ": " << (r.pass ? "pass" : "fail");
    if (r.witness) out << " (" << *r.witness << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace qsphere::verify
