#include <random>

#include <gtest/gtest.h>

#include "crsym/examples.hpp"
#include "crsym/fields.hpp"
#include "crsym/structure.hpp"
#include "crsym/tangency.hpp"
#include "oracle.hpp"

namespace crsym {
namespace {

VectorField mono(std::size_t slot, std::vector<unsigned> z, unsigned w = 0, GaussRational c = 1) {
  return VectorField::monomial(z.size(), slot, Exponent(z), w, c);
}

GaussRational gi(long re, long im) { return {Rational(re), Rational(im)}; }

TEST(WeightOf, Basics) {
  const auto dw = weight_of(mono(3, {0, 0, 0}), 4);
  ASSERT_TRUE(dw.homogeneous());
  EXPECT_EQ(dw.weight.value(), Rational(-1));
  for (int d : {2, 4, 7}) {
    const auto e = weight_of(grading_element(3, d), d);
    ASSERT_TRUE(e.homogeneous());
    EXPECT_EQ(e.weight.value(), Rational(0));
  }
  const auto x = weight_of(mono(0, {0, 1, 1}), 4);
  ASSERT_TRUE(x.homogeneous());
  EXPECT_EQ(x.weight.value(), Rational(Integer(1), Integer(4)));
  EXPECT_EQ(weight_of(mono(0, {0, 1, 1}) + mono(0, {0, 0, 0}), 4).kind, WeightResult::Kind::Inhomogeneous);
  EXPECT_EQ(weight_of(VectorField(3), 4).kind, WeightResult::Kind::Zero);
}

TEST(Apply, Basics) {
  const HoloPoly p = holo_monomial(Exponent{1, 2}, 0);
  EXPECT_EQ(apply(mono(0, {0, 1}), p), holo_monomial(Exponent{0, 3}, 0));
  const HoloPoly w = holo_monomial(Exponent{0, 0, 0}, 1);
  EXPECT_EQ(apply(grading_element(3, 4), w), w);
  // X2 of the exotic family with l = 3 applied to P = z1
  const GaussRational a = 2, b = 5;
  const GaussRational apb = a + b * GaussRational::i(), amb = a - b * GaussRational::i();
  const VectorField x2 = mono(0, {0, 1, 1}, 0, -apb) + mono(2, {0, 2, 0}, 0, amb);
  EXPECT_EQ(apply(x2, holo_monomial(Exponent{1, 0, 0}, 0)), holo_monomial(Exponent{0, 1, 1}, 0, -apb));
}

TEST(Apply, EulerOnDegreeD) {
  const int d = 5;
  const HoloPoly p = holo_monomial(Exponent{2, 1, 2}, 0, gi(3, -1));
  EXPECT_EQ(apply(grading_element(3, d), p), p);
}

TEST(Apply, LeibnizRandomized) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = oracle::random_field<VectorField>(rng, 2, 2, 4);
    HoloPoly p(2), q(2);
    p.add_term(Exponent{1, 1, 0}, oracle::random_gauss(rng));
    p.add_term(Exponent{0, 2, 1}, oracle::random_gauss(rng));
    q.add_term(Exponent{2, 0, 1}, oracle::random_gauss(rng));
    q.add_term(Exponent{0, 0, 0}, oracle::random_gauss(rng));
    EXPECT_EQ(apply(x, p * q), apply(x, p) * q + p * apply(x, q));
  }
}

TEST(Tangency, DwOnAnyModel) {
  for (const auto& name : examples::names()) {
    const ModelSpec s = examples::by_name(name);
    EXPECT_TRUE(is_tangent(mono(s.model.n(), std::vector<unsigned>(s.model.n(), 0)), s.model)) << name;
  }
}

TEST(Tangency, ImaginaryDiagonalRotation) {
  const ModelSpec s = examples::imag_diagonal();
  const VectorField x = mono(0, {1, 0, 0}, 0, gi(0, 11)) + mono(1, {0, 1, 0}, 0, gi(0, 3)) +
                        mono(2, {0, 0, 1}, 0, gi(0, -1));
  EXPECT_EQ(x, examples::imag_diagonal_rotation());
  EXPECT_TRUE(tangency_residual(x, s.model).is_zero());
}

TEST(Tangency, LeviNondegenerateDirection) {
  const ModelSurface m(mixed_monomial(Exponent{1}, Exponent{1}, 0));
  const MixedPoly r = tangency_residual(mono(0, {0}), m);
  const MixedPoly want = -(mixed_monomial(Exponent{0}, Exponent{1}, 0) + mixed_monomial(Exponent{1}, Exponent{0}, 0));
  EXPECT_EQ(r, want);
}

TEST(Tangency, ResidualOfDz1OnExoticFamily) {
  const ModelSurface m = build_from_pqr(examples::exotic_family(3));
  const MixedPoly r = tangency_residual(mono(0, {0, 0, 0}), m);
  EXPECT_FALSE(r.is_zero());
  // -2 Re(zb2^3)
  EXPECT_EQ(r.coefficient(mixed_key(Exponent{0, 0, 0}, Exponent{0, 3, 0}, 0)), GaussRational(-1));
  EXPECT_EQ(r.coefficient(mixed_key(Exponent{0, 3, 0}, Exponent{0, 0, 0}, 0)), GaussRational(-1));
}

TEST(Tangency, GradingElementAlwaysTangent) {
  for (const auto& name : examples::names()) {
    const ModelSpec s = examples::by_name(name);
    EXPECT_TRUE(is_tangent(grading_element(s.model.n(), s.model.d()), s.model)) << name;
  }
}

TEST(Tangency, RealAndRealLinearRandomized) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-5, 5);
  for (const auto& name : examples::names()) {
    const ModelSurface& m = examples::by_name(name).model;
    for (int t = 0; t < 10; ++t) {
      const auto x = oracle::random_field<VectorField>(rng, m.n(), 3, 5);
      const auto y = oracle::random_field<VectorField>(rng, m.n(), 3, 5);
      const Rational a(num(rng)), b(num(rng));
      const MixedPoly tx = tangency_residual(x, m), ty = tangency_residual(y, m);
      EXPECT_TRUE(is_real(tx));
      EXPECT_EQ(tangency_residual(x * GaussRational(a) + y * GaussRational(b), m),
                tx * GaussRational(a) + ty * GaussRational(b));
    }
  }
}

TEST(Tangency, ContextMatchesDirectSubstitution) {
  // Independent evaluation: Im G(u + i phi) - 2 Re sum F_j(u + i phi) phi_zj.
  std::mt19937_64 rng(23);
  const ModelSurface m = build_from_pqr(examples::nilpotent_pair());
  MixedPoly w = mixed_monomial(Exponent{0, 0, 0}, Exponent{0, 0, 0}, 1) + m.phi() * GaussRational::i();
  for (int t = 0; t < 10; ++t) {
    const auto x = oracle::random_field<VectorField>(rng, 3, 2, 6);
    MixedPoly b(3);
    for (std::size_t j = 0; j < 3; ++j) b += substitute_w(x.f(j), w) * m.phi_z(j);
    const MixedPoly want = imag_part(substitute_w(x.g(), w)) - real_part(b) * GaussRational(2);
    EXPECT_EQ(tangency_residual(x, m), want);
  }
}

TEST(LieBracket, Basics) {
  const VectorField dw = mono(3, {0, 0, 0});
  const VectorField e = grading_element(3, 4);
  EXPECT_EQ(lie_bracket(dw, e), dw);
  const VectorField x = mono(0, {0, 1, 1}) + mono(2, {0, 2, 0}, 1, gi(1, 1));
  EXPECT_TRUE(lie_bracket(x, x).is_zero());
}

TEST(LieBracket, DwWithG1Generator) {
  const PQRSpec s = examples::exotic_family(3);
  const VectorField y = g1_generator(s);
  const auto l = g1_lambda(s);
  VectorField want = mono(3, {0, 0, 0}, 1);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<unsigned> z(3, 0);
    z[j] = 1;
    want += mono(j, z, 0, GaussRational(l[j]));
  }
  EXPECT_EQ(lie_bracket(mono(3, {0, 0, 0}), y), want);
}

TEST(LieBracket, AntisymmetryJacobiWeightRandomized) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const auto x = oracle::random_field<VectorField>(rng, 2, 2, 3);
    const auto y = oracle::random_field<VectorField>(rng, 2, 2, 3);
    const auto z = oracle::random_field<VectorField>(rng, 2, 2, 3);
    EXPECT_EQ(lie_bracket(x, y), lie_bracket(y, x) * GaussRational(-1));
    const VectorField jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                            lie_bracket(z, lie_bracket(x, y));
    EXPECT_TRUE(jac.is_zero());
  }
  const int d = 4;
  const std::vector<VectorField> homog{mono(0, {0, 1, 1}), mono(1, {1, 0, 0}), mono(2, {0, 0, 1}, 1),
                                       mono(3, {1, 1, 0}), mono(0, {0, 0, 0})};
  for (const auto& a : homog) {
    for (const auto& b : homog) {
      const VectorField c = lie_bracket(a, b);
      if (c.is_zero()) continue;
      const auto wc = weight_of(c, d);
      ASSERT_TRUE(wc.homogeneous());
      EXPECT_EQ(wc.weight.value(), weight_of(a, d).weight.value() + weight_of(b, d).weight.value());
    }
  }
}

TEST(LieBracket, TangentFieldsCloseOnSolvedBasis) {
  const ModelSurface m = build_from_pqr(examples::exotic_family(3));
  const std::vector<VectorField> fields{
      grading_element(3, 4), mono(3, {0, 0, 0}), mono(0, {0, 0, 0}, 0, GaussRational::i()) + mono(3, {0, 3, 0}, 0, 2),
      mono(0, {0, 3, 0}, 0, GaussRational::i()), g1_generator(examples::exotic_family(3))};
  for (const auto& x : fields) ASSERT_TRUE(is_tangent(x, m)) << x.to_string();
  for (const auto& x : fields)
    for (const auto& y : fields) EXPECT_TRUE(is_tangent(lie_bracket(x, y), m));
}

TEST(GradingElement, UnscaledCoefficients) {
  const VectorField e = grading_element(2, 3);
  EXPECT_EQ(e.f(0), holo_monomial(Exponent{1, 0}, 0, GaussRational(Rational(Integer(1), Integer(3)))));
  EXPECT_EQ(e.g(), holo_monomial(Exponent{0, 0}, 1));
  EXPECT_FALSE(e.is_rigid());
  EXPECT_EQ(e.to_string(), "(1/3*z1)*d/dz1 + (1/3*z2)*d/dz2 + (w)*d/dw");
}

TEST(LinearPart, RoundTripAndNilpotency) {
  const std::vector<std::vector<GaussRational>> n{{0, gi(1, 1), gi(0, 1)}, {0, 0, gi(-1, 1)}, {0, 0, 0}};
  EXPECT_EQ(linear_part(linear_field(n)), n);
  EXPECT_TRUE(is_nilpotent(n));
  const std::vector<std::vector<GaussRational>> swap{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  EXPECT_FALSE(is_nilpotent(swap));
}

TEST(RealSpan, Utilities) {
  const VectorField a = mono(0, {1, 0});
  const VectorField b = mono(1, {0, 1}, 0, GaussRational::i());
  EXPECT_EQ(real_rank({a, b, a + b}), 2u);
  EXPECT_TRUE(in_real_span(a * GaussRational(3) - b, {a, b}));
  EXPECT_FALSE(in_real_span(a * GaussRational::i(), {a, b}));
  EXPECT_TRUE(same_real_span({a, b}, {a + b, a - b}));
  EXPECT_FALSE(same_real_span({a}, {a, b}));
}

}  // namespace
}  // namespace crsym
