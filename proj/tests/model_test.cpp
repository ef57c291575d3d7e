#include <gtest/gtest.h>

#include "crsym/examples.hpp"
#include "crsym/fields.hpp"
#include "crsym/model.hpp"
#include "crsym/scan.hpp"

namespace crsym {
namespace {

MixedPoly mono(std::vector<unsigned> z, std::vector<unsigned> zb, GaussRational c = 1) {
  return mixed_monomial(Exponent(z), Exponent(zb), 0, c);
}

PQRSpec spec(Exponent a, Exponent b, Exponent g) {
  PQRSpec s;
  s.alpha = a;
  s.beta = b;
  s.gamma = g;
  return s;
}

bool has(const std::vector<Violation>& v, const std::string& invariant) {
  for (const auto& x : v)
    if (x.invariant == invariant) return true;
  return false;
}

TEST(BuildFromPqr, ExoticFamilyL3) {
  const ModelSurface m = build_from_pqr(examples::exotic_family(3));
  const MixedPoly want = mono({1, 0, 0}, {0, 3, 0}) + mono({0, 3, 0}, {1, 0, 0}) + mono({0, 1, 1}, {0, 1, 1});
  EXPECT_EQ(m.phi(), want);
  EXPECT_EQ(m.d(), 4);
  EXPECT_EQ(m.n(), 3u);
  EXPECT_TRUE(validate(m).empty());
}

TEST(BuildFromPqr, SymmetricAlphaBetaAccepted) {
  const ModelSurface m = build_from_pqr(spec({1, 1, 0}, {1, 1, 0}, {1, 0, 1}));
  EXPECT_TRUE(validate(m).empty());
  EXPECT_EQ(m.phi().coefficient(mixed_key(Exponent{1, 1, 0}, Exponent{1, 1, 0}, 0)), GaussRational(2));
}

TEST(BuildFromPqr, RejectsBadSpecs) {
  EXPECT_THROW(build_from_pqr(spec({1, 0, 0}, {0, 3, 0}, {1, 1, 1})), ValidationError);
  EXPECT_THROW(build_from_pqr(spec({0, 0, 0}, {2, 0, 0}, {1, 0, 0})), ValidationError);
  PQRSpec zero = examples::exotic_family(3);
  zero.cR = 0;
  EXPECT_THROW(build_from_pqr(zero), ValidationError);
  EXPECT_TRUE(has(validate_spec(spec({1, 0, 0}, {0, 3, 0}, {1, 1, 1})), "homogeneous"));
}

TEST(BuildFromPqr, SwapInvariant) {
  PQRSpec s = examples::nilpotent_pair();
  s.cQ = GaussRational(Rational(2), Rational(-1));
  EXPECT_EQ(build_from_pqr(s).phi(), build_from_pqr(swap_pq(s)).phi());
  EXPECT_EQ(swap_pq(swap_pq(s)), s);
}

TEST(BuildFromPqr, CoefficientsEnterAsStated) {
  PQRSpec s = examples::exotic_family(3);
  s.cP = GaussRational(Rational(0), Rational(2));
  s.cR = GaussRational(Rational(1), Rational(1));
  const MixedPoly phi = build_from_pqr(s).phi();
  EXPECT_EQ(phi.coefficient(mixed_key(Exponent{1, 0, 0}, Exponent{0, 3, 0}, 0)), GaussRational(Rational(0), Rational(2)));
  EXPECT_EQ(phi.coefficient(mixed_key(Exponent{0, 3, 0}, Exponent{1, 0, 0}, 0)), GaussRational(Rational(0), Rational(-2)));
  EXPECT_EQ(phi.coefficient(mixed_key(Exponent{0, 1, 1}, Exponent{0, 1, 1}, 0)), GaussRational(2));
}

TEST(BuildFromPqr, AlwaysValidOnScan) {
  for (int d = 2; d <= 6; d += 2) {
    for (const auto& s : enumerate_triples(d)) EXPECT_TRUE(validate(build_from_pqr(s)).empty());
  }
}

TEST(ExponentDet, Basics) {
  EXPECT_EQ(exponent_matrix_det(examples::exotic_dim3()), Rational(-1));
  EXPECT_EQ(exponent_matrix_det(spec({1, 0, 0}, {0, 1, 0}, {0, 0, 1})), Rational(1));
  EXPECT_EQ(exponent_matrix_det(examples::exotic_family(3)), Rational(3));
}

TEST(Jacobian, ExoticDim3) {
  const auto [p, q, r] = pqr_polys(examples::exotic_dim3());
  const auto c = jacobian_nondegenerate(p, q, r);
  EXPECT_TRUE(c.nondegenerate);
  ASSERT_TRUE(c.jacobian);
  EXPECT_EQ(*c.jacobian, holo_monomial(Exponent{3, 2, 7}, 0, -1));
  EXPECT_FALSE(c.witness);
}

TEST(Jacobian, DegenerateWitness) {
  const HoloPoly p = holo_monomial(Exponent{1, 0, 0}, 0);
  const HoloPoly q = holo_monomial(Exponent{2, 0, 0}, 0);
  const HoloPoly r = holo_monomial(Exponent{3, 0, 0}, 0);
  const auto c = jacobian_nondegenerate(p, q, r);
  EXPECT_FALSE(c.nondegenerate);
  ASSERT_TRUE(c.witness);
  EXPECT_FALSE(c.witness->is_zero());
  EXPECT_TRUE(c.witness->f(0).is_zero());
  for (const auto* f : {&p, &q, &r}) EXPECT_TRUE(apply(*c.witness, *f).is_zero());
  EXPECT_THROW(jacobian_nondegenerate(HoloPoly(2), HoloPoly(2), HoloPoly(2)), DimensionError);
}

TEST(Jacobian, ExoticFamily) { EXPECT_TRUE(certify(examples::exotic_family(3)).nondegenerate); }

TEST(Jacobian, AgreesWithExponentDetAndWitnessesAreTangent) {
  for (int d = 2; d <= 6; d += 2) {
    for (const auto& s : enumerate_triples(d)) {
      const auto c = certify(s);
      ASSERT_TRUE(c.exponent_det);
      EXPECT_EQ(c.nondegenerate, !c.exponent_det->is_zero());
      if (c.nondegenerate) continue;
      ASSERT_TRUE(c.witness);
      const auto [p, q, r] = pqr_polys(s);
      for (const auto* f : {&p, &q, &r}) EXPECT_TRUE(apply(*c.witness, *f).is_zero());
    }
  }
}

TEST(Validate, PluriharmonicTerm) {
  const ModelSurface m(mono({1}, {1}) + mono({2}, {0}) + mono({0}, {2}));
  const auto v = validate(m);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(has(v, "no_pluriharmonic"));
  bool named = false;
  for (const auto& x : v) named |= x.term == "z1^2";
  EXPECT_TRUE(named);
}

TEST(Validate, Inhomogeneous) {
  EXPECT_TRUE(has(validate(ModelSurface(mono({1, 0}, {1, 0}) + mono({1, 1}, {1, 1}))), "homogeneous"));
}

TEST(Validate, RealZeroAndU) {
  EXPECT_TRUE(has(validate(ModelSurface(mono({1}, {1}, GaussRational::i()))), "real"));
  EXPECT_TRUE(has(validate(ModelSurface(MixedPoly(1))), "nonzero"));
  EXPECT_TRUE(has(validate(ModelSurface(mono({1}, {1}) + mixed_monomial(Exponent{1}, Exponent{1}, 1))), "no_u"));
  EXPECT_THROW(require_valid(ModelSurface(MixedPoly(1))), ValidationError);
}

TEST(Validate, ImagDiagonalModel) {
  const ModelSpec s = examples::imag_diagonal();
  EXPECT_TRUE(validate(s.model).empty());
  EXPECT_EQ(s.model.d(), 8);
}

TEST(CertifyModel, BoundedSearch) {
  // |z1|^2 + |z2|^2 is Levi-nondegenerate; |z1|^2 on C^2 has d/dz2 tangent.
  const ModelSurface good(mono({1, 0}, {1, 0}) + mono({0, 1}, {0, 1}));
  EXPECT_TRUE(certify(good).nondegenerate);
  const ModelSurface bad(mono({1, 0}, {1, 0}));
  const auto c = certify(bad);
  EXPECT_FALSE(c.nondegenerate);
  ASSERT_TRUE(c.witness);
  EXPECT_TRUE(c.witness->g().is_zero());
}

TEST(Permute, RelabelsVariables) {
  const PQRSpec s = examples::nilpotent_triangular();
  const PQRSpec p = permute(s, {0, 2, 1});
  EXPECT_EQ(p.alpha, Exponent({1, 1, 0}));
  EXPECT_EQ(p.beta, Exponent({0, 2, 0}));
  EXPECT_EQ(p.gamma, Exponent({0, 1, 1}));
  EXPECT_EQ(exponent_matrix_det(p), -exponent_matrix_det(s));
}

}  // namespace
}  // namespace crsym
