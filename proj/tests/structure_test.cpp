#include <algorithm>

#include <gtest/gtest.h>

#include "crsym/examples.hpp"
#include "crsym/pipeline.hpp"
#include "crsym/structure.hpp"

namespace crsym {
namespace {

VectorField mono(std::size_t slot, std::vector<unsigned> z, unsigned w = 0, GaussRational c = 1) {
  return VectorField::monomial(z.size(), slot, Exponent(z), w, c);
}

GaussRational gi(long re, long im) { return {Rational(re), Rational(im)}; }

PQRSpec spec(Exponent a, Exponent b, Exponent g) {
  PQRSpec s;
  s.alpha = a;
  s.beta = b;
  s.gamma = g;
  return s;
}

Analysis run(const PQRSpec& s) {
  AlgebraOptions o;
  o.extended_weights = false;
  return analyze(make_spec(s), o);
}

std::vector<VectorField> rigid_gc(const AlgebraReport& r) {
  std::vector<VectorField> out;
  for (int j = r.d + 1; j < 2 * r.d; ++j) {
    for (const auto& x : rigid_split(r.at(j)).rigid) out.push_back(x);
  }
  return out;
}

TEST(SplitRotation, TriangularNIsNilpotent) {
  const ModelSurface m = build_from_pqr(examples::nilpotent_triangular());
  // N = [[0, a+ib, ic], [0, 0, -a+ib], [0, 0, 0]]
  for (auto [a, b, c] : {std::tuple{1, 0, 0}, std::tuple{0, 1, 0}, std::tuple{0, 0, 1}, std::tuple{2, -3, 5}}) {
    const VectorField n = mono(0, {0, 1, 0}, 0, gi(a, b)) + mono(0, {0, 0, 1}, 0, gi(0, c)) +
                          mono(1, {0, 0, 1}, 0, gi(-a, b));
    ASSERT_TRUE(is_tangent(n, m));
    const auto dec = split_rotation(n, m);
    EXPECT_TRUE(dec.n_nilpotent);
    EXPECT_FALSE(dec.split);
    EXPECT_TRUE(dec.diagonal.is_zero());
    EXPECT_TRUE(dec.ok());
  }
}

TEST(SplitRotation, PairNSplitsIntoTwoNilpotents) {
  const ModelSurface m = build_from_pqr(examples::nilpotent_pair());
  EXPECT_TRUE(is_tangent(mono(1, {0, 0, 1}), m));
  EXPECT_TRUE(is_tangent(mono(2, {0, 1, 0}), m));
  const VectorField n = mono(1, {0, 0, 1}, 0, 2) + mono(2, {0, 1, 0}, 0, 3);
  const auto dec = split_rotation(n, m);
  EXPECT_FALSE(dec.n_nilpotent);
  ASSERT_TRUE(dec.split);
  EXPECT_TRUE(dec.n1_nilpotent);
  EXPECT_TRUE(dec.n2_nilpotent);
  EXPECT_EQ(dec.split->first + dec.split->second, dec.offdiag);
  EXPECT_TRUE(is_tangent(dec.split->first, m));
  EXPECT_TRUE(is_tangent(dec.split->second, m));
  EXPECT_TRUE(dec.ok());
}

TEST(SplitRotation, DiagonalField) {
  const ModelSpec s = examples::imag_diagonal();
  const auto dec = split_rotation(examples::imag_diagonal_rotation(), s.model);
  EXPECT_TRUE(dec.offdiag.is_zero());
  EXPECT_EQ(dec.diagonal, examples::imag_diagonal_rotation());
  EXPECT_TRUE(dec.ok());
}

TEST(SplitRotation, NonTangentPartThrows) {
  const ModelSurface m = build_from_pqr(examples::exotic_family(3));
  EXPECT_THROW(split_rotation(mono(0, {0, 1, 0}), m), TheoremViolation);
}

TEST(Classify, Basics) {
  const auto f1 = classify_normal_form(spec({1, 1, 0}, {0, 2, 0}, {0, 1, 1}));
  EXPECT_EQ(f1.family, NormalFamily::Family1);
  EXPECT_EQ(f1.parameters, std::vector<unsigned>{1});
  EXPECT_EQ(f1.predicted_nilpotent_params(), 3u);
  const auto f2 = classify_normal_form(spec({1, 0, 1}, {0, 1, 1}, {0, 0, 2}));
  EXPECT_EQ(f2.family, NormalFamily::Family2);
  EXPECT_EQ(f2.parameters, std::vector<unsigned>{1});
  EXPECT_EQ(f2.predicted_nilpotent_params(), 2u);
  EXPECT_EQ(classify_normal_form(examples::exotic_dim3()).family, NormalFamily::None);
  EXPECT_EQ(classify_normal_form(examples::exotic_dim3()).predicted_nilpotent_params(), 0u);
}

TEST(Classify, BuiltinModelsUnderPermutation) {
  const auto tri = classify_normal_form(examples::nilpotent_triangular());
  EXPECT_EQ(tri.family, NormalFamily::Family1);
  EXPECT_EQ(permute(examples::nilpotent_triangular(), tri.permutation).alpha, Exponent({1, 1, 0}));
  EXPECT_EQ(classify_normal_form(examples::nilpotent_pair()).family, NormalFamily::Family2);
}

TEST(Classify, InvariantUnderRelabeling) {
  const PQRSpec s = examples::nilpotent_family1(2);
  for (const auto& p : permutation_order()) {
    EXPECT_EQ(classify_normal_form(permute(s, p)).family, NormalFamily::Family1);
    EXPECT_EQ(classify_normal_form(swap_pq(permute(s, p))).family, NormalFamily::Family1);
  }
}

TEST(PredictGc, ExoticDim3Generators) {
  const PQRSpec s = examples::exotic_dim3();
  const GcPrediction p = predict_gc(s);
  EXPECT_EQ(p.reason, "ok");
  EXPECT_EQ(p.dim, 3u);
  // case 1 with alpha = 1 and alpha = i (beta = -conj(alpha)), case 2 with c = 1
  auto case1 = [](GaussRational a) {
    const GaussRational b = -a.conj();
    return mono(0, {2, 0, 0}, 0, -b) + mono(1, {0, 1, 1}, 0, a * GaussRational(3)) + mono(1, {1, 1, 0}, 0, -b) +
           mono(2, {0, 0, 2}, 0, -a) + mono(2, {1, 0, 1}, 0, b);
  };
  const VectorField case2 =
      mono(1, {1, 1, 1}, 0, GaussRational(Rational(0), Rational(3))) + mono(2, {1, 0, 2}, 0, -GaussRational::i());
  const std::vector<VectorField> stated{case1(1), case1(GaussRational::i()), case2};
  const ModelSurface m = build_from_pqr(s);
  for (const auto& x : stated) EXPECT_TRUE(is_tangent(x, m)) << x.to_string();
  EXPECT_TRUE(same_real_span(p.generators, stated));
}

TEST(PredictGc, ExoticFamilyL3) {
  const PQRSpec s = examples::exotic_family(3);
  const GcPrediction p = predict_gc(s);
  EXPECT_EQ(p.dim, 3u);
  // X1 = a i z2^3 d/dz1, X2 = -(a+ib) z2 z3 d/dz1 + (a-ib) z2^2 d/dz3
  std::vector<VectorField> stated{mono(0, {0, 3, 0}, 0, GaussRational::i())};
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}})
    stated.push_back(mono(0, {0, 1, 1}, 0, -gi(a, b)) + mono(2, {0, 2, 0}, 0, gi(a, -b)));
  EXPECT_TRUE(same_real_span(p.generators, stated));
}

TEST(PredictGc, ReasonCodes) {
  EXPECT_EQ(predict_gc(examples::nilpotent_family1(1)).dim, 0u);
  const auto eq = predict_gc(spec({2, 0, 0}, {0, 2, 0}, {1, 0, 1}));
  EXPECT_EQ(eq.dim, 0u);
  EXPECT_EQ(eq.reason, "equal_degrees");
  EXPECT_EQ(predict_gc(spec({1, 0, 0}, {0, 1, 0}, {0, 0, 1})).reason, "levi_nondegenerate");
  EXPECT_EQ(predict_gc(spec({1, 1, 1}, {1, 1, 1}, {1, 1, 1})).reason, "degenerate");
}

TEST(PredictGMinus, Basics) {
  const auto e = predict_g_minus(examples::exotic_family(3));
  EXPECT_EQ(e.dim, 2u);
  EXPECT_EQ(predict_g_minus(examples::exotic_dim3()).dim, 0u);
  EXPECT_EQ(predict_g_minus(examples::nilpotent_family1(1)).dim, 0u);
  const ModelSurface m = build_from_pqr(examples::exotic_family(3));
  for (const auto& x : e.generators) EXPECT_TRUE(is_tangent(x, m));
}

TEST(G1Generator, Lambdas) {
  const auto l = g1_lambda(examples::exotic_family(3));
  EXPECT_EQ(l[0], Rational(Integer(1), Integer(2)));
  EXPECT_EQ(l[1], Rational(Integer(1), Integer(6)));
  EXPECT_EQ(l[2], Rational(Integer(1), Integer(3)));
  const auto p = g1_lambda(examples::nilpotent_pair());
  for (const auto& x : p) EXPECT_EQ(x, Rational(Integer(1), Integer(4)));
  const VectorField y = g1_generator(examples::nilpotent_pair());
  EXPECT_TRUE(is_tangent(y, build_from_pqr(examples::nilpotent_pair())));
  EXPECT_EQ(y.g(), holo_monomial(Exponent{0, 0, 0}, 2, GaussRational(Rational(Integer(1), Integer(2)))));
  EXPECT_THROW(g1_lambda(spec({1, 1, 1}, {1, 1, 1}, {1, 1, 1})), TheoremViolation);
}

TEST(DiagonalFlags, ImagDiagonalExample) {
  const auto a = analyze(examples::imag_diagonal(), AlgebraOptions{});
  EXPECT_TRUE(a.prediction.rotations.has_imaginary_diagonal);
  EXPECT_EQ(a.report.g1(), 0u);
}

TEST(DiagonalFlags, RealOneImaginaryTwoOnPqr) {
  for (const auto& s : {examples::exotic_family(3), examples::exotic_dim3(), examples::nilpotent_family1(1),
                        examples::nilpotent_pair()}) {
    const auto a = run(s);
    EXPECT_TRUE(a.prediction.rotations.has_real_diagonal);
    EXPECT_EQ(a.prediction.rotations.real_diagonal_dim, 1u);
    EXPECT_EQ(a.prediction.rotations.imaginary_diagonal_dim, 2u);
  }
}

TEST(DiagonalFlags, EmptyComponent) {
  GradedComponent c;
  c.weight = Weight{4, 4};
  const auto f = diagonal_rotation_flags(c);
  EXPECT_FALSE(f.has_real_diagonal);
  EXPECT_FALSE(f.has_imaginary_diagonal);
}

TEST(Rotations, OffDiagonalParameterCounts) {
  EXPECT_EQ(run(examples::nilpotent_triangular()).prediction.rotations.offdiagonal_dim, 3u);
  EXPECT_EQ(run(examples::nilpotent_pair()).prediction.rotations.offdiagonal_dim, 2u);
  EXPECT_EQ(run(examples::exotic_dim3()).prediction.rotations.offdiagonal_dim, 0u);
}

TEST(Crosscheck, BuiltinModelsClean) {
  for (const auto& s : {examples::exotic_dim3(), examples::exotic_family(3), examples::exotic_family(5),
                        examples::nilpotent_family1(1), examples::nilpotent_family1(2),
                        examples::nilpotent_triangular(), examples::nilpotent_pair()}) {
    const auto a = run(s);
    for (const auto& d : a.discrepancies) ADD_FAILURE() << d.check << ": " << d.message;
  }
}

TEST(Crosscheck, DroppedGcGeneratorIsReported) {
  Analysis a = run(examples::exotic_dim3());
  AlgebraReport& r = a.report;
  // Remove one rigid field from the weight 1/5 component and recount.
  const int j = 12;
  ASSERT_EQ(r.dim(j), 1u);
  r.components[j].basis.clear();
  r.components[j].dim = 0;
  r.rigid_dims[j] = 0;
  const auto ds = crosscheck(r, a.prediction);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].check, "gc_dimension");
}

TEST(Crosscheck, BrokenDualityIsReported) {
  Analysis a = run(examples::exotic_family(3));
  AlgebraReport& r = a.report;
  const int j = 2 * r.d - 1;
  r.components[j].basis.clear();
  r.components[j].dim = 0;
  r.rigid_dims[j] = 0;
  const auto ds = crosscheck(r, a.prediction);
  EXPECT_TRUE(std::any_of(ds.begin(), ds.end(), [](const Discrepancy& d) { return d.check == "duality"; }));
}

TEST(Crosscheck, GcSolverBasisMatchesPrediction) {
  for (const auto& s : {examples::exotic_dim3(), examples::exotic_family(3)}) {
    const auto a = run(s);
    EXPECT_TRUE(same_real_span(rigid_gc(a.report), a.prediction.gc.generators));
  }
}

}  // namespace
}  // namespace crsym
