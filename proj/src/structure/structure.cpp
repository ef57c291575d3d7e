#include "crsym/structure.hpp"

#include "crsym/linalg.hpp"
#include "crsym/tangency.hpp"

namespace crsym {

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

/// Rows alpha, beta, gamma.
Mat3 exponent_rows(const PQRSpec& s) {
  Mat3 m;
  for (std::size_t k = 0; k < 3; ++k) {
    m[0][k] = Rational(static_cast<long>(s.alpha[k]));
    m[1][k] = Rational(static_cast<long>(s.beta[k]));
    m[2][k] = Rational(static_cast<long>(s.gamma[k]));
  }
  return m;
}

std::optional<Mat3> inverse(const Mat3& m) {
  auto cof = [&](std::size_t r, std::size_t c) {
    const std::size_t r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  const Rational det = m[0][0] * cof(0, 0) + m[0][1] * cof(0, 1) + m[0][2] * cof(0, 2);
  if (det.is_zero()) return std::nullopt;
  Mat3 inv;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) inv[r][c] = cof(c, r) / det;
  }
  return inv;
}

ComplexMatrix diagonal_of(const ComplexMatrix& a, bool keep_diagonal) {
  ComplexMatrix out(a.size(), std::vector<GaussRational>(a.size()));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if ((j == k) == keep_diagonal) out[j][k] = a[j][k];
    }
  }
  return out;
}

/// z^(shift + e_j) as an exponent, or nullopt when some entry is negative.
std::optional<Exponent> shifted_unit(const std::array<long, 3>& shift, std::size_t j) {
  Exponent e(3);
  for (std::size_t k = 0; k < 3; ++k) {
    const long v = shift[k] + (k == j ? 1 : 0);
    if (v < 0) return std::nullopt;
    e.set(k, static_cast<unsigned>(v));
  }
  return e;
}

std::array<long, 3> difference(const Exponent& a, const Exponent& b) {
  return {static_cast<long>(a[0]) - static_cast<long>(b[0]),
          static_cast<long>(a[1]) - static_cast<long>(b[1]),
          static_cast<long>(a[2]) - static_cast<long>(b[2])};
}

bool is_unit(const Exponent& e, std::size_t j) { return e.total() == 1 && e[j] == 1; }

}  // namespace

RotationDecomposition split_rotation(const VectorField& x, const ModelSurface& m) {
  const ComplexMatrix a = linear_part(x);
  const ComplexMatrix dm = diagonal_of(a, true);
  const ComplexMatrix nm = diagonal_of(a, false);
  RotationDecomposition out;
  out.diagonal = linear_field(dm);
  out.offdiag = linear_field(nm);
  TangencyContext ctx(m);
  if (!ctx.residual(out.diagonal).is_zero()) {
    throw TheoremViolation("split_rotation: diagonal part is not tangent: " + out.diagonal.to_string());
  }
  if (!ctx.residual(out.offdiag).is_zero()) {
    throw TheoremViolation("split_rotation: off-diagonal part is not tangent: " + out.offdiag.to_string());
  }
  out.n_nilpotent = is_nilpotent(nm);
  if (out.n_nilpotent) return out;

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < nm.size(); ++j) {
    for (std::size_t k = 0; k < nm.size(); ++k) {
      if (!nm[j][k].is_zero()) slots.emplace_back(j, k);
    }
  }
  const std::size_t full = (std::size_t{1} << slots.size()) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    ComplexMatrix n1(nm.size(), std::vector<GaussRational>(nm.size()));
    ComplexMatrix n2 = n1;
    for (std::size_t t = 0; t < slots.size(); ++t) {
      auto [j, k] = slots[t];
      ((mask >> t) & 1 ? n1 : n2)[j][k] = nm[j][k];
    }
    if (!is_nilpotent(n1) || !is_nilpotent(n2)) continue;
    VectorField f1 = linear_field(n1);
    VectorField f2 = linear_field(n2);
    if (!ctx.residual(f1).is_zero() || !ctx.residual(f2).is_zero()) continue;
    out.split = std::make_pair(std::move(f1), std::move(f2));
    out.n1_nilpotent = out.n2_nilpotent = true;
    return out;
  }
  return out;
}

std::string to_string(NormalFamily f) {
  switch (f) {
    case NormalFamily::Family1: return "family1";
    case NormalFamily::Family2: return "family2";
    case NormalFamily::Family3: return "family3";
    case NormalFamily::None: return "none";
  }
  return "none";
}

std::size_t NormalFormClass::predicted_nilpotent_params() const {
  switch (family) {
    case NormalFamily::Family1: return 3;
    case NormalFamily::Family2: return 2;
    case NormalFamily::Family3: return 1;
    case NormalFamily::None: return 0;
  }
  return 0;
}

const std::array<std::array<int, 3>, 6>& permutation_order() {
  static const std::array<std::array<int, 3>, 6> order{{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  return order;
}

namespace {

std::optional<std::vector<unsigned>> match(NormalFamily f, const PQRSpec& s) {
  const Exponent& a = s.alpha;
  const Exponent& b = s.beta;
  const Exponent& g = s.gamma;
  switch (f) {
    case NormalFamily::Family1: {
      const unsigned k = a[1];
      if (k >= 1 && a == Exponent{1, k, 0} && b == Exponent{0, k + 1, 0} && g == Exponent{0, k, 1}) {
        return std::vector<unsigned>{k};
      }
      return std::nullopt;
    }
    case NormalFamily::Family2: {
      const unsigned k = a[2];
      if (k >= 1 && a == Exponent{1, 0, k} && b == Exponent{0, 1, k} && g == Exponent{0, 0, k + 1}) {
        return std::vector<unsigned>{k};
      }
      return std::nullopt;
    }
    case NormalFamily::Family3:
      if (a[0] == 1 && b == Exponent{0, a[1] + 1, a[2]} && g[0] == 0) {
        return std::vector<unsigned>{a[1], a[2], g[1], g[2]};
      }
      return std::nullopt;
    case NormalFamily::None: break;
  }
  return std::nullopt;
}

}  // namespace

NormalFormClass classify_normal_form(const PQRSpec& spec) {
  for (NormalFamily f : {NormalFamily::Family1, NormalFamily::Family2, NormalFamily::Family3}) {
    for (const auto& perm : permutation_order()) {
      for (bool swapped : {false, true}) {
        const PQRSpec s = permute(swapped ? swap_pq(spec) : spec, perm);
        if (auto params = match(f, s)) return {f, perm, swapped, std::move(*params)};
      }
    }
  }
  return {};
}

GcPrediction predict_gc(const PQRSpec& input) {
  GcPrediction out;
  if (exponent_matrix_det(input).is_zero()) {
    out.reason = "degenerate";
    return out;
  }
  if (input.alpha.total() + input.beta.total() == 2) {
    out.reason = "levi_nondegenerate";
    return out;
  }
  if (input.alpha.total() == input.beta.total()) {
    out.reason = "equal_degrees";
    return out;
  }
  out.reason = "ok";
  const PQRSpec s = input.alpha.total() < input.beta.total() ? input : swap_pq(input);
  const long p = s.alpha.total();
  const long q = s.beta.total();
  const Mat3 inv = *inverse(exponent_rows(s));
  const std::size_t n = 3;

  // Case 1: alpha.g = k (cR/cP) z^(gamma - alpha), beta.g = 0,
  // gamma.g = -conj(k) (cQ/cR) z^(beta - gamma); f_j = z_j g_j.
  if ((q - p) % 2 == 0) {
    const std::array<std::array<long, 3>, 2> shifts{difference(s.gamma, s.alpha),
                                                    difference(s.beta, s.gamma)};
    const GaussRational u1 = s.cR / s.cP;
    const GaussRational u3 = s.cQ / s.cR;
    // Per (j, shift): coefficient x A + y B of z^(shift + e_j) in f_j, k = x + iy.
    struct Piece {
      std::size_t j;
      std::array<long, 3> shift;
      GaussRational A, B;
    };
    std::vector<Piece> pieces;
    for (std::size_t j = 0; j < 3; ++j) {
      const GaussRational a1 = GaussRational(inv[j][0]) * u1;        // times k
      const GaussRational a3 = GaussRational(-inv[j][2]) * u3;       // times conj(k)
      Piece first{j, shifts[0], a1, GaussRational::i() * a1};
      Piece second{j, shifts[1], a3, -GaussRational::i() * a3};
      if (shifts[0] == shifts[1]) {
        first.A += second.A;
        first.B += second.B;
        pieces.push_back(first);
      } else {
        pieces.push_back(first);
        pieces.push_back(second);
      }
    }
    std::vector<RatVector> rows;
    for (const Piece& pc : pieces) {
      if (shifted_unit(pc.shift, pc.j)) continue;
      rows.push_back({pc.A.re(), pc.B.re()});
      rows.push_back({pc.A.im(), pc.B.im()});
    }
    std::vector<RatVector> sols;
    if (rows.empty()) {
      sols = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    } else {
      sols = kernel_basis(RatMatrix::from_rows(rows));
    }
    for (const auto& v : sols) {
      VectorField x(n);
      for (const Piece& pc : pieces) {
        if (auto e = shifted_unit(pc.shift, pc.j)) x.f(pc.j).add_term(holo_key(*e, 0), pc.A * v[0] + pc.B * v[1]);
      }
      out.generators.push_back(std::move(x));
    }
  }

  // Case 2: alpha.g = ic (cQ/cP) z^(beta - alpha), beta.g = gamma.g = 0.
  {
    const auto delta = difference(s.beta, s.alpha);
    const GaussRational u1 = GaussRational::i() * s.cQ / s.cP;
    bool polynomial = true;
    VectorField x(n);
    for (std::size_t j = 0; j < 3; ++j) {
      const GaussRational c = GaussRational(inv[j][0]) * u1;
      auto e = shifted_unit(delta, j);
      if (!e) {
        if (!c.is_zero()) polynomial = false;
        continue;
      }
      x.f(j) = holo_monomial(*e, 0, c);
    }
    if (polynomial) out.generators.push_back(std::move(x));
  }
  out.dim = out.generators.size();
  return out;
}

GMinusPrediction predict_g_minus(const PQRSpec& s) {
  GMinusPrediction out;
  for (std::size_t j = 0; j < 3; ++j) {
    // c z_j paired with S; the field is a d/dz_j + 2i conj(a) conj(c) S d/dw.
    const GaussRational* c = nullptr;
    const Exponent* other = nullptr;
    const GaussRational* other_c = nullptr;
    if (is_unit(s.alpha, j) && s.beta[j] == 0 && s.gamma[j] == 0) {
      c = &s.cP;
      other = &s.beta;
      other_c = &s.cQ;
    } else if (is_unit(s.beta, j) && s.alpha[j] == 0 && s.gamma[j] == 0) {
      c = &s.cQ;
      other = &s.alpha;
      other_c = &s.cP;
    } else {
      continue;
    }
    for (const GaussRational& a : {GaussRational(1), GaussRational::i()}) {
      VectorField x(3);
      x.f(j) = HoloPoly::constant(3, a);
      x.g() = holo_monomial(*other, 0, GaussRational(0, 2) * a.conj() * c->conj() * *other_c);
      out.generators.push_back(std::move(x));
    }
    break;
  }
  out.dim = out.generators.size();
  return out;
}

std::array<Rational, 3> g1_lambda(const PQRSpec& spec) {
  const auto inv = inverse(exponent_rows(spec));
  if (!inv) throw TheoremViolation("g1_generator: exponent matrix is singular");
  std::array<Rational, 3> l;
  for (std::size_t j = 0; j < 3; ++j) l[j] = ((*inv)[j][0] + (*inv)[j][1] + (*inv)[j][2]) * Rational(1, 2);
  return l;
}

VectorField g1_generator(const PQRSpec& spec) {
  const auto l = g1_lambda(spec);
  VectorField y(3);
  for (std::size_t j = 0; j < 3; ++j) {
    Exponent z(3);
    z.set(j, 1);
    y.f(j) = holo_monomial(z, 1, l[j]);
  }
  y.g() = holo_monomial(Exponent(3), 2, Rational(1, 2));
  if (!tangency_residual(y, build_from_pqr(spec)).is_zero()) {
    throw TheoremViolation("g1_generator: Y is not tangent: " + y.to_string());
  }
  return y;
}

namespace {

std::size_t intersection_dim(const std::vector<VectorField>& span, const std::vector<VectorField>& sub) {
  std::vector<VectorField> both = span;
  both.insert(both.end(), sub.begin(), sub.end());
  return real_rank(span) + real_rank(sub) - real_rank(both);
}

}  // namespace

RotationSummary diagonal_rotation_flags(const GradedComponent& g0) {
  RotationSummary out;
  if (g0.basis.empty()) return out;
  const std::size_t n = g0.basis.front().nvars();
  std::vector<VectorField> linear;
  std::vector<VectorField> off;
  for (const auto& x : rigid_split(g0).rigid) {
    const auto a = linear_part(x);
    linear.push_back(linear_field(a));
    off.push_back(linear_field(diagonal_of(a, false)));
  }
  std::vector<VectorField> real_diag;
  std::vector<VectorField> imag_diag;
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix e(n, std::vector<GaussRational>(n));
    e[j][j] = 1;
    real_diag.push_back(linear_field(e));
    e[j][j] = GaussRational::i();
    imag_diag.push_back(linear_field(e));
  }
  out.real_diagonal_dim = intersection_dim(linear, real_diag);
  out.imaginary_diagonal_dim = intersection_dim(linear, imag_diag);
  out.offdiagonal_dim = real_rank(off);
  out.has_real_diagonal = out.real_diagonal_dim > 0;
  out.has_imaginary_diagonal = out.imaginary_diagonal_dim > 0;
  return out;
}

RotationSummary analyze_rotations(const AlgebraReport& report) {
  const GradedComponent& g0 = report.at(report.d);
  RotationSummary out = diagonal_rotation_flags(g0);
  for (const auto& x : rigid_split(g0).rigid) {
    ++out.fields_checked;
    try {
      const RotationDecomposition dec = split_rotation(x, report.model);
      if (dec.ok()) {
        ++out.decompositions_ok;
        if (dec.split) ++out.splits_used;
      } else {
        out.failures.push_back("no nilpotent split for " + x.to_string());
      }
    } catch (const TheoremViolation& e) {
      out.failures.push_back(e.what());
    }
  }
  return out;
}

StructuralPrediction predict(const AlgebraReport& report, const std::optional<PQRSpec>& spec) {
  StructuralPrediction out;
  out.rotations = analyze_rotations(report);
  if (!spec) {
    out.reason = "not_pqr";
    return out;
  }
  out.is_pqr = true;
  out.spec = *spec;
  out.g1_field = g1_generator(*spec);
  if (report.d == 2) {
    out.reason = "levi_nondegenerate";
    out.gc.reason = out.reason;
    return out;
  }
  out.normal_form = classify_normal_form(*spec);
  out.gc = predict_gc(*spec);
  out.g_minus = predict_g_minus(*spec);
  return out;
}

namespace {

bool all_in_components(const AlgebraReport& report, const std::vector<VectorField>& fields) {
  for (const auto& x : fields) {
    const WeightResult w = weight_of(x, report.d);
    if (!w.homogeneous()) return false;
    if (w.weight.index < 0 || w.weight.index > 2 * report.d) return false;
    if (!in_real_span(x, report.at(w.weight.index).basis)) return false;
  }
  return true;
}

}  // namespace

std::vector<Discrepancy> crosscheck(const AlgebraReport& report, const StructuralPrediction& pred) {
  std::vector<Discrepancy> out;
  const std::size_t g1 = report.g1();
  const std::size_t gc = report.gc();
  const RotationSummary& rot = pred.rotations;

  if (!report.bracket_failures.empty()) {
    out.push_back({"bracket_closure", std::to_string(report.bracket_failures.size()) +
                                          " basis pairs bracket outside the expected component"});
  }
  if (!rot.has_imaginary_diagonal && g1 != 0) {
    out.push_back({"imaginary_diagonal_implication",
                   "no imaginary diagonal rotation but dim g_1 = " + std::to_string(g1)});
  }
  if (g1 != 0 && !rot.has_real_diagonal && gc != 0) {
    out.push_back({"real_diagonal_implication",
                   "g_1 != 0 and no real diagonal rotation but dim g_c = " + std::to_string(gc)});
  }
  if (!pred.is_pqr) return out;

  if (gc > 3) out.push_back({"gc_bound", "dim g_c = " + std::to_string(gc) + " exceeds 3"});
  if (g1 != 1) out.push_back({"g1_dimension", "dim g_1 = " + std::to_string(g1) + ", expected 1"});
  if (pred.g1_field && !in_real_span(*pred.g1_field, report.at(2 * report.d).basis)) {
    out.push_back({"g1_generator", "Y is not in the span of g_1"});
  }
  const std::size_t gm = report.g_minus_1_over_d();
  if ((gm > 0) != (report.g_1_minus_1_over_d() > 0)) {
    out.push_back({"duality", "dim g_{-1/d} = " + std::to_string(gm) + " but dim g_{1-1/d} = " +
                                  std::to_string(report.g_1_minus_1_over_d())});
  }
  // The remaining predictors assume a Levi-degenerate model (d >= 4).
  if (!pred.reason.empty()) return out;

  if (pred.gc.dim != gc) {
    out.push_back({"gc_dimension", "predicted dim g_c = " + std::to_string(pred.gc.dim) +
                                       ", solver dim g_c = " + std::to_string(gc)});
  } else if (!all_in_components(report, pred.gc.generators)) {
    out.push_back({"gc_span", "a predicted g_c generator is not in the solver span"});
  }
  if (pred.g_minus.dim != gm) {
    out.push_back({"g_minus_dimension", "predicted dim g_{-1/d} = " + std::to_string(pred.g_minus.dim) +
                                            ", solver = " + std::to_string(gm)});
  } else if (!all_in_components(report, pred.g_minus.generators)) {
    out.push_back({"g_minus_span", "a predicted g_{-1/d} generator is not in the solver span"});
  }
  if (!rot.failures.empty() || rot.decompositions_ok != rot.fields_checked) {
    out.push_back({"rotation_decomposition",
                   rot.failures.empty() ? "decomposition failed" : rot.failures.front()});
  }
  if (rot.offdiagonal_dim != pred.normal_form.predicted_nilpotent_params()) {
    out.push_back({"nilpotent_parameters",
                   "normal form " + to_string(pred.normal_form.family) + " predicts " +
                       std::to_string(pred.normal_form.predicted_nilpotent_params()) +
                       " parameters, solver has " + std::to_string(rot.offdiagonal_dim)});
  }
  return out;
}

}  // namespace crsym
