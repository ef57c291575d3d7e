#include "crsym/model.hpp"

#include <algorithm>

#include "crsym/linalg.hpp"

namespace crsym {

ModelSurface::ModelSurface(MixedPoly phi) : phi_(std::move(phi)) {
  d_ = std::max(0, phi_.total_degree());
  phi_z_.reserve(phi_.nvars());
  for (std::size_t j = 0; j < phi_.nvars(); ++j) phi_z_.push_back(partial_z(phi_, j));
}

std::string mixed_monomial_string(std::size_t n, const Exponent& key) {
  return MixedPoly::term(n, key, 1).to_string();
}

std::vector<Violation> validate(const ModelSurface& m) {
  std::vector<Violation> out;
  const std::size_t n = m.n();
  const MixedPoly& phi = m.phi();
  if (phi.is_zero()) {
    out.push_back({"nonzero", "", "phi is the zero polynomial"});
    return out;
  }
  for (const auto& [key, c] : phi.terms()) {
    const std::string term = mixed_monomial_string(n, key);
    const MixedParts parts = split_mixed_key(n, key);
    if (parts.u != 0) out.push_back({"no_u", term, "phi must not depend on u"});
    if (parts.z.total() == 0 || parts.zbar.total() == 0) {
      out.push_back({"no_pluriharmonic", term, "term is pluriharmonic"});
    }
    if (static_cast<int>(key.total()) != m.d()) {
      out.push_back({"homogeneous", term,
                     "term has degree " + std::to_string(key.total()) + ", expected " +
                         std::to_string(m.d())});
    }
    const Exponent swapped = mixed_key(parts.zbar, parts.z, parts.u);
    if (swapped <=> key < 0) continue;  // checked from the other side
    if (!(phi.coefficient(swapped) == c.conj())) {
      out.push_back({"real", term, "coefficient is not conjugate to that of the swapped term"});
    }
  }
  return out;
}

void require_valid(const ModelSurface& m) {
  const auto v = validate(m);
  if (v.empty()) return;
  std::string msg = "invalid model:";
  for (const auto& x : v) {
    msg += " [" + x.invariant + (x.term.empty() ? "" : " " + x.term) + "] " + x.message + ";";
  }
  throw ValidationError(msg);
}

std::vector<Violation> validate_spec(const PQRSpec& spec) {
  std::vector<Violation> out;
  if (spec.alpha.size() != 3 || spec.beta.size() != 3 || spec.gamma.size() != 3) {
    out.push_back({"dimension", "", "alpha, beta and gamma must have 3 entries"});
    return out;
  }
  if (spec.cP.is_zero()) out.push_back({"nonzero", "cP", "cP must be nonzero"});
  if (spec.cQ.is_zero()) out.push_back({"nonzero", "cQ", "cQ must be nonzero"});
  if (spec.cR.is_zero()) out.push_back({"nonzero", "cR", "cR must be nonzero"});
  if (spec.alpha.total() + spec.beta.total() != 2 * spec.gamma.total()) {
    out.push_back({"homogeneous", "", "|alpha| + |beta| must equal 2|gamma|"});
  }
  if (spec.alpha.total() == 0) out.push_back({"no_pluriharmonic", "alpha", "|alpha| = 0"});
  if (spec.beta.total() == 0) out.push_back({"no_pluriharmonic", "beta", "|beta| = 0"});
  if (spec.gamma.total() == 0) out.push_back({"nonzero", "gamma", "|gamma| = 0"});
  return out;
}

ModelSurface build_from_pqr(const PQRSpec& spec) {
  const auto v = validate_spec(spec);
  if (!v.empty()) {
    std::string msg = "invalid PQR spec:";
    for (const auto& x : v) msg += " [" + x.invariant + "] " + x.message + ";";
    throw ValidationError(msg);
  }
  MixedPoly phi(3);
  phi.add_term(mixed_key(spec.alpha, spec.beta, 0), spec.cP * spec.cQ.conj());
  phi.add_term(mixed_key(spec.beta, spec.alpha, 0), spec.cQ * spec.cP.conj());
  phi.add_term(mixed_key(spec.gamma, spec.gamma, 0), spec.cR.norm());
  ModelSurface m(std::move(phi));
  require_valid(m);
  return m;
}

std::array<HoloPoly, 3> pqr_polys(const PQRSpec& spec) {
  return {holo_monomial(spec.alpha, 0, spec.cP), holo_monomial(spec.beta, 0, spec.cQ),
          holo_monomial(spec.gamma, 0, spec.cR)};
}

PQRSpec swap_pq(const PQRSpec& spec) {
  PQRSpec s = spec;
  std::swap(s.alpha, s.beta);
  std::swap(s.cP, s.cQ);
  return s;
}

PQRSpec permute(const PQRSpec& spec, const std::array<int, 3>& perm) {
  PQRSpec s = spec;
  for (std::size_t k = 0; k < 3; ++k) {
    s.alpha.set(k, spec.alpha[perm[k]]);
    s.beta.set(k, spec.beta[perm[k]]);
    s.gamma.set(k, spec.gamma[perm[k]]);
  }
  return s;
}

Rational exponent_matrix_det(const PQRSpec& spec) {
  const Exponent& a = spec.alpha;
  const Exponent& b = spec.beta;
  const Exponent& c = spec.gamma;
  auto e = [](unsigned x) { return static_cast<long>(x); };
  // columns alpha, beta, gamma
  const long det = e(a[0]) * (e(b[1]) * e(c[2]) - e(c[1]) * e(b[2])) -
                   e(b[0]) * (e(a[1]) * e(c[2]) - e(c[1]) * e(a[2])) +
                   e(c[0]) * (e(a[1]) * e(b[2]) - e(b[1]) * e(a[2]));
  return Rational(det);
}

namespace {

bool is_z_monomial(const HoloPoly& p) {
  return p.term_count() == 1 && p.terms().begin()->first[p.nvars()] == 0;
}

/// sum_j v_j z_j d/dz_j for an integer kernel vector v of the exponent rows.
std::optional<VectorField> monomial_witness(const std::vector<Exponent>& rows, std::size_t n) {
  RatMatrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(static_cast<long>(rows[i][j]));
  }
  const auto ker = kernel_basis(a);
  if (ker.empty()) return std::nullopt;
  VectorField x(n);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent z(n);
    z.set(j, 1);
    x.f(j) = holo_monomial(z, 0, ker.front()[j]);
  }
  return x;
}

}  // namespace

NondegeneracyCertificate jacobian_nondegenerate(const HoloPoly& p, const HoloPoly& q,
                                                const HoloPoly& r) {
  const std::size_t n = p.nvars();
  if (n != 3 || q.nvars() != 3 || r.nvars() != 3) {
    throw DimensionError("jacobian_nondegenerate: P, Q, R must be polynomials in 3 variables");
  }
  std::vector<std::vector<HoloPoly>> jac(3);
  const std::array<const HoloPoly*, 3> polys{&p, &q, &r};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) jac[i].push_back(partial(*polys[i], k));
  }
  NondegeneracyCertificate cert;
  cert.method = "jacobian";
  cert.jacobian = det(jac);
  cert.nondegenerate = !cert.jacobian->is_zero();
  if (!cert.nondegenerate && is_z_monomial(p) && is_z_monomial(q) && is_z_monomial(r)) {
    std::vector<Exponent> rows;
    for (const HoloPoly* x : polys) rows.push_back(split_holo_key(n, x->terms().begin()->first).first);
    cert.witness = monomial_witness(rows, n);
  }
  return cert;
}

NondegeneracyCertificate certify(const PQRSpec& spec) {
  const auto [p, q, r] = pqr_polys(spec);
  NondegeneracyCertificate cert = jacobian_nondegenerate(p, q, r);
  cert.exponent_det = exponent_matrix_det(spec);
  return cert;
}

NondegeneracyCertificate certify(const ModelSurface& m, int max_degree) {
  const std::size_t n = m.n();
  if (max_degree < 0) max_degree = m.d();
  NondegeneracyCertificate cert;
  cert.method = "bounded_search";
  cert.nondegenerate = true;
  // X(phi) = sum_j f_j phi_{z_j} is complex-linear in the coefficients of f,
  // and phi is homogeneous, so each coefficient degree t is searched alone.
  for (int t = 0; t <= max_degree; ++t) {
    const auto monos = exponents_of_degree(n, static_cast<unsigned>(t));
    const std::size_t unknowns = n * monos.size();
    std::map<Exponent, std::vector<std::pair<std::size_t, GaussRational>>, DescendingGrlex> eqs;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < monos.size(); ++a) {
        const MixedPoly img = m.phi_z(j).shifted(mixed_key(monos[a], Exponent(n), 0));
        for (const auto& [key, c] : img.terms()) eqs[key].emplace_back(j * monos.size() + a, c);
      }
    }
    // Real form: unknown c = x + iy occupies columns 2k, 2k+1.
    SparseRatMatrix sys(2 * unknowns);
    for (const auto& [key, entries] : eqs) {
      SparseRatMatrix::Row re, im;
      for (const auto& [k, c] : entries) {
        re.emplace_back(2 * k, c.re());
        re.emplace_back(2 * k + 1, -c.im());
        im.emplace_back(2 * k, c.im());
        im.emplace_back(2 * k + 1, c.re());
      }
      sys.add_row(std::move(re));
      sys.add_row(std::move(im));
    }
    const auto ker = kernel_basis(sys);
    if (ker.empty()) continue;
    VectorField x(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < monos.size(); ++a) {
        const std::size_t k = j * monos.size() + a;
        x.f(j).add_term(holo_key(monos[a], 0), GaussRational(ker.front()[2 * k], ker.front()[2 * k + 1]));
      }
    }
    cert.nondegenerate = false;
    cert.witness = std::move(x);
    return cert;
  }
  return cert;
}

DegenerateModel::DegenerateModel(NondegeneracyCertificate cert)
    : std::runtime_error("model is holomorphically degenerate"), cert_(std::move(cert)) {}

}  // namespace crsym
