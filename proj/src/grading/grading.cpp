#include "crsym/grading.hpp"

#include <algorithm>
#include <cstdlib>
#include <string_view>
#include <unordered_map>

#include "crsym/linalg.hpp"

namespace crsym {

std::vector<Weight> candidate_weights(int d) {
  if (d < 1) throw DimensionError("candidate_weights: d must be positive");
  std::vector<Weight> out;
  for (int j = 0; j <= 2 * d; ++j) out.push_back(Weight{j, d});
  return out;
}

std::vector<AnsatzTerm> ansatz_monomials(const Weight& mu, std::size_t n) {
  const int d = mu.degree;
  const int j = mu.index;
  std::vector<AnsatzTerm> out;
  for (std::size_t slot = 0; slot <= n; ++slot) {
    // weighted degree of the coefficient times d
    const int target = slot < n ? j - d + 1 : j;
    for (int m = 0; target - m * d >= 0; ++m) {
      for (const Exponent& a : exponents_of_degree(n, static_cast<unsigned>(target - m * d))) {
        out.push_back({slot, a, static_cast<unsigned>(m)});
      }
    }
  }
  return out;
}

std::vector<VectorField> ansatz_basis(const Weight& mu, std::size_t n) {
  std::vector<VectorField> out;
  for (const auto& t : ansatz_monomials(mu, n)) out.push_back(VectorField::monomial(n, t.slot, t.z, t.w));
  return out;
}

namespace {

Exponent swap_key(std::size_t n, const Exponent& key) {
  Exponent s(key.size());
  for (std::size_t j = 0; j < n; ++j) {
    s.set(j, key[n + j]);
    s.set(n + j, key[j]);
  }
  s.set(2 * n, key[2 * n]);
  return s;
}

/// Contribution of one unknown to one representative monomial r:
/// s = K_r + conj K_r', t = K_r - conj K_r' where r' is r with z, zbar swapped.
struct Acc {
  std::size_t term;
  GaussRational s;
  GaussRational t;
};

struct RepRow {
  bool self_conjugate = false;
  std::vector<Acc> acc;
};

}  // namespace

GradedComponent solve_with_ansatz(TangencyContext& ctx, const Weight& mu,
                                  const std::vector<AnsatzTerm>& ansatz) {
  const std::size_t n = ctx.model().n();
  GradedComponent out;
  out.weight = mu;
  out.ansatz_size = ansatz.size();
  if (ansatz.empty()) return out;

  std::unordered_map<Exponent, RepRow, ExponentHash> reps;
  auto add = [&](const Exponent& rep, bool self, std::size_t term, const GaussRational& s,
                 const GaussRational& t) {
    RepRow& row = reps[rep];
    row.self_conjugate = self;
    if (row.acc.empty() || row.acc.back().term != term) row.acc.push_back({term, {}, {}});
    row.acc.back().s += s;
    row.acc.back().t += t;
  };
  for (std::size_t i = 0; i < ansatz.size(); ++i) {
    const MixedPoly k = ctx.monomial_k(ansatz[i].slot, ansatz[i].z, ansatz[i].w);
    for (const auto& [key, c] : k.terms()) {
      const Exponent sw = swap_key(n, key);
      const auto order = key <=> sw;
      const bool self = order == 0;
      if (order >= 0) add(key, self, i, c, c);
      if (order <= 0) {
        const GaussRational cc = c.conj();
        add(sw, self, i, cc, -cc);
      }
    }
  }

  // x-column: Re K; y-column: Re(iK). Per representative the coefficient of
  // Re(cK) is (x s + i y t) / 2; its real and imaginary parts must vanish.
  SparseRatMatrix sys(2 * ansatz.size());
  for (const auto& [rep, row] : reps) {
    SparseRatMatrix::Row re;
    SparseRatMatrix::Row im;
    for (const Acc& a : row.acc) {
      re.emplace_back(2 * a.term, a.s.re());
      re.emplace_back(2 * a.term + 1, -a.t.im());
      if (!row.self_conjugate) {
        im.emplace_back(2 * a.term, a.s.im());
        im.emplace_back(2 * a.term + 1, a.t.re());
      }
    }
    sys.add_row(std::move(re));
    if (!row.self_conjugate) sys.add_row(std::move(im));
  }

  for (const RatVector& v : kernel_basis(sys)) {
    VectorField x(n);
    for (std::size_t i = 0; i < ansatz.size(); ++i) {
      const GaussRational c(v[2 * i], v[2 * i + 1]);
      if (!c.is_zero()) x.component(ansatz[i].slot).add_term(holo_key(ansatz[i].z, ansatz[i].w), c);
    }
    if (!ctx.residual(x).is_zero()) {
      throw TheoremViolation("solve_component: kernel vector is not tangent: " + x.to_string());
    }
    out.basis.push_back(std::move(x));
  }
  out.dim = out.basis.size();
  return out;
}

GradedComponent solve_component(TangencyContext& ctx, const Weight& mu) {
  return solve_with_ansatz(ctx, mu, ansatz_monomials(mu, ctx.model().n()));
}

GradedComponent solve_component(const ModelSurface& m, const Weight& mu) {
  TangencyContext ctx(m);
  return solve_component(ctx, mu);
}

RigidSplit rigid_split(const GradedComponent& c) {
  RigidSplit out;
  if (c.basis.empty()) return out;
  const std::size_t n = c.basis.front().nvars();
  // Coordinates of the w-dependent part of each basis field.
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
  for (const auto& x : c.basis) {
    for (std::size_t s = 0; s <= n; ++s) {
      for (const auto& [key, v] : x.component(s).terms()) {
        if (key[n] > 0) index.try_emplace({s, key}, index.size());
      }
    }
  }
  RatMatrix a(2 * index.size(), c.basis.size());
  for (std::size_t b = 0; b < c.basis.size(); ++b) {
    for (std::size_t s = 0; s <= n; ++s) {
      for (const auto& [key, v] : c.basis[b].component(s).terms()) {
        if (key[n] == 0) continue;
        const std::size_t r = index.at({s, key});
        a(2 * r, b) = v.re();
        a(2 * r + 1, b) = v.im();
      }
    }
  }
  for (const RatVector& coeffs : kernel_basis(a)) {
    VectorField x(n);
    for (std::size_t b = 0; b < c.basis.size(); ++b) {
      if (!coeffs[b].is_zero()) x += c.basis[b] * GaussRational(coeffs[b]);
    }
    out.rigid.push_back(std::move(x));
  }
  std::vector<VectorField> span = out.rigid;
  for (const auto& x : c.basis) {
    if (span.size() == c.dim) break;
    if (in_real_span(x, span)) continue;
    span.push_back(x);
    out.nonrigid.push_back(x);
  }
  return out;
}

AlgebraOptions default_algebra_options() {
  AlgebraOptions o;
  if (const char* env = std::getenv("CRSYM_DIAG_WEIGHTS")) {
    o.extended_weights = std::string_view(env) == "extended";
  }
  return o;
}

std::size_t AlgebraReport::total() const {
  std::size_t t = 0;
  for (const auto& c : components) t += c.dim;
  return t;
}

std::size_t AlgebraReport::gc() const {
  std::size_t t = 0;
  for (int j = d + 1; j < 2 * d; ++j) t += rigid_dims.at(static_cast<std::size_t>(j));
  return t;
}

namespace {

/// A nonzero X with X and iX both in the span, if any.
std::optional<VectorField> complex_line(const GradedComponent& c) {
  if (c.basis.empty()) return std::nullopt;
  std::vector<VectorField> both = c.basis;
  for (const auto& x : c.basis) both.push_back(x * GaussRational::i());
  if (real_rank(both) == 2 * c.dim) return std::nullopt;
  for (const auto& x : c.basis) {
    if (in_real_span(x * GaussRational::i(), c.basis)) return x;
  }
  // The intersection is nonzero but contains no basis vector; any element
  // of it is a witness, found from the real dependency among `both`.
  const std::size_t n = c.basis.front().nvars();
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
  for (const auto& x : both) {
    for (std::size_t s = 0; s <= n; ++s) {
      for (const auto& [key, v] : x.component(s).terms()) index.try_emplace({s, key}, index.size());
    }
  }
  RatMatrix a(2 * index.size(), both.size());
  for (std::size_t b = 0; b < both.size(); ++b) {
    for (std::size_t s = 0; s <= n; ++s) {
      for (const auto& [key, v] : both[b].component(s).terms()) {
        const std::size_t r = index.at({s, key});
        a(2 * r, b) = v.re();
        a(2 * r + 1, b) = v.im();
      }
    }
  }
  const auto ker = kernel_basis(a);
  VectorField x(n);
  for (std::size_t b = 0; b < c.dim; ++b) {
    if (!ker.front()[b].is_zero()) x += c.basis[b] * GaussRational(ker.front()[b]);
  }
  return x;
}

}  // namespace

std::vector<BracketFailure> verify_bracket_closure(const AlgebraReport& report) {
  std::vector<BracketFailure> out;
  const int d = report.d;
  const int top = 2 * d;
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    for (std::size_t j = i; j < report.components.size(); ++j) {
      const auto& ci = report.components[i];
      const auto& cj = report.components[j];
      if (ci.basis.empty() || cj.basis.empty()) continue;
      const int target = ci.weight.index + cj.weight.index - d;
      for (std::size_t a = 0; a < ci.basis.size(); ++a) {
        for (std::size_t b = (i == j ? a + 1 : 0); b < cj.basis.size(); ++b) {
          const VectorField br = lie_bracket(ci.basis[a], cj.basis[b]);
          if (br.is_zero()) continue;
          if (target < 0 || target > top) {
            out.push_back({ci.weight, cj.weight, "nonzero bracket outside the weight range"});
            continue;
          }
          const auto& ct = report.components[static_cast<std::size_t>(target)];
          if (!in_real_span(br, ct.basis)) {
            out.push_back({ci.weight, cj.weight,
                           "bracket not in component of weight " + ct.weight.to_string()});
          }
        }
      }
    }
  }
  return out;
}

AlgebraReport full_algebra(const ModelSurface& m, const AlgebraOptions& options) {
  require_valid(m);
  AlgebraReport rep;
  rep.model = m;
  rep.d = m.d();
  if (options.certificate) {
    rep.certificate = *options.certificate;
  } else if (options.certify) {
    rep.certificate = certify(m);
  } else {
    rep.certificate.nondegenerate = true;
    rep.certificate.method = "assumed";
  }
  if (!rep.certificate.nondegenerate) throw DegenerateModel(rep.certificate);

  TangencyContext ctx(rep.model);
  for (const Weight& w : candidate_weights(rep.d)) {
    rep.components.push_back(solve_component(ctx, w));
    if (auto x = complex_line(rep.components.back())) {
      NondegeneracyCertificate cert;
      cert.method = "complex_line";
      cert.witness = std::move(*x);
      throw DegenerateModel(cert);
    }
    rep.rigid_dims.push_back(rigid_split(rep.components.back()).rigid.size());
  }
  if (options.extended_weights) {
    for (int j = 2 * rep.d + 1; j <= 3 * rep.d; ++j) rep.diagnostics.push_back(solve_component(ctx, Weight{j, rep.d}));
  }
  if (options.verify_brackets) {
    rep.bracket_failures = verify_bracket_closure(rep);
    rep.brackets_checked = true;
  }
  return rep;
}

}  // namespace crsym
