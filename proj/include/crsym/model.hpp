#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crsym/fields.hpp"
#include "crsym/polynomial.hpp"

namespace crsym {

/// One broken model invariant.
struct Violation {
  std::string invariant;  // "nonzero", "real", "homogeneous", "no_pluriharmonic", "no_u"
  std::string term;       // offending monomial, empty when not term-specific
  std::string message;
};

/// Model hypersurface Im w = phi(z, zbar).
///
/// The degree d is the total degree of phi and is never supplied separately.
/// Construction does not validate; call validate() or require_valid().
class ModelSurface {
 public:
  ModelSurface() = default;
  explicit ModelSurface(MixedPoly phi);

  std::size_t n() const { return phi_.nvars(); }
  int d() const { return d_; }
  const MixedPoly& phi() const { return phi_; }
  /// d phi / d z_j.
  const MixedPoly& phi_z(std::size_t j) const { return phi_z_.at(j); }

 private:
  MixedPoly phi_;
  std::vector<MixedPoly> phi_z_;
  int d_ = 0;
};

std::vector<Violation> validate(const ModelSurface& m);

/// Throws ValidationError listing every violation.
void require_valid(const ModelSurface& m);

/// Exponents and coefficients of P = cP z^alpha, Q = cQ z^beta, R = cR z^gamma in C^3.
struct PQRSpec {
  Exponent alpha{0, 0, 0};
  Exponent beta{0, 0, 0};
  Exponent gamma{0, 0, 0};
  GaussRational cP{1};
  GaussRational cQ{1};
  GaussRational cR{1};

  friend bool operator==(const PQRSpec& a, const PQRSpec& b) = default;
};

std::vector<Violation> validate_spec(const PQRSpec& spec);

/// phi = cP conj(cQ) z^alpha zbar^beta + cQ conj(cP) z^beta zbar^alpha + |cR|^2 z^gamma zbar^gamma.
/// Throws ValidationError naming the violated invariant.
ModelSurface build_from_pqr(const PQRSpec& spec);

/// P, Q, R as holomorphic polynomials.
std::array<HoloPoly, 3> pqr_polys(const PQRSpec& spec);

/// Spec with (alpha, cP) and (beta, cQ) exchanged.
PQRSpec swap_pq(const PQRSpec& spec);

/// Spec with variables renamed: new variable k is old variable perm[k].
PQRSpec permute(const PQRSpec& spec, const std::array<int, 3>& perm);

/// det of the 3x3 matrix with columns alpha, beta, gamma.
Rational exponent_matrix_det(const PQRSpec& spec);

struct NondegeneracyCertificate {
  bool nondegenerate = false;
  std::string method;                   // "jacobian", "exponent_matrix", "bounded_search"
  std::optional<HoloPoly> jacobian;     // jacobian determinant when computed
  std::optional<Rational> exponent_det;
  std::optional<VectorField> witness;   // tangent holomorphic field when degenerate
};

/// Verdict from the Jacobian determinant of (P, Q, R). When all three are
/// monomials and the verdict is degenerate, the witness sum_j v_j z_j d/dz_j
/// with v in the kernel of the exponent matrix is attached.
NondegeneracyCertificate jacobian_nondegenerate(const HoloPoly& p, const HoloPoly& q,
                                                const HoloPoly& r);

/// Certificate for a monomial triple: Jacobian verdict plus exponent determinant.
NondegeneracyCertificate certify(const PQRSpec& spec);

/// Certificate for an arbitrary model: looks for z-only fields X with
/// X(phi) = 0 whose coefficients have degree at most `max_degree`
/// (default d). A found field proves degeneracy; none found is reported as
/// nondegenerate within the bound.
NondegeneracyCertificate certify(const ModelSurface& m, int max_degree = -1);

/// Thrown by the solver on degenerate input.
class DegenerateModel : public std::runtime_error {
 public:
  explicit DegenerateModel(NondegeneracyCertificate cert);
  const NondegeneracyCertificate& certificate() const { return cert_; }

 private:
  NondegeneracyCertificate cert_;
};

/// Monomial z^a zbar^b u^k rendered as in polynomial printing ("z1*zb2^3").
std::string mixed_monomial_string(std::size_t n, const Exponent& key);

}  // namespace crsym
