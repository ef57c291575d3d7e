#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crsym/fields.hpp"
#include "crsym/model.hpp"
#include "crsym/tangency.hpp"

namespace crsym {

/// Weights j/d - 1 for j = 0..2d.
std::vector<Weight> candidate_weights(int d);

/// One monomial slot of the ansatz: z^z w^w d/dslot (slot n is d/dw).
struct AnsatzTerm {
  std::size_t slot = 0;
  Exponent z;
  unsigned w = 0;
};

/// All monomial fields of weight index j, slot-major (d/dz_1 .. d/dz_n, d/dw),
/// then by w-degree, then descending graded-lex in z.
std::vector<AnsatzTerm> ansatz_monomials(const Weight& mu, std::size_t n);

std::vector<VectorField> ansatz_basis(const Weight& mu, std::size_t n);

struct GradedComponent {
  Weight weight;
  std::size_t dim = 0;              // real dimension
  std::vector<VectorField> basis;   // real basis
  std::size_t ansatz_size = 0;      // complex unknowns
};

/// Solves the tangency equations for all fields of weight mu.
///
/// Each complex unknown splits into real and imaginary parts; only
/// representatives (a, b, k) with (a, b, k) >= (b, a, k) are constrained,
/// since the residual is real. Every returned basis field is re-checked
/// against the direct residual and a TheoremViolation is thrown on mismatch.
GradedComponent solve_component(TangencyContext& ctx, const Weight& mu);
GradedComponent solve_component(const ModelSurface& m, const Weight& mu);

/// Same, with an explicit list of ansatz terms (used by regression tests).
GradedComponent solve_with_ansatz(TangencyContext& ctx, const Weight& mu,
                                  const std::vector<AnsatzTerm>& ansatz);

struct RigidSplit {
  std::vector<VectorField> rigid;
  std::vector<VectorField> nonrigid;
};

/// Basis change separating a basis of the w-free subspace from a complement.
RigidSplit rigid_split(const GradedComponent& c);

struct BracketFailure {
  Weight left;
  Weight right;
  std::string reason;
};

struct AlgebraOptions {
  /// Run the bounded nondegeneracy search before solving. Callers holding a
  /// stronger certificate (PQR Jacobian) pass it in `certificate` instead.
  bool certify = true;
  std::optional<NondegeneracyCertificate> certificate;
  bool verify_brackets = true;
  /// Also solve weights 1 + 1/d .. 2 and report them as diagnostics.
  bool extended_weights = false;
};

/// Reads CRSYM_DIAG_WEIGHTS; "extended" turns on the extended weights.
AlgebraOptions default_algebra_options();

struct AlgebraReport {
  ModelSurface model;
  int d = 0;
  std::vector<GradedComponent> components;   // indices 0..2d
  std::vector<std::size_t> rigid_dims;       // per component
  std::vector<GradedComponent> diagnostics;  // indices 2d+1..3d when enabled
  std::vector<BracketFailure> bracket_failures;
  bool brackets_checked = false;
  NondegeneracyCertificate certificate;

  const GradedComponent& at(int index) const { return components.at(static_cast<std::size_t>(index)); }
  std::size_t dim(int index) const { return at(index).dim; }
  std::size_t total() const;
  /// Rigid fields of weight strictly between 0 and 1.
  std::size_t gc() const;
  std::size_t g1() const { return dim(2 * d); }
  std::size_t g0() const { return dim(d); }
  std::size_t g_minus_1() const { return dim(0); }
  /// Component of weight -1/d.
  std::size_t g_minus_1_over_d() const { return dim(d - 1); }
  /// Component of weight 1 - 1/d.
  std::size_t g_1_minus_1_over_d() const { return dim(2 * d - 1); }
};

/// Every graded component of hol(M, 0) for a valid, nondegenerate model.
/// Throws ValidationError on invalid input and DegenerateModel when the
/// model is degenerate or a solved component is closed under multiplication
/// by i (which happens only for degenerate models).
AlgebraReport full_algebra(const ModelSurface& m, const AlgebraOptions& options = default_algebra_options());

/// Checks [g_mu, g_nu] in g_{mu+nu} on all basis pairs.
std::vector<BracketFailure> verify_bracket_closure(const AlgebraReport& report);

}  // namespace crsym
