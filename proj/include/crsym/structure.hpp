#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crsym/fields.hpp"
#include "crsym/grading.hpp"
#include "crsym/model.hpp"

namespace crsym {

using ComplexMatrix = std::vector<std::vector<GaussRational>>;

/// X = D + N for a rotation X; N optionally split as N1 + N2.
struct RotationDecomposition {
  VectorField diagonal;
  VectorField offdiag;
  std::optional<std::pair<VectorField, VectorField>> split;
  bool n_nilpotent = false;
  bool n1_nilpotent = false;
  bool n2_nilpotent = false;

  /// N is nilpotent, or a split into two nilpotent tangent pieces was found.
  bool ok() const { return n_nilpotent || (split && n1_nilpotent && n2_nilpotent); }
};

/// Splits the z-linear part of a weight-0 field; the d/dw part is dropped.
/// Throws TheoremViolation if D or N is not tangent to m.
RotationDecomposition split_rotation(const VectorField& x, const ModelSurface& m);

enum class NormalFamily { Family1, Family2, Family3, None };

std::string to_string(NormalFamily f);

struct NormalFormClass {
  NormalFamily family = NormalFamily::None;
  std::array<int, 3> permutation{0, 1, 2};  // new variable k is old variable permutation[k]
  bool swapped = false;                     // P and Q exchanged
  std::vector<unsigned> parameters;         // k, or (alpha2, alpha3, gamma2, gamma3)

  /// Real dimension of the nilpotent rotations: 3, 2, 1, 0.
  std::size_t predicted_nilpotent_params() const;
};

/// Matches the three nilpotent normal forms under variable permutations and
/// the P/Q swap. Families are tried in order; within a family permutations
/// are tried as identity, (12), (13), (23), (123), (132), each first without
/// and then with the swap.
NormalFormClass classify_normal_form(const PQRSpec& spec);

/// The six permutations in classification order.
const std::array<std::array<int, 3>, 6>& permutation_order();

struct GcPrediction {
  std::size_t dim = 0;
  std::vector<VectorField> generators;
  std::string reason;  // "ok", "equal_degrees", "levi_nondegenerate", "degenerate"
};

/// Rigid fields of weight in (0, 1) from the two exponent-level cases:
/// X(P) = kR, X(R) = -conj(k) Q, X(Q) = 0 (shift (deg Q - deg P)/2), and
/// X(P) = icQ, X(Q) = X(R) = 0 (shift deg Q - deg P), with deg P < deg Q
/// after orientation. Only polynomial solutions are kept.
GcPrediction predict_gc(const PQRSpec& spec);

struct GMinusPrediction {
  std::size_t dim = 0;
  std::vector<VectorField> generators;
};

/// Fields a d/dz_j + 2i conj(a) conj(c) S d/dw where P (or Q) is c z_j and the
/// other two monomials S, R do not involve z_j.
GMinusPrediction predict_g_minus(const PQRSpec& spec);

/// Y = sum_j l_j z_j w d/dz_j + w^2/2 d/dw with l.alpha = l.beta = l.gamma = 1/2.
/// Throws TheoremViolation if the system is singular or Y is not tangent.
VectorField g1_generator(const PQRSpec& spec);
/// The coefficients l_j of g1_generator.
std::array<Rational, 3> g1_lambda(const PQRSpec& spec);

struct RotationSummary {
  std::size_t real_diagonal_dim = 0;       // s-part
  std::size_t imaginary_diagonal_dim = 0;  // t-part
  std::size_t offdiagonal_dim = 0;         // dimension of the N-parts
  bool has_real_diagonal = false;
  bool has_imaginary_diagonal = false;
  std::size_t fields_checked = 0;
  std::size_t decompositions_ok = 0;
  std::size_t splits_used = 0;
  std::vector<std::string> failures;
};

/// Linear parts of the rigid weight-0 fields, intersected with the real and
/// imaginary diagonal matrices. The grading element is not rigid and so is
/// never counted.
RotationSummary diagonal_rotation_flags(const GradedComponent& g0);

/// Flags plus split_rotation on every rigid weight-0 basis field.
RotationSummary analyze_rotations(const AlgebraReport& report);

struct StructuralPrediction {
  bool is_pqr = false;
  std::string reason;  // why PQR predictors were skipped
  PQRSpec spec;
  NormalFormClass normal_form;
  GcPrediction gc;
  GMinusPrediction g_minus;
  std::optional<VectorField> g1_field;
  RotationSummary rotations;
};

StructuralPrediction predict(const AlgebraReport& report, const std::optional<PQRSpec>& spec);

struct Discrepancy {
  std::string check;
  std::string message;
};

/// Compares solver output against the structural predictions.
std::vector<Discrepancy> crosscheck(const AlgebraReport& report, const StructuralPrediction& pred);

}  // namespace crsym
