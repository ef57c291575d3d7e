#pragma once

#include <cstddef>
#include <vector>

#include "crsym/fields.hpp"
#include "crsym/model.hpp"

namespace crsym {

/// Tangency of Re X to Im w = phi.
///
/// With A = G(z, u + i phi) and B = sum_j F_j(z, u + i phi) phi_{z_j}, the
/// residual Im A - 2 Re B equals Re K for K = -i A - 2 B. K is complex-linear
/// in X, so for a monomial field X and c = x + iy the residual of cX is
/// x Re K + y Re(iK). The context caches (u + i phi)^m and its products with
/// phi_{z_j}, which makes K of a monomial field a single shifted copy.
///
/// Not thread-safe: the caches grow on demand.
class TangencyContext {
 public:
  explicit TangencyContext(const ModelSurface& m);

  const ModelSurface& model() const { return *model_; }

  /// K for z^z_exp w^w_deg d/dslot (slot n is d/dw).
  MixedPoly monomial_k(std::size_t slot, const Exponent& z_exp, unsigned w_deg);

  /// K for an arbitrary field.
  MixedPoly k_of(const VectorField& x);

  /// Im G - 2 Re sum F_j phi_{z_j} after w = u + i phi.
  MixedPoly residual(const VectorField& x);

 private:
  const MixedPoly& w_power(unsigned m);
  const MixedPoly& w_power_phi_z(unsigned m, std::size_t j);

  const ModelSurface* model_;
  MixedPoly w_;                                 // u + i phi
  std::vector<MixedPoly> powers_;               // powers_[m] = w_^m
  std::vector<std::vector<MixedPoly>> phi_z_;   // phi_z_[m][j] = -2 w_^m phi_{z_j}
};

/// Residual polynomial T; X is tangent iff T == 0.
MixedPoly tangency_residual(const VectorField& x, const ModelSurface& m);

inline bool is_tangent(const VectorField& x, const ModelSurface& m) {
  return tangency_residual(x, m).is_zero();
}

}  // namespace crsym
