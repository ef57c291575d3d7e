#include "crsym/tangency.hpp"

namespace crsym {

TangencyContext::TangencyContext(const ModelSurface& m) : model_(&m) {
  const std::size_t n = m.n();
  Exponent u(2 * n + 1);
  u.set(2 * n, 1);
  w_ = MixedPoly::term(n, u, 1) + m.phi() * GaussRational::i();
  powers_.push_back(MixedPoly::constant(n, 1));
}

const MixedPoly& TangencyContext::w_power(unsigned m) {
  while (powers_.size() <= m) powers_.push_back(powers_.back() * w_);
  return powers_[m];
}

const MixedPoly& TangencyContext::w_power_phi_z(unsigned m, std::size_t j) {
  while (phi_z_.size() <= m) {
    const MixedPoly& wm = w_power(static_cast<unsigned>(phi_z_.size()));
    std::vector<MixedPoly> row;
    for (std::size_t k = 0; k < model_->n(); ++k) row.push_back(wm * model_->phi_z(k) * GaussRational(-2));
    phi_z_.push_back(std::move(row));
  }
  return phi_z_[m][j];
}

MixedPoly TangencyContext::monomial_k(std::size_t slot, const Exponent& z_exp, unsigned w_deg) {
  const std::size_t n = model_->n();
  const Exponent shift = mixed_key(z_exp, Exponent(n), 0);
  if (slot == n) return w_power(w_deg).shifted(shift, -GaussRational::i());
  return w_power_phi_z(w_deg, slot).shifted(shift);
}

MixedPoly TangencyContext::k_of(const VectorField& x) {
  const std::size_t n = model_->n();
  if (x.nvars() != n) throw DimensionError("tangency: field and model dimensions differ");
  MixedPoly k(n);
  for (std::size_t s = 0; s <= n; ++s) {
    for (const auto& [key, c] : x.component(s).terms()) {
      auto [z, m] = split_holo_key(n, key);
      k += monomial_k(s, z, m) * c;
    }
  }
  return k;
}

MixedPoly TangencyContext::residual(const VectorField& x) { return real_part(k_of(x)); }

MixedPoly tangency_residual(const VectorField& x, const ModelSurface& m) {
  TangencyContext ctx(m);
  return ctx.residual(x);
}

}  // namespace crsym
