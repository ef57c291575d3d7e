#include "crsym/polynomial.hpp"

namespace crsym {

template class Polynomial<HoloLayout>;
template class Polynomial<MixedLayout>;

std::string HoloLayout::slot_name(std::size_t n, std::size_t slot) {
  return slot < n ? "z" + std::to_string(slot + 1) : "w";
}

std::string MixedLayout::slot_name(std::size_t n, std::size_t slot) {
  if (slot < n) return "z" + std::to_string(slot + 1);
  if (slot < 2 * n) return "zb" + std::to_string(slot - n + 1);
  return "u";
}

Exponent holo_key(const Exponent& z_exp, unsigned w_deg) {
  const std::size_t n = z_exp.size();
  Exponent key(n + 1);
  for (std::size_t j = 0; j < n; ++j) key.set(j, z_exp[j]);
  key.set(n, w_deg);
  return key;
}

Exponent mixed_key(const Exponent& z_exp, const Exponent& zbar_exp, unsigned u_deg) {
  const std::size_t n = z_exp.size();
  if (zbar_exp.size() != n) throw DimensionError("mixed_key: z and zbar sizes differ");
  Exponent key(2 * n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    key.set(j, z_exp[j]);
    key.set(n + j, zbar_exp[j]);
  }
  key.set(2 * n, u_deg);
  return key;
}

MixedParts split_mixed_key(std::size_t n, const Exponent& key) {
  MixedParts parts{Exponent(n), Exponent(n), key[2 * n]};
  for (std::size_t j = 0; j < n; ++j) {
    parts.z.set(j, key[j]);
    parts.zbar.set(j, key[n + j]);
  }
  return parts;
}

std::pair<Exponent, unsigned> split_holo_key(std::size_t n, const Exponent& key) {
  Exponent z(n);
  for (std::size_t j = 0; j < n; ++j) z.set(j, key[j]);
  return {z, key[n]};
}

HoloPoly holo_monomial(const Exponent& z_exp, unsigned w_deg, const GaussRational& c) {
  return HoloPoly::term(z_exp.size(), holo_key(z_exp, w_deg), c);
}

MixedPoly mixed_monomial(const Exponent& z_exp, const Exponent& zbar_exp, unsigned u_deg,
                         const GaussRational& c) {
  return MixedPoly::term(z_exp.size(), mixed_key(z_exp, zbar_exp, u_deg), c);
}

HoloPoly partial(const HoloPoly& p, std::size_t var) {
  if (var >= p.slots()) throw DimensionError("partial: variable index out of range");
  HoloPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d.set(var, e[var] - 1);
    r.add_term(d, c * GaussRational(static_cast<long>(e[var])));
  }
  return r;
}

MixedPoly partial_z(const MixedPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionError("partial_z: variable index out of range");
  MixedPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d.set(var, e[var] - 1);
    r.add_term(d, c * GaussRational(static_cast<long>(e[var])));
  }
  return r;
}

MixedPoly conjugate(const MixedPoly& p) {
  const std::size_t n = p.nvars();
  MixedPoly r(n);
  for (const auto& [e, c] : p.terms()) {
    Exponent s(e.size());
    for (std::size_t j = 0; j < n; ++j) {
      s.set(j, e[n + j]);
      s.set(n + j, e[j]);
    }
    s.set(2 * n, e[2 * n]);
    r.add_term(s, c.conj());
  }
  return r;
}

bool is_real(const MixedPoly& p) { return conjugate(p) == p; }

MixedPoly real_part(const MixedPoly& p) {
  return (p + conjugate(p)) * GaussRational(Rational(1, 2));
}

MixedPoly imag_part(const MixedPoly& p) {
  // (p - conj p) / (2i) = -(i/2) (p - conj p)
  return (p - conjugate(p)) * GaussRational(Rational(0), Rational(-1, 2));
}

MixedPoly holo_to_mixed(const HoloPoly& p) {
  const std::size_t n = p.nvars();
  MixedPoly r(n);
  for (const auto& [e, c] : p.terms()) {
    if (e[n] != 0) throw DimensionError("holo_to_mixed: polynomial depends on w");
    auto [z, w] = split_holo_key(n, e);
    r.add_term(mixed_key(z, Exponent(n), 0), c);
  }
  return r;
}

MixedPoly substitute_w(const HoloPoly& p, const MixedPoly& w_value) {
  const std::size_t n = p.nvars();
  if (w_value.nvars() != n) throw DimensionError("substitute_w: context mismatch");
  std::vector<MixedPoly> powers{MixedPoly::constant(n, 1)};
  MixedPoly r(n);
  for (const auto& [e, c] : p.terms()) {
    auto [z, m] = split_holo_key(n, e);
    while (powers.size() <= m) powers.push_back(powers.back() * w_value);
    r += powers[m].shifted(mixed_key(z, Exponent(n), 0), c);
  }
  return r;
}

namespace {

HoloPoly det_rec(const std::vector<std::vector<HoloPoly>>& m, std::vector<std::size_t>& cols,
                 std::size_t row, std::size_t n) {
  const std::size_t size = m.size();
  if (row == size) return HoloPoly::constant(n, 1);
  HoloPoly acc(n);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t col = cols[k];
    if (!m[row][col].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      HoloPoly minor = det_rec(m, cols, row + 1, n);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
      HoloPoly t = m[row][col] * minor;
      if (sign > 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

HoloPoly det(const std::vector<std::vector<HoloPoly>>& m) {
  const std::size_t size = m.size();
  if (size == 0) throw DimensionError("det: empty matrix");
  const std::size_t n = m[0][0].nvars();
  for (const auto& row : m) {
    if (row.size() != size) throw DimensionError("det: matrix is not square");
    for (const auto& p : row) {
      if (p.nvars() != n) throw DimensionError("det: variable context mismatch");
    }
  }
  std::vector<std::size_t> cols(size);
  for (std::size_t i = 0; i < size; ++i) cols[i] = i;
  return det_rec(m, cols, 0, n);
}

}  // namespace crsym
