#include "crsym/fields.hpp"

#include <map>
#include <optional>

#include "crsym/linalg.hpp"

namespace crsym {

VectorField::VectorField(std::vector<HoloPoly> f, HoloPoly g) : f_(std::move(f)), g_(std::move(g)) {
  const std::size_t n = f_.size();
  if (g_.nvars() != n) throw DimensionError("VectorField: G has wrong variable count");
  for (const auto& p : f_) {
    if (p.nvars() != n) throw DimensionError("VectorField: F_j has wrong variable count");
  }
}

VectorField VectorField::monomial(std::size_t n, std::size_t slot, const Exponent& z_exp,
                                  unsigned w_deg, const GaussRational& c) {
  if (slot > n) throw DimensionError("VectorField::monomial: slot out of range");
  VectorField x(n);
  x.component(slot) = holo_monomial(z_exp, w_deg, c);
  return x;
}

bool VectorField::is_zero() const {
  if (!g_.is_zero()) return false;
  for (const auto& p : f_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool VectorField::is_rigid() const {
  const std::size_t n = nvars();
  for (std::size_t s = 0; s <= n; ++s) {
    if (component(s).degree_in(n) > 0) return false;
  }
  return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.nvars() != nvars()) throw DimensionError("VectorField: context mismatch");
  for (std::size_t j = 0; j < f_.size(); ++j) f_[j] += o.f_[j];
  g_ += o.g_;
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (o.nvars() != nvars()) throw DimensionError("VectorField: context mismatch");
  for (std::size_t j = 0; j < f_.size(); ++j) f_[j] -= o.f_[j];
  g_ -= o.g_;
  return *this;
}

VectorField& VectorField::operator*=(const GaussRational& s) {
  for (auto& p : f_) p *= s;
  g_ *= s;
  return *this;
}

std::string VectorField::to_string() const {
  std::string out;
  const std::size_t n = nvars();
  for (std::size_t s = 0; s <= n; ++s) {
    const HoloPoly& p = component(s);
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*d/d" + (s < n ? "z" + std::to_string(s + 1) : std::string("w"));
  }
  return out.empty() ? "0" : out;
}

int monomial_weight_index(std::size_t n, std::size_t slot, const Exponent& z_exp, unsigned w_deg,
                          int d) {
  // weighted degree of the coefficient is (|a| + m d)/d; d/dz_j lowers it by
  // 1/d and d/dw by 1. index = (weight + 1) * d.
  const int deg = static_cast<int>(z_exp.total()) + static_cast<int>(w_deg) * d;
  return slot < n ? deg - 1 + d : deg;
}

WeightResult weight_of(const VectorField& x, int d) {
  const std::size_t n = x.nvars();
  std::optional<int> index;
  for (std::size_t s = 0; s <= n; ++s) {
    for (const auto& [key, c] : x.component(s).terms()) {
      auto [z, m] = split_holo_key(n, key);
      const int j = monomial_weight_index(n, s, z, m, d);
      if (index && *index != j) return {WeightResult::Kind::Inhomogeneous, {}};
      index = j;
    }
  }
  if (!index) return {WeightResult::Kind::Zero, {}};
  return {WeightResult::Kind::Homogeneous, Weight{*index, d}};
}

HoloPoly apply(const VectorField& x, const HoloPoly& p) {
  const std::size_t n = x.nvars();
  if (p.nvars() != n) throw DimensionError("apply: context mismatch");
  HoloPoly r(n);
  for (std::size_t s = 0; s <= n; ++s) {
    const HoloPoly& c = x.component(s);
    if (c.is_zero()) continue;
    HoloPoly dp = partial(p, s);
    if (!dp.is_zero()) r += c * dp;
  }
  return r;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  const std::size_t n = x.nvars();
  if (y.nvars() != n) throw DimensionError("lie_bracket: context mismatch");
  VectorField r(n);
  for (std::size_t s = 0; s <= n; ++s) {
    r.component(s) = apply(x, y.component(s)) - apply(y, x.component(s));
  }
  return r;
}

VectorField grading_element(std::size_t n, int d) {
  if (n < 1 || d < 1) throw DimensionError("grading_element: n and d must be positive");
  VectorField e(n);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent z(n);
    z.set(j, 1);
    e.f(j) = holo_monomial(z, 0, Rational(1, d));
  }
  e.g() = holo_monomial(Exponent(n), 1);
  return e;
}

std::vector<std::vector<GaussRational>> linear_part(const VectorField& x) {
  const std::size_t n = x.nvars();
  std::vector<std::vector<GaussRational>> a(n, std::vector<GaussRational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Exponent z(n);
      z.set(k, 1);
      a[j][k] = x.f(j).coefficient(holo_key(z, 0));
    }
  }
  return a;
}

VectorField linear_field(const std::vector<std::vector<GaussRational>>& a) {
  const std::size_t n = a.size();
  VectorField x(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Exponent z(n);
      z.set(k, 1);
      x.f(j).add_term(holo_key(z, 0), a[j][k]);
    }
  }
  return x;
}

bool is_nilpotent(const std::vector<std::vector<GaussRational>>& m) {
  const std::size_t n = m.size();
  auto power = m;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<std::vector<GaussRational>> next(n, std::vector<GaussRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (power[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * m[k][j];
      }
    }
    power = std::move(next);
  }
  for (const auto& row : power) {
    for (const auto& v : row) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

namespace {

/// Rows = fields, columns = (slot, monomial, re/im) coordinates.
RatMatrix coordinate_matrix(const std::vector<const VectorField*>& fields) {
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
  for (const VectorField* x : fields) {
    for (std::size_t s = 0; s <= x->nvars(); ++s) {
      for (const auto& [key, c] : x->component(s).terms()) index.try_emplace({s, key}, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [k, v] : index) v = next++;
  RatMatrix m(fields.size(), 2 * index.size());
  for (std::size_t r = 0; r < fields.size(); ++r) {
    const VectorField& x = *fields[r];
    for (std::size_t s = 0; s <= x.nvars(); ++s) {
      for (const auto& [key, c] : x.component(s).terms()) {
        const std::size_t col = index.at({s, key});
        m(r, 2 * col) = c.re();
        m(r, 2 * col + 1) = c.im();
      }
    }
  }
  return m;
}

}  // namespace

std::size_t real_rank(const std::vector<VectorField>& fields) {
  std::vector<const VectorField*> ptrs;
  for (const auto& x : fields) ptrs.push_back(&x);
  return rank(coordinate_matrix(ptrs));
}

bool in_real_span(const VectorField& x, const std::vector<VectorField>& basis) {
  std::vector<const VectorField*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  const std::size_t r0 = rank(coordinate_matrix(ptrs));
  ptrs.push_back(&x);
  return rank(coordinate_matrix(ptrs)) == r0;
}

bool same_real_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  std::vector<VectorField> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = real_rank(both);
  return r == real_rank(a) && r == real_rank(b);
}

}  // namespace crsym
