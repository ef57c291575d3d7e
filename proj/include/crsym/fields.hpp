#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crsym/polynomial.hpp"

namespace crsym {

/// Holomorphic vector field sum_j F_j d/dz_j + G d/dw on C^{n+1}.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::size_t n) : f_(n, HoloPoly(n)), g_(n) {}
  VectorField(std::vector<HoloPoly> f, HoloPoly g);

  /// Monomial field c * z^z_exp * w^w_deg d/dslot, slot n meaning d/dw.
  static VectorField monomial(std::size_t n, std::size_t slot, const Exponent& z_exp,
                              unsigned w_deg, const GaussRational& c = 1);

  std::size_t nvars() const { return f_.size(); }
  const HoloPoly& f(std::size_t j) const { return f_.at(j); }
  HoloPoly& f(std::size_t j) { return f_.at(j); }
  const HoloPoly& g() const { return g_; }
  HoloPoly& g() { return g_; }
  /// Coefficient polynomial of d/dz_slot, or of d/dw when slot == n.
  const HoloPoly& component(std::size_t slot) const { return slot < f_.size() ? f_[slot] : g_; }
  HoloPoly& component(std::size_t slot) { return slot < f_.size() ? f_[slot] : g_; }

  bool is_zero() const;
  /// No coefficient depends on w.
  bool is_rigid() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const GaussRational& s);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const GaussRational& s) { return a *= s; }
  friend VectorField operator*(const GaussRational& s, VectorField a) { return a *= s; }
  friend bool operator==(const VectorField& a, const VectorField& b) = default;

  /// "(z2*z3)*d/dz1 + (w)*d/dw"; "0" for the zero field.
  std::string to_string() const;

 private:
  std::vector<HoloPoly> f_;
  HoloPoly g_;
};

/// Weight j/d - 1 of a graded component; `index` is j.
struct Weight {
  int index = 0;
  int degree = 1;

  Rational value() const { return Rational(index - degree, degree); }
  std::string to_string() const { return value().to_string(); }
  friend bool operator==(const Weight& a, const Weight& b) = default;
};

struct WeightResult {
  enum class Kind { Homogeneous, Inhomogeneous, Zero };
  Kind kind = Kind::Zero;
  Weight weight;

  bool homogeneous() const { return kind == Kind::Homogeneous; }
};

/// Weight index of one monomial coefficient (z^a w^m in slot `slot`).
int monomial_weight_index(std::size_t n, std::size_t slot, const Exponent& z_exp, unsigned w_deg,
                          int d);

/// The unique weight of x under weight(z_j) = 1/d, weight(w) = 1.
WeightResult weight_of(const VectorField& x, int d);

/// x(p) = sum_j F_j dp/dz_j + G dp/dw.
HoloPoly apply(const VectorField& x, const HoloPoly& p);

/// Commutator [x, y] of derivations.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// E = sum_j (1/d) z_j d/dz_j + w d/dw.
VectorField grading_element(std::size_t n, int d);

/// Complex n x n matrix (a_jk) of the z-linear part: F_j ∋ a_jk z_k.
std::vector<std::vector<GaussRational>> linear_part(const VectorField& x);

/// Field sum_{j,k} a_jk z_k d/dz_j built from a matrix.
VectorField linear_field(const std::vector<std::vector<GaussRational>>& a);

/// True iff m^n = 0 for the n x n matrix m.
bool is_nilpotent(const std::vector<std::vector<GaussRational>>& m);

// --- Real-span utilities ------------------------------------------------------
//
// Fields are compared as vectors over R: every (slot, monomial) coefficient
// contributes its real and imaginary part as two coordinates.

/// Real rank of a family of fields.
std::size_t real_rank(const std::vector<VectorField>& fields);

/// True iff x lies in the real span of `basis`.
bool in_real_span(const VectorField& x, const std::vector<VectorField>& basis);

/// True iff the two families span the same real subspace.
bool same_real_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);

}  // namespace crsym
