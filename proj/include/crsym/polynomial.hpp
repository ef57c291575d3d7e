#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crsym/errors.hpp"
#include "crsym/exponent.hpp"
#include "crsym/rational.hpp"

namespace crsym {

/// Holomorphic layout: slots z_1..z_n, w.
struct HoloLayout {
  static std::size_t slots(std::size_t n) { return n + 1; }
  static std::string slot_name(std::size_t n, std::size_t slot);
};

/// Mixed layout: slots z_1..z_n, zbar_1..zbar_n, u.
struct MixedLayout {
  static std::size_t slots(std::size_t n) { return 2 * n + 1; }
  static std::string slot_name(std::size_t n, std::size_t slot);
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
///
/// `n` is the number of z-variables; the layout decides the remaining slots.
/// Zero coefficients are never stored. Terms iterate largest-first in graded
/// lexicographic order, which is also the print order.
template <class Layout>
class Polynomial {
 public:
  using TermMap = std::map<Exponent, GaussRational, DescendingGrlex>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {
    if (Layout::slots(n) > Exponent::kMaxSlots) throw DimensionError("Polynomial: too many variables");
  }

  static Polynomial constant(std::size_t n, const GaussRational& c) {
    Polynomial p(n);
    p.add_term(Exponent(Layout::slots(n)), c);
    return p;
  }

  static Polynomial term(std::size_t n, const Exponent& e, const GaussRational& c) {
    Polynomial p(n);
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return n_; }
  std::size_t slots() const { return Layout::slots(n_); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussRational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRational() : it->second;
  }

  /// Adds c * x^e, merging with an existing term and dropping exact zeros.
  void add_term(const Exponent& e, const GaussRational& c) {
    if (e.size() != slots()) throw DimensionError("Polynomial: exponent has wrong slot count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Maximum total degree over all slots; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.total()));
    return d;
  }

  /// Maximum exponent in one slot; -1 for the zero polynomial.
  int degree_in(std::size_t slot) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[slot]));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const GaussRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const GaussRational& s) { return a *= s; }
  friend Polynomial operator*(const GaussRational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * GaussRational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_context(b);
    Polynomial r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }

  /// Multiplies by the monomial c * x^e.
  Polynomial shifted(const Exponent& e, const GaussRational& c = GaussRational(1)) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [ea, ca] : terms_) r.terms_.emplace(ea + e, ca * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t s = 0; s < e.size(); ++s) {
        if (e[s] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += Layout::slot_name(n_, s);
        if (e[s] > 1) mono += "^" + std::to_string(e[s]);
      }
      std::string coeff;
      bool negative = false;
      if (c.is_real()) {
        negative = c.re().sign() < 0;
        Rational a = negative ? -c.re() : c.re();
        if (!(a == Rational(1)) || mono.empty()) coeff = a.to_string();
      } else if (c.is_imaginary()) {
        negative = c.im().sign() < 0;
        Rational a = negative ? -c.im() : c.im();
        coeff = a == Rational(1) ? "i" : a.to_string() + "i";
      } else {
        coeff = "(" + c.to_string() + ")";
      }
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      out += coeff;
      if (!coeff.empty() && !mono.empty()) out += "*";
      out += mono;
      first = false;
    }
    return out;
  }

 private:
  void check_context(const Polynomial& o) const {
    if (n_ != o.n_) throw DimensionError("Polynomial: variable context mismatch");
  }

  std::size_t n_ = 0;
  TermMap terms_;
};

/// Polynomial in (z, w).
using HoloPoly = Polynomial<HoloLayout>;
/// Polynomial in (z, zbar, u).
using MixedPoly = Polynomial<MixedLayout>;

extern template class Polynomial<HoloLayout>;
extern template class Polynomial<MixedLayout>;

// --- Construction helpers ---------------------------------------------------

/// c * z^z_exp * w^w_deg.
HoloPoly holo_monomial(const Exponent& z_exp, unsigned w_deg, const GaussRational& c = 1);
/// c * z^z_exp * zbar^zbar_exp * u^u_deg.
MixedPoly mixed_monomial(const Exponent& z_exp, const Exponent& zbar_exp, unsigned u_deg,
                         const GaussRational& c = 1);

/// Builds the combined slot exponent of a holomorphic term.
Exponent holo_key(const Exponent& z_exp, unsigned w_deg);
/// Builds the combined slot exponent of a mixed term.
Exponent mixed_key(const Exponent& z_exp, const Exponent& zbar_exp, unsigned u_deg);

/// Splits a mixed key into its z-part, zbar-part and u-degree.
struct MixedParts {
  Exponent z;
  Exponent zbar;
  unsigned u = 0;
};
MixedParts split_mixed_key(std::size_t n, const Exponent& key);

/// Splits a holomorphic key into its z-part and w-degree.
std::pair<Exponent, unsigned> split_holo_key(std::size_t n, const Exponent& key);

// --- Operations -------------------------------------------------------------

/// Formal partial derivative in slot `var` (0..n-1 for z_j, n for w).
HoloPoly partial(const HoloPoly& p, std::size_t var);

/// Partial derivative of a mixed polynomial with respect to z_var.
MixedPoly partial_z(const MixedPoly& p, std::size_t var);

/// Swaps z and zbar exponents of every term and conjugates coefficients.
MixedPoly conjugate(const MixedPoly& p);

/// True iff p equals its conjugate.
bool is_real(const MixedPoly& p);

/// (p + conj p) / 2 and (p - conj p) / (2i).
MixedPoly real_part(const MixedPoly& p);
MixedPoly imag_part(const MixedPoly& p);

/// Regards a w-free holomorphic polynomial as a mixed polynomial in z.
/// Throws DimensionError if p depends on w.
MixedPoly holo_to_mixed(const HoloPoly& p);

/// p(z, w) with w replaced by `w_value`, expanded exactly.
MixedPoly substitute_w(const HoloPoly& p, const MixedPoly& w_value);

/// Determinant of a square matrix of holomorphic polynomials (cofactor expansion).
HoloPoly det(const std::vector<std::vector<HoloPoly>>& m);

}  // namespace crsym
