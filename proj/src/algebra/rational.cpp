#include "crsym/rational.hpp"

#include <stdexcept>

#include "crsym/errors.hpp"

namespace crsym {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("GaussRational: division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "i";
  }
  if (re_.is_zero()) return imag;
  if (imag.front() != '-') imag = "+" + imag;
  return re_.to_string() + imag;
}

}  // namespace crsym
