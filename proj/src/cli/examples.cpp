#include "crsym/examples.hpp"

#include <stdexcept>

namespace crsym::examples {

ModelSpec imag_diagonal() {
  MixedPoly phi(3);
  auto add = [&](Exponent z, Exponent zb) {
    phi.add_term(mixed_key(z, zb, 0), 1);
  };
  add({2, 1, 3}, {2, 0, 0});
  add({1, 4, 1}, {2, 0, 0});
  add({2, 0, 0}, {2, 1, 3});
  add({2, 0, 0}, {1, 4, 1});
  add({2, 2, 0}, {2, 2, 0});
  return make_spec(std::move(phi), "imag-diagonal");
}

VectorField imag_diagonal_rotation() {
  VectorField x(3);
  const long coeff[3] = {11, 3, -1};
  for (std::size_t j = 0; j < 3; ++j) {
    Exponent z(3);
    z.set(j, 1);
    x.f(j) = holo_monomial(z, 0, GaussRational(0, coeff[j]));
  }
  return x;
}

PQRSpec nilpotent_triangular() {
  PQRSpec s;
  s.alpha = {1, 0, 1};
  s.beta = {0, 0, 2};
  s.gamma = {0, 1, 1};
  return s;
}

PQRSpec nilpotent_pair() {
  PQRSpec s;
  s.alpha = {1, 1, 0};
  s.beta = {1, 0, 1};
  s.gamma = {2, 0, 0};
  s.cP = GaussRational::i();
  return s;
}

PQRSpec exotic_dim3() {
  PQRSpec s;
  s.alpha = {1, 1, 2};
  s.beta = {2, 1, 3};
  s.gamma = {1, 1, 3};
  return s;
}

PQRSpec exotic_family(unsigned l) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("exotic-family: l must be odd and at least 3");
  PQRSpec s;
  s.alpha = {1, 0, 0};
  s.beta = {0, l, 0};
  s.gamma = {0, (l - 1) / 2, 1};
  return s;
}

PQRSpec nilpotent_family1(unsigned k) {
  if (k < 1) throw std::invalid_argument("nilpotent-family1: k must be at least 1");
  PQRSpec s;
  s.alpha = {1, k, 0};
  s.beta = {0, k + 1, 0};
  s.gamma = {0, k, 1};
  return s;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"imag-diagonal", "nilpotent-triangular", "nilpotent-pair",
                                          "exotic-dim3",   "exotic-family",        "nilpotent-family1"};
  return n;
}

ModelSpec by_name(const std::string& name, unsigned param) {
  if (name == "imag-diagonal") return imag_diagonal();
  if (name == "nilpotent-triangular") return make_spec(nilpotent_triangular(), name);
  if (name == "nilpotent-pair") return make_spec(nilpotent_pair(), name);
  if (name == "exotic-dim3") return make_spec(exotic_dim3(), name);
  if (name == "exotic-family") return make_spec(exotic_family(param == 0 ? 3 : param), name);
  if (name == "nilpotent-family1") return make_spec(nilpotent_family1(param == 0 ? 1 : param), name);
  throw std::invalid_argument("unknown example: " + name);
}

}  // namespace crsym::examples
