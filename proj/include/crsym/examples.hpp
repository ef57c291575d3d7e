#pragma once

#include <string>
#include <vector>

#include "crsym/fields.hpp"
#include "crsym/pipeline.hpp"

namespace crsym::examples {

/// Im w = (z1^2 z2 z3^3 + z1 z2^4 z3) zb1^2 + conj + |z1^2 z2^2|^2, d = 8.
ModelSpec imag_diagonal();
/// i(11 z1 d/dz1 + 3 z2 d/dz2 - z3 d/dz3), tangent to imag_diagonal().
VectorField imag_diagonal_rotation();

/// P = z1 z3, Q = z3^2, R = z2 z3.
PQRSpec nilpotent_triangular();
/// P = i z1 z2, Q = z1 z3, R = z1^2.
PQRSpec nilpotent_pair();
/// alpha = (1,1,2), beta = (2,1,3), gamma = (1,1,3).
PQRSpec exotic_dim3();
/// alpha = (1,0,0), beta = (0,l,0), gamma = (0,(l-1)/2,1); l odd, l >= 3.
PQRSpec exotic_family(unsigned l = 3);
/// alpha = (1,k,0), beta = (0,k+1,0), gamma = (0,k,1); k >= 1.
PQRSpec nilpotent_family1(unsigned k = 1);

/// Names accepted by by_name.
const std::vector<std::string>& names();

/// Built-in model by name; `param` is l or k where applicable (0 = default).
/// Throws std::invalid_argument for unknown names or bad parameters.
ModelSpec by_name(const std::string& name, unsigned param = 0);

}  // namespace crsym::examples
