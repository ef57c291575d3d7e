#include "crsym/pipeline.hpp"

namespace crsym {

ModelSpec make_spec(const PQRSpec& pqr, std::string name) {
  return {std::move(name), build_from_pqr(pqr), pqr};
}

ModelSpec make_spec(MixedPoly phi, std::string name) {
  return {std::move(name), ModelSurface(std::move(phi)), std::nullopt};
}

std::optional<KnownResult> known_result(const PQRSpec& s) {
  // Im w = z1 zb2^l + z2^l zb1 + |z2^((l-1)/2) z3|^2, l odd
  const unsigned l = s.beta[1];
  if (l >= 3 && l % 2 == 1 && s.alpha == Exponent{1, 0, 0} && s.beta == Exponent{0, l, 0} &&
      s.gamma == Exponent{0, (l - 1) / 2, 1}) {
    return KnownResult{"exotic-family", "dim g_c = 3 and dim g = 13", 13, 3, 7, 13};
  }
  const unsigned k = s.alpha[1];
  if (k >= 1 && s.alpha == Exponent{1, k, 0} && s.beta == Exponent{0, k + 1, 0} &&
      s.gamma == Exponent{0, k, 1}) {
    return KnownResult{"nilpotent-family1", "dim g_c = 0 and dim g = 9", 9, 0, 6, 9};
  }
  return std::nullopt;
}

Analysis analyze(const ModelSpec& spec, const AlgebraOptions& options) {
  require_valid(spec.model);
  AlgebraOptions opts = options;
  if (spec.pqr) {
    NondegeneracyCertificate cert = certify(*spec.pqr);
    if (!cert.nondegenerate) throw DegenerateModel(cert);
    opts.certificate = std::move(cert);
  }
  Analysis a;
  a.spec = spec;
  a.report = full_algebra(spec.model, opts);
  a.prediction = predict(a.report, spec.pqr);
  a.discrepancies = crosscheck(a.report, a.prediction);
  if (spec.pqr) a.known = known_result(*spec.pqr);
  return a;
}

}  // namespace crsym
