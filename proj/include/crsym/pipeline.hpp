#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crsym/grading.hpp"
#include "crsym/model.hpp"
#include "crsym/structure.hpp"

namespace crsym {

/// A model as read from a spec file: either a monomial triple or a term list.
struct ModelSpec {
  std::string name;
  ModelSurface model;
  std::optional<PQRSpec> pqr;
};

ModelSpec make_spec(const PQRSpec& pqr, std::string name = "");
ModelSpec make_spec(MixedPoly phi, std::string name = "");

/// A published total dimension for a specific family.
struct KnownResult {
  std::string family;
  std::string statement;
  std::size_t stated_total = 0;
  std::size_t stated_gc = 0;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
};

/// Known totals for the two extremal families, matched on exponents.
std::optional<KnownResult> known_result(const PQRSpec& spec);

struct Analysis {
  ModelSpec spec;
  AlgebraReport report;
  StructuralPrediction prediction;
  std::vector<Discrepancy> discrepancies;
  std::optional<KnownResult> known;
};

/// validate -> certify -> full_algebra -> predict -> crosscheck.
/// Throws ValidationError or DegenerateModel.
Analysis analyze(const ModelSpec& spec, const AlgebraOptions& options = default_algebra_options());

}  // namespace crsym
