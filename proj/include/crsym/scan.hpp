#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crsym/io.hpp"
#include "crsym/model.hpp"

namespace crsym {

/// Every exponent triple with |alpha| + |beta| = 2|gamma| = d and |alpha|, |beta| >= 1,
/// unit coefficients, degenerate ones included.
std::vector<PQRSpec> enumerate_triples(int d);

/// Smallest (alpha, beta, gamma) over variable permutations and the P/Q swap.
PQRSpec canonical_form(const PQRSpec& spec);

struct ScanConfig {
  int degree_bound = 4;
  bool dedupe = false;
  unsigned jobs = 1;
  /// When set, coefficients are random nonzero Gaussian rationals from this seed.
  std::optional<std::uint64_t> random_seed;
};

/// The nondegenerate specs a scan visits, in scan order.
std::vector<PQRSpec> scan_specs(const ScanConfig& config);

struct ScanEntry {
  PQRSpec spec;
  int d = 0;
  std::vector<std::size_t> dims;  // per weight index 0..2d
  std::size_t total = 0;
  std::size_t gc = 0;
  std::size_t gc_predicted = 0;
  std::size_t g_minus_predicted = 0;
  std::string normal_form;
  std::size_t offdiagonal_dim = 0;
  bool has_real_diagonal = false;
  bool has_imaginary_diagonal = false;
  bool predictors_run = false;
  std::vector<Discrepancy> discrepancies;
  std::string error;  // set when the analysis threw
};

struct CheckCount {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanEntry> entries;
  std::map<std::string, CheckCount> checks;
  std::map<std::string, std::pair<std::size_t, std::size_t>> ranges;  // min/max per named dim
  std::size_t discrepancy_count = 0;
};

/// Names of the per-model theorem checks tallied in ScanResult::checks.
const std::vector<std::string>& scan_check_names();

ScanResult run_scan(const ScanConfig& config);

io::Json scan_to_json(const ScanResult& r);

}  // namespace crsym
