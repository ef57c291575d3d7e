#include "crsym/scan.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "crsym/pipeline.hpp"

namespace crsym {

std::vector<PQRSpec> enumerate_triples(int d) {
  std::vector<PQRSpec> out;
  if (d < 2 || d % 2 != 0) return out;
  const auto gammas = exponents_of_degree(3, static_cast<unsigned>(d / 2));
  for (int a = 1; a < d; ++a) {
    const auto alphas = exponents_of_degree(3, static_cast<unsigned>(a));
    const auto betas = exponents_of_degree(3, static_cast<unsigned>(d - a));
    for (const auto& al : alphas) {
      for (const auto& be : betas) {
        for (const auto& ga : gammas) {
          PQRSpec s;
          s.alpha = al;
          s.beta = be;
          s.gamma = ga;
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

namespace {

std::array<unsigned, 9> flat(const PQRSpec& s) {
  std::array<unsigned, 9> f{};
  for (std::size_t k = 0; k < 3; ++k) {
    f[k] = s.alpha[k];
    f[3 + k] = s.beta[k];
    f[6 + k] = s.gamma[k];
  }
  return f;
}

GaussRational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (;;) {
    GaussRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    if (!c.is_zero()) return c;
  }
}

}  // namespace

PQRSpec canonical_form(const PQRSpec& spec) {
  PQRSpec best = spec;
  auto best_key = flat(spec);
  for (bool swapped : {false, true}) {
    const PQRSpec base = swapped ? swap_pq(spec) : spec;
    for (const auto& perm : permutation_order()) {
      PQRSpec s = permute(base, perm);
      const auto key = flat(s);
      if (key < best_key) {
        best_key = key;
        best = s;
      }
    }
  }
  return best;
}

std::vector<PQRSpec> scan_specs(const ScanConfig& config) {
  std::vector<PQRSpec> out;
  for (int d = 2; d <= config.degree_bound; d += 2) {
    for (const auto& s : enumerate_triples(d)) {
      if (exponent_matrix_det(s).is_zero()) continue;
      if (config.dedupe && flat(canonical_form(s)) != flat(s)) continue;
      out.push_back(s);
    }
  }
  if (config.random_seed) {
    std::mt19937_64 rng(*config.random_seed);
    for (auto& s : out) {
      s.cP = random_coeff(rng);
      s.cQ = random_coeff(rng);
      s.cR = random_coeff(rng);
    }
  }
  return out;
}

const std::vector<std::string>& scan_check_names() {
  static const std::vector<std::string> names{
      "nondegeneracy_equivalence", "bracket_closure",     "g1_dimension",
      "g1_generator",              "gc_bound",            "duality",
      "gc_dimension",              "g_minus_dimension",   "rotation_decomposition",
      "nilpotent_parameters",      "imaginary_diagonal_implication",
      "real_diagonal_implication", "dimension_bounds"};
  return names;
}

namespace {

const std::vector<std::string> kPredictorChecks{"gc_dimension", "g_minus_dimension", "rotation_decomposition",
                                                "nilpotent_parameters", "dimension_bounds"};

std::string check_of(const std::string& discrepancy) {
  if (discrepancy == "gc_span") return "gc_dimension";
  if (discrepancy == "g_minus_span") return "g_minus_dimension";
  return discrepancy;
}

ScanEntry analyze_entry(const PQRSpec& spec) {
  ScanEntry e;
  e.spec = spec;
  e.d = static_cast<int>(spec.alpha.total() + spec.beta.total());
  try {
    const Analysis a = analyze(make_spec(spec), AlgebraOptions{});
    const AlgebraReport& r = a.report;
    for (const auto& c : r.components) e.dims.push_back(c.dim);
    e.total = r.total();
    e.gc = r.gc();
    e.predictors_run = a.prediction.reason.empty();
    e.gc_predicted = a.prediction.gc.dim;
    e.g_minus_predicted = a.prediction.g_minus.dim;
    e.normal_form = to_string(a.prediction.normal_form.family);
    e.offdiagonal_dim = a.prediction.rotations.offdiagonal_dim;
    e.has_real_diagonal = a.prediction.rotations.has_real_diagonal;
    e.has_imaginary_diagonal = a.prediction.rotations.has_imaginary_diagonal;
    e.discrepancies = a.discrepancies;
    if (e.predictors_run) {
      const bool ok = e.gc > 0 ? (e.total >= 7 && e.total <= 13) : (e.total >= 6 && e.total <= 9);
      if (!ok) {
        e.discrepancies.push_back({"dimension_bounds", "dim g = " + std::to_string(e.total) +
                                                           " with dim g_c = " + std::to_string(e.gc)});
      }
    }
  } catch (const DegenerateModel& ex) {
    e.error = std::string("degenerate: ") + ex.what();
    e.discrepancies.push_back({"nondegeneracy_equivalence", "exponent determinant nonzero but model refused"});
  } catch (const std::exception& ex) {
    e.error = ex.what();
    e.discrepancies.push_back({"analysis_error", ex.what()});
  }
  return e;
}

}  // namespace

ScanResult run_scan(const ScanConfig& config) {
  ScanResult res;
  res.config = config;
  const std::vector<PQRSpec> specs = scan_specs(config);
  res.entries.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) res.entries[i] = analyze_entry(specs[i]);
  };
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& name : scan_check_names()) res.checks[name];
  for (const ScanEntry& e : res.entries) {
    std::vector<std::string> failed;
    for (const auto& d : e.discrepancies) failed.push_back(check_of(d.check));
    for (const auto& name : scan_check_names()) {
      CheckCount& c = res.checks[name];
      const bool skipped = !e.error.empty() ? name != "nondegeneracy_equivalence"
                                            : (!e.predictors_run && std::find(kPredictorChecks.begin(), kPredictorChecks.end(), name) != kPredictorChecks.end());
      if (std::find(failed.begin(), failed.end(), name) != failed.end()) {
        ++c.failed;
      } else if (skipped) {
        ++c.skipped;
      } else {
        ++c.passed;
      }
    }
    res.discrepancy_count += e.discrepancies.size();
    if (!e.error.empty()) continue;
    const int d = e.d;
    const std::vector<std::pair<std::string, std::size_t>> named{
        {"g_minus_1", e.dims[0]},
        {"g_minus_1_over_d", e.dims[d - 1]},
        {"g0", e.dims[d]},
        {"gc", e.gc},
        {"g_1_minus_1_over_d", e.dims[2 * d - 1]},
        {"g1", e.dims[2 * d]},
        {"total", e.total}};
    for (const auto& [name, v] : named) {
      auto it = res.ranges.find(name);
      if (it == res.ranges.end()) {
        res.ranges.emplace(name, std::make_pair(v, v));
      } else {
        it->second.first = std::min(it->second.first, v);
        it->second.second = std::max(it->second.second, v);
      }
    }
  }
  return res;
}

io::Json scan_to_json(const ScanResult& r) {
  using io::Json;
  Json j;
  Json cfg;
  cfg["degree_bound"] = r.config.degree_bound;
  cfg["dedupe"] = r.config.dedupe;
  cfg["random_seed"] = r.config.random_seed ? Json(*r.config.random_seed) : Json(nullptr);
  j["config"] = std::move(cfg);
  Json sum;
  sum["models"] = r.entries.size();
  Json ranges;
  for (const char* name : {"g_minus_1", "g_minus_1_over_d", "g0", "gc", "g_1_minus_1_over_d", "g1", "total"}) {
    auto it = r.ranges.find(name);
    if (it != r.ranges.end()) ranges[name] = Json::array({it->second.first, it->second.second});
  }
  sum["ranges"] = std::move(ranges);
  Json checks;
  for (const auto& name : scan_check_names()) {
    const CheckCount& c = r.checks.at(name);
    checks[name] = Json{{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
  }
  sum["checks"] = std::move(checks);
  sum["discrepancies"] = r.discrepancy_count;
  j["summary"] = std::move(sum);
  Json models = Json::array();
  Json disc = Json::array();
  for (const ScanEntry& e : r.entries) {
    Json m;
    m["alpha"] = e.spec.alpha.to_vector();
    m["beta"] = e.spec.beta.to_vector();
    m["gamma"] = e.spec.gamma.to_vector();
    if (r.config.random_seed) {
      m["cP"] = io::coeff_to_json(e.spec.cP);
      m["cQ"] = io::coeff_to_json(e.spec.cQ);
      m["cR"] = io::coeff_to_json(e.spec.cR);
    }
    m["d"] = e.d;
    if (!e.error.empty()) {
      m["error"] = e.error;
    } else {
      m["dims"] = e.dims;
      m["total"] = e.total;
      m["gc"] = e.gc;
      m["normal_form"] = e.predictors_run ? Json(e.normal_form) : Json(nullptr);
      m["offdiagonal_dim"] = e.offdiagonal_dim;
      m["flags"] = Json{{"real_diagonal", e.has_real_diagonal}, {"imaginary_diagonal", e.has_imaginary_diagonal}};
    }
    for (const auto& d : e.discrepancies) {
      disc.push_back(Json{{"alpha", e.spec.alpha.to_vector()},
                          {"beta", e.spec.beta.to_vector()},
                          {"gamma", e.spec.gamma.to_vector()},
                          {"check", d.check},
                          {"message", d.message}});
    }
    models.push_back(std::move(m));
  }
  j["discrepancies"] = std::move(disc);
  j["models"] = std::move(models);
  return j;
}

}  // namespace crsym
