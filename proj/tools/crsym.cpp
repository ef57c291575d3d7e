// crsym: infinitesimal CR automorphisms of model hypersurfaces.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "crsym/examples.hpp"
#include "crsym/io.hpp"
#include "crsym/pipeline.hpp"
#include "crsym/scan.hpp"
#include "crsym/tangency.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNotTangent = 1;
constexpr int kSchema = 2;
constexpr int kDegenerate = 3;
constexpr int kDiscrepancy = 4;

int report_degenerate(const crsym::DegenerateModel& e) {
  crsym::io::Json j;
  j["error"] = "degenerate";
  j["certificate"] = crsym::io::certificate_to_json(e.certificate());
  std::cout << j.dump(2) << "\n";
  std::cerr << "crsym: model is holomorphically degenerate\n";
  return kDegenerate;
}

int run_analyze(const std::string& path, const std::string& format) {
  const crsym::ModelSpec spec = crsym::io::load_model_spec(path);
  const crsym::Analysis a = crsym::analyze(spec);
  if (format == "text") {
    std::cout << crsym::io::report_to_text(a);
  } else {
    std::cout << crsym::io::report_to_json(a).dump(2) << "\n";
  }
  return a.discrepancies.empty() ? kOk : kDiscrepancy;
}

int run_scan(const crsym::ScanConfig& config, const std::string& output) {
  const crsym::ScanResult r = crsym::run_scan(config);
  const crsym::io::Json j = crsym::scan_to_json(r);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw crsym::SchemaError("cannot write " + output);
    out << j.dump(1) << "\n";
  }
  std::cout << j.at("summary").dump(2) << "\n";
  return r.discrepancy_count == 0 ? kOk : kDiscrepancy;
}

int run_check_field(const std::string& model_path, const std::string& field_path) {
  const crsym::ModelSpec spec = crsym::io::load_model_spec(model_path);
  crsym::require_valid(spec.model);
  const crsym::VectorField x = crsym::io::load_field(field_path);
  if (x.nvars() != spec.model.n()) throw crsym::SchemaError("field and model have different n");
  const crsym::WeightResult w = crsym::weight_of(x, spec.model.d());
  const crsym::MixedPoly t = crsym::tangency_residual(x, spec.model);
  switch (w.kind) {
    case crsym::WeightResult::Kind::Homogeneous: std::cout << "weight: " << w.weight.to_string() << "\n"; break;
    case crsym::WeightResult::Kind::Inhomogeneous: std::cout << "weight: inhomogeneous\n"; break;
    case crsym::WeightResult::Kind::Zero: std::cout << "weight: undefined (zero field)\n"; break;
  }
  std::cout << "tangent: " << (t.is_zero() ? "yes" : "no") << "\n";
  if (!t.is_zero()) std::cout << "residual: " << t.to_string() << "\n";
  return t.is_zero() ? kOk : kNotTangent;
}

int run_examples(const std::string& name, unsigned param) {
  if (name.empty()) {
    for (const auto& n : crsym::examples::names()) std::cout << n << "\n";
    return kOk;
  }
  std::cout << crsym::io::model_spec_to_json(crsym::examples::by_name(name, param)).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinitesimal CR automorphisms of model hypersurfaces Im w = phi(z, zbar)"};
  app.require_subcommand(1);

  std::string model_path, field_path, format = "json", output, example;
  unsigned param = 0;
  crsym::ScanConfig scan;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "compute the graded algebra of one model");
  analyze->add_option("model", model_path, "model spec JSON")->required();
  analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* scan_cmd = app.add_subcommand("scan", "analyze every nondegenerate monomial triple up to a degree");
  scan_cmd->add_option("--degree-bound", scan.degree_bound, "largest d")->required()->check(CLI::Range(2, 40));
  scan_cmd->add_flag("--dedupe", scan.dedupe, "one model per permutation/swap class");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  scan_cmd->add_option("-o,--output", output, "atlas JSON path");
  auto* seed_opt = scan_cmd->add_option("--random-coefficients", seed, "seed for random Gaussian-rational coefficients");

  auto* check = app.add_subcommand("check-field", "tangency and weight of a vector field");
  check->add_option("model", model_path, "model spec JSON")->required();
  check->add_option("field", field_path, "field JSON")->required();

  auto* ex = app.add_subcommand("examples", "print a built-in model spec (no name: list them)");
  ex->add_option("name", example, "example name");
  ex->add_option("--param", param, "l for exotic-family, k for nilpotent-family1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }

  try {
    if (*analyze) return run_analyze(model_path, format);
    if (*scan_cmd) {
      if (*seed_opt) scan.random_seed = seed;
      return run_scan(scan, output);
    }
    if (*check) return run_check_field(model_path, field_path);
    if (*ex) return run_examples(example, param);
  } catch (const crsym::DegenerateModel& e) {
    return report_degenerate(e);
  } catch (const crsym::SchemaError& e) {
    std::cerr << "crsym: schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::invalid_argument& e) {
    std::cerr << "crsym: invalid input: " << e.what() << "\n";
    return kSchema;
  }
  return kOk;
}
