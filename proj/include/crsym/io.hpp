#pragma once

#include <string>

#include <json.hpp>

#include "crsym/fields.hpp"
#include "crsym/pipeline.hpp"

namespace crsym::io {

using Json = nlohmann::ordered_json;

/// [re_num, re_den, im_num, im_den]; entries are integers or decimal strings.
GaussRational parse_coeff(const Json& j);
Json coeff_to_json(const GaussRational& c);

/// Parses either {"n":3,"pqr":{...}} or {"n":N,"terms":[...]}; throws SchemaError.
ModelSpec parse_model_spec(const Json& j);
ModelSpec load_model_spec(const std::string& path);
Json model_spec_to_json(const ModelSpec& spec);

/// {"n":N,"F":[[terms]...],"G":[terms]} with terms {"z":[...],"w":m,"coeff":[...]}.
VectorField parse_field(const Json& j);
VectorField load_field(const std::string& path);
/// Field encoding plus a "text" rendering.
Json field_to_json(const VectorField& x);

Json certificate_to_json(const NondegeneracyCertificate& c);

/// Full analysis report with a fixed key order.
Json report_to_json(const Analysis& a);
std::string report_to_text(const Analysis& a);

/// Reads a whole file; throws SchemaError when unreadable or not JSON.
Json read_json_file(const std::string& path);

}  // namespace crsym::io
