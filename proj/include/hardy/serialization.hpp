#pragma once

#include <string>

#include <json.hpp>

#include "hardy/disk_geometry.hpp"
#include "hardy/function_model.hpp"
#include "hardy/sampling_analysis.hpp"
#include "hardy/witness_constructions.hpp"

namespace hardy {

using json = nlohmann::json;

// All parsers throw std::invalid_argument on malformed input (CLI exit 1).

json to_json(const DiskPoint& z);
DiskPoint diskpoint_from_json(const json& j);

json to_json(const Arc& a);
Arc arc_from_json(const json& j);

json to_json(const ArcSet& s);
ArcSet arcset_from_json(const json& j);

// {"arcs":[{"center":a,"half_width":w,"level":v},...],"background":v0}
// or {"grid_size":n,"values":[...]}
json to_json(const BoundaryData& d);
BoundaryData boundarydata_from_json(const json& j);

// {"factors":[{"type":...,"power":n,...},...]}
json to_json(const FunctionSpec& f);
FunctionSpec functionspec_from_json(const json& j);

// {"points":[{"re":x,"im":y,"gen":n},...]} ("gen" optional)
json to_json(const PointSet& a);
PointSet pointset_from_json(const json& j);

json to_json(const SamplingReport& r);
json to_json(const Prop3Params& p);
Prop3Params prop3params_from_json(const json& j);
json to_json(const CertificateRecord& r);
json to_json(const FloorEstimate& e);
json to_json(const DivergenceReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
json parse_json_file(const std::string& path);

// Fixed float formatting for CSV cells: 17 significant digits, lowercase
// scientific (golden-file stable).
std::string format_sci(double x);

// Parses "lo:hi[,lo:hi...]" with endpoints as decimals or multiples of pi
// ("pi", "0.5pi", "2pi") into an arc union.
ArcSet parse_arc_list(const std::string& text);

}  // namespace hardy
