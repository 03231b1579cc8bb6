#pragma once
#include "fl/evolution.hpp"

#include <json.hpp>
#include <string>

namespace fl {

using json = nlohmann::json;

// CSV "x,re,im"; nodes must be ascending, uniform and symmetric about 0.
GridFunction read_grid_function(const std::string& path);
void write_grid_function(const std::string& path, const GridFunction& f);
GridFunction parse_grid_function(const std::string& text);
std::string format_grid_function(const GridFunction& f);

// CSV "x,re1,im1,re2,im2".
void write_jost(const std::string& path, const JostVector& j);
std::pair<GridFunction, GridFunction> read_jost(const std::string& path);

json to_json(const ScatteringData& d);
ScatteringData scattering_from_json(const json& j);

// CSV "t,x,re,im", t outer.
void write_patch(const std::string& path, const SpaceTimePatch& p);
SpaceTimePatch read_patch(const std::string& path);

json cplx_json(cplx z);
cplx json_cplx(const json& j);

// Parses "RE,IM" (or a bare real).
cplx parse_cplx(const std::string& s);

void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);

// <path>.json next to every output file.
void write_sidecar(const std::string& path, const std::string& command, const json& parameters, const json& invariants);

} // namespace fl
