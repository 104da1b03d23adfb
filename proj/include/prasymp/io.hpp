#pragma once

#include <string>

#include "json.hpp"
#include "prasymp/scaled.hpp"

namespace prasymp {

// Shortest decimal that round-trips the double exactly.
std::string fmt_double(double v);
double parse_double(const std::string& s);

nlohmann::json scaled_to_json(const ScaledComplex& v);
ScaledComplex scaled_from_json(const nlohmann::json& j);

}  // namespace prasymp
