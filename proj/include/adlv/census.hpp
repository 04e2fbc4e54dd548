#pragma once

#include <json.hpp>

#include "adlv/adlv_sets.hpp"

namespace adlv {

/// Machine-readable record of one window sweep: bucket sizes, structural
/// predictions and match flags, with optional member listings.
nlohmann::json census_record(const Tree& T, const BCase& b, const SweepResult& sr, int wmin,
                             int wmax, bool with_members);

/// Validating parser for census records (used by the test fixtures).
nlohmann::json parse_census(const std::string& text);

} // namespace adlv
