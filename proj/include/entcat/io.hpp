#pragma once

// Text formats: spectrum JSON files and the landscape CSV.

#include <string>
#include <string_view>
#include <vector>

#include "entcat/concentration.hpp"
#include "entcat/spectrum.hpp"

namespace entcat {

/// Accepts {"coefficients": [...]} or a bare array of numbers.
Spectrum parse_spectrum_json(std::string_view text, bool normalize = false);

/// Same formats, keeping each number's literal text for exact parsing.
std::vector<std::string> parse_spectrum_json_literals(std::string_view text);

std::string spectrum_to_json(const Spectrum& s);

/// printf("%.9g").
std::string format_g9(double value);

/// value rounded to 9 significant digits, i.e. what format_g9 parses back to.
double round_g9(double value);

std::string landscape_csv(const std::vector<LandscapeRow>& rows);

}  // namespace entcat
