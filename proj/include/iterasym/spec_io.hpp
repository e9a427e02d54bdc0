#pragma once

#include <string>
#include <string_view>

#include "iterasym/series_spec.hpp"

namespace iterasym {

// Custom series document (JSON):
//   {
//     "name": "my-map",            optional, default "custom"
//     "tau": 1,                    required positive integer
//     "a": ["-1", "3/2", ...],     required, reduced "p/q" strings
//     "formula": "A",              optional A | B (default A)
//     "c_scale": "1",              optional positive rational (default 1)
//     "scale": "pi^2"              optional theta marker (default none)
//   }
// Unknown keys are rejected. Errors carry the line of the offending field.

SeriesSpec parseSeriesSpec(std::string_view text);
SeriesSpec loadSeriesSpec(const std::string& path);

/// Inverse of parseSeriesSpec; parseSeriesSpec(writeSeriesSpec(s)) == s.
std::string writeSeriesSpec(const SeriesSpec& spec);

}  // namespace iterasym
