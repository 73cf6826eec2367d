#pragma once

#include "tricover/plan.hpp"

#include <stdexcept>
#include <string>

namespace tricover {

struct PlanIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plan document, version 1. Rationals travel as lowest-terms strings
// ("p/q" or a plain integer), never as floats, so the file is bit-exact:
//
//   {
//     "version": 1, "n": 3, "d": "2/3", "method": "odd_full", "j": 3,
//     "count": 14,
//     "placements": [{"o": "U", "x": "0", "y": "0"}, ...]
//   }
//
// "j" is present only for constructions parameterized by a row index.
// "count" must equal the placement list length.

/// Serializes a plan to document JSON.
std::string serialize_plan(const CoveringPlan& plan);

/// Parses and validates a document; throws PlanIoError on malformed input.
CoveringPlan parse_plan(const std::string& text);

void save_plan(const CoveringPlan& plan, const std::string& path);
CoveringPlan load_plan(const std::string& path);

}  // namespace tricover
