#pragma once

#include <filesystem>
#include <string>

#include "cauchy3d/core.hpp"

namespace cauchy3d {

/// A problem file plus the target point it names.
struct ParsedProblem {
    CauchyProblem problem;
    Triple target{0, 0, 0};
};

/// Parses the JSON problem document. Members: stencil [z][y][x], beta [x,y],
/// domain {Bx, By}, target [x,y,z], initial [z][y][x] with null marking
/// unknown cells, optional rhs_g [z0][y0][x0]. All coordinates are Cartesian.
ParsedProblem parse_problem(const std::string& text);

/// Reads and parses a problem file from disk.
ParsedProblem load_problem(const std::filesystem::path& path);

/// Serializes a problem back into the document format parse_problem accepts.
std::string problem_to_json(const ParsedProblem& parsed);

/// Formats `value` with `decimals` fraction digits, rounding halfway cases
/// away from zero.
std::string format_fixed(double value, int decimals);

} // namespace cauchy3d
