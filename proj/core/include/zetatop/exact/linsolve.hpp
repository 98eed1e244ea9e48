#pragma once

#include <optional>
#include <vector>

#include "zetatop/exact/rat.hpp"

namespace zetatop {

// Exact Gauss-Jordan elimination for a square system A x = b. Returns nullopt
// when A is singular.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace zetatop
