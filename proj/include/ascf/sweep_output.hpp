// File output for sweep results, shared by the CLI and the test gate.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ascf/sweeps.hpp"

namespace ascf {

// Writes summary.csv, claims.csv, one trajectory CSV per cell and, when
// with_svg is set, one per-coordinate SVG comparing the swept values from
// the reference initial state. Creates `dir` if needed. Returns the
// relative paths written, in a fixed order.
std::vector<std::string> write_sweep_outputs(const SweepResult& result,
                                             const std::filesystem::path& dir,
                                             bool with_svg);

}  // namespace ascf
