// CSV serialization of trajectories and equilibrium reports.
#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ascf/equilibria.hpp"
#include "ascf/integrate.hpp"

namespace ascf {

// Header "t,x,y,z", one row per sample, shortest round-trip numbers.
// Returns the number of bytes written.
std::size_t write_trajectory_csv(const Trajectory& traj, std::ostream& out);

// Strict inverse of write_trajectory_csv; values round-trip bit-exactly.
std::vector<TrajectorySample> read_trajectory_csv(std::istream& in);

// Header "label,x,y,z,valid,re1,im1,re2,im2,re3,im3,class", one row per
// point, then a "# scenario" comment block with the four flags and their
// operands. Verdicts align with points; an empty verdict (undefined mixed
// point) renders NaN eigenvalues and class "undefined". Returns bytes
// written.
std::size_t write_equilibria_report(
    std::span<const EquilibriumPoint> points,
    std::span<const std::optional<StabilityVerdict>> verdicts,
    const ScenarioReport& scenario, std::ostream& out);

}  // namespace ascf
