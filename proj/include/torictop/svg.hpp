#pragma once

#include "torictop/fans.hpp"
#include "torictop/lattice.hpp"

#include <string>
#include <vector>

namespace torictop::svg {

/// 24 px per lattice unit, y axis pointing up.
inline constexpr int kPixelsPerUnit = 24;

/// Rays as arrows from the origin, top cones as translucent wedges (opacity by
/// |w|, red for negative weights). Planar fans only.
std::string render_fan(const fans::MultiFan& fan);

/// Loops as stroked paths over lattice dots; unit cells shaded by the winding
/// number at their centres.
std::string render_loops(const std::vector<lattice::OrientedLoop>& loops);

}  // namespace torictop::svg
