#pragma once

#include <string>

#include "ebeta/geometry.hpp"

namespace ebeta {

/// Levels 0..top_level of basic intervals as stacked horizontal bar rows, one
/// bar per distinct level map, with the complete-overlap block f_{0B} = f_{11}
/// highlighted at level 2. Layout constants are fixed (bar height 12px, level
/// spacing 20px, x-scale 600/γ) so the output is stable and testable.
std::string render_levels_svg(const Beta& beta, int top_level);

}  // namespace ebeta
