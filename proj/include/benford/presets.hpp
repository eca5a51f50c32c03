#pragma once

#include <string_view>
#include <vector>

#include "benford/density.hpp"

namespace benford {

// Named log-densities used by the CLI and the experiments:
//   uniform  -- uniform on [0,1): the exactly Benford case
//   sine1    -- nine sine arches on the first-digit partition; Benford in
//               the first digit only
//   geom60   -- geometric staircase 2^-n on [n,n+1), n = 1..60, weights
//               renormalized by 1/(1-2^-60); projects to the uniform
//               density despite non-compact-looking support
//   triangle -- triangle on [0,3) peaking at 3/2; wraps into a three-layer
//               stack under mod-1 projection
PiecewiseDensity preset_density(std::string_view name);

const std::vector<std::string_view>& preset_names();

} // namespace benford
