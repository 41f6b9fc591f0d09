#pragma once

#include <string>
#include <string_view>

#include "somq/som_model.hpp"

namespace somq {

/// Self-contained SVG of the data (dots) with the map lattice drawn over the
/// first two prototype coordinates. One-dimensional inputs are drawn on y = 0.
std::string render_map_svg(const CodeBook& codebook, const Dataset& data, std::string_view title);

}  // namespace somq
