#pragma once

#include <optional>
#include <span>
#include <string>

#include "polygeo/geometry.hpp"
#include "polygeo/poly.hpp"

namespace polygeo {

/// Writes a scatter plot: roots as circles, critical points as crosses, and
/// the hull as a polygon outline. Purely decorative output.
void write_zero_scatter_svg(const std::string& path, std::span<const Complex> roots,
                            std::span<const Complex> critical_points,
                            const std::optional<HullPolygon>& hull);

}  // namespace polygeo
