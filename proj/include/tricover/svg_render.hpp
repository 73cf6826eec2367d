#pragma once

#include "tricover/plan.hpp"

#include <string>

namespace tricover {

// Floating point is fine here: rendering is display-only and never feeds
// back into the exact pipeline.
struct RenderOptions {
    bool show_target = true;
    // Simplex frame draws the canonical right-triangle coordinates as-is;
    // the equilateral frame shears through (x + y/2, y*sqrt(3)/2).
    bool equilateral = false;
    bool labels = false;  // number each placement at its centroid
    double unit_px = 80.0;
};

/// SVG 1.1 document: filled polygons per placement (ups and downs in
/// distinct fills) plus an optional target outline on top.
std::string render_svg(const CoveringPlan& plan, const RenderOptions& opts = {});

void save_svg(const CoveringPlan& plan, const std::string& path, const RenderOptions& opts = {});

}  // namespace tricover
