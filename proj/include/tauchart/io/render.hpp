#pragma once

#include <optional>
#include <string>

#include "tauchart/chart/spectral_chart.hpp"

namespace tauchart {

struct RenderOptions {
    std::optional<Line> line;  // draws y = alpha x and y + 2 = alpha (x - 1)
    int through = 0;           // last page of differentials drawn; 0 means max_page
    std::optional<std::pair<i64, i64>> stems;
    std::string title;
};

// Deterministic SVG 1.1 chart of the E2 page (or of the homotopy when there
// are no pages): squares for Z, dots for Z/2, labelled circles for other
// cyclic groups, arrows for nonzero differentials. Every mark carries a
// class and data-at attribute so drawings can be inventoried.
std::string render_svg(const SpectralChart& chart, const RenderOptions& opts = {});

}  // namespace tauchart
