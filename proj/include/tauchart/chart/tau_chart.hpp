#pragma once

#include <map>
#include <optional>

#include "tauchart/chart/window.hpp"
#include "tauchart/linalg/abgroup.hpp"

namespace tauchart {

// Bigraded homotopy pi_{x,y} with the tau maps pi_{x,y} -> pi_{x,y-1}.
// Cells absent from the map are zero; degrees outside the window follow the
// window's edge semantics.
class TauChart {
public:
    Window window;
    std::map<Bidegree, AbGroup> cells;
    std::map<Bidegree, Matrix> tau;  // keyed by source degree

    std::optional<AbGroup> group(Bidegree d) const;
    // tau : pi(d) -> pi(d.x, d.y - 1)
    std::optional<Matrix> tau_from(Bidegree d) const;
    // tau^k : pi(d) -> pi(d.x, d.y - k)
    std::optional<Matrix> tau_power(Bidegree d, i64 k) const;

    // Shapes, homomorphism conditions, cells inside the window.
    void validate() const;

    // Grows the window vertically, materializing rows implied by the edges.
    // Requires the corresponding edge to be zero or stable.
    TauChart extended(i64 new_y0, i64 new_y1) const;
};

}  // namespace tauchart
