#pragma once

#include <string>

#include "tauchart/grading/line.hpp"

namespace tauchart {

// What a chart asserts about degrees just outside its window.
//   zero     : everything beyond the edge vanishes
//   stable   : (top/bottom only) the boundary row repeats forever with tau the identity
//   unknown  : nothing is asserted; dependent answers become indeterminate
enum class Edge { zero, stable, unknown };

std::string to_string(Edge e);
Edge edge_from_string(const std::string& s);

enum class Verdict { yes, no, indeterminate };

std::string to_string(Verdict v);
Verdict verdict_and(Verdict a, Verdict b);

struct Window {
    i64 x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    Edge left = Edge::zero;
    Edge right = Edge::zero;
    Edge top = Edge::zero;
    Edge bottom = Edge::stable;

    bool contains(Bidegree d) const { return d.x >= x0 && d.x <= x1 && d.y >= y0 && d.y <= y1; }
    bool column_in(i64 x) const { return x >= x0 && x <= x1; }
    void validate() const;
    bool operator==(const Window&) const = default;
};

}  // namespace tauchart
