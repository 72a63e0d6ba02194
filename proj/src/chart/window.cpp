#include "tauchart/chart/window.hpp"

#include "tauchart/linalg/integer.hpp"

namespace tauchart {

std::string to_string(Edge e) {
    switch (e) {
        case Edge::zero: return "zero";
        case Edge::stable: return "stable";
        case Edge::unknown: return "unknown";
    }
    return "unknown";
}

Edge edge_from_string(const std::string& s) {
    if (s == "zero") return Edge::zero;
    if (s == "stable") return Edge::stable;
    if (s == "unknown") return Edge::unknown;
    throw MathError("unknown edge kind '" + s + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Verdict verdict_and(Verdict a, Verdict b) {
    if (a == Verdict::no || b == Verdict::no) return Verdict::no;
    if (a == Verdict::indeterminate || b == Verdict::indeterminate) return Verdict::indeterminate;
    return Verdict::yes;
}

void Window::validate() const {
    if (x0 > x1 || y0 > y1) throw MathError("window bounds are empty");
    if (left == Edge::stable || right == Edge::stable)
        throw MathError("left/right window edges must be zero or unknown");
}

}  // namespace tauchart
