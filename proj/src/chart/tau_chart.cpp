#include "tauchart/chart/tau_chart.hpp"

namespace tauchart {

std::optional<AbGroup> TauChart::group(Bidegree d) const {
    if (d.x < window.x0 || d.x > window.x1) {
        Edge e = d.x < window.x0 ? window.left : window.right;
        if (e == Edge::unknown) return std::nullopt;
        return AbGroup();
    }
    if (d.y > window.y1) {
        if (window.top == Edge::zero) return AbGroup();
        if (window.top == Edge::stable) return group({d.x, window.y1});
        return std::nullopt;
    }
    if (d.y < window.y0) {
        if (window.bottom == Edge::zero) return AbGroup();
        if (window.bottom == Edge::stable) return group({d.x, window.y0});
        return std::nullopt;
    }
    auto it = cells.find(d);
    return it == cells.end() ? AbGroup() : it->second;
}

std::optional<Matrix> TauChart::tau_from(Bidegree d) const {
    Bidegree t{d.x, d.y - 1};
    auto src = group(d), tgt = group(t);
    if (!src || !tgt) return std::nullopt;
    if (src->is_zero() || tgt->is_zero()) return zero_hom(*src, *tgt);
    if (d.y > window.y1 || t.y < window.y0) return identity_hom(*src);  // stable copies
    auto it = tau.find(d);
    if (it == tau.end()) return zero_hom(*src, *tgt);
    return it->second;
}

std::optional<Matrix> TauChart::tau_power(Bidegree d, i64 k) const {
    auto g = group(d);
    if (!g) return std::nullopt;
    Matrix acc = identity_hom(*g);
    for (i64 i = 0; i < k; ++i) {
        auto t = tau_from({d.x, d.y - i});
        if (!t) return std::nullopt;
        acc = *t * acc;
    }
    return acc;
}

void TauChart::validate() const {
    window.validate();
    for (const auto& [d, g] : cells)
        if (!window.contains(d)) throw MathError("homotopy cell " + d.to_string() + " lies outside the window");
    for (const auto& [d, m] : tau) {
        if (!window.contains(d) || !window.contains({d.x, d.y - 1}))
            throw MathError("tau map from " + d.to_string() + " must have source and target inside the window");
        auto s = group(d), t = group({d.x, d.y - 1});
        check_hom(*s, *t, m, "tau from " + d.to_string());
    }
}

TauChart TauChart::extended(i64 new_y0, i64 new_y1) const {
    TauChart out = *this;
    if (new_y0 < window.y0) {
        if (window.bottom == Edge::unknown) throw MathError("cannot extend a window past an unknown bottom edge");
        out.window.y0 = new_y0;
        for (i64 x = window.x0; x <= window.x1; ++x)
            for (i64 y = new_y0; y < window.y0; ++y) {
                auto g = group({x, y});
                if (!g->is_zero()) out.cells[{x, y}] = *g;
                auto t = tau_from({x, y + 1});
                if (!t->is_zero()) out.tau[{x, y + 1}] = *t;
            }
    }
    if (new_y1 > window.y1) {
        if (window.top == Edge::unknown) throw MathError("cannot extend a window past an unknown top edge");
        out.window.y1 = new_y1;
        for (i64 x = window.x0; x <= window.x1; ++x)
            for (i64 y = window.y1 + 1; y <= new_y1; ++y) {
                auto g = group({x, y});
                if (!g->is_zero()) out.cells[{x, y}] = *g;
                auto t = tau_from({x, y});
                if (!t->is_zero()) out.tau[{x, y}] = *t;
            }
    }
    return out;
}

}  // namespace tauchart
