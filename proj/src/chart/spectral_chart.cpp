#include "tauchart/chart/spectral_chart.hpp"

namespace tauchart {

PageStack SpectralChart::pages(int through) const {
    if (has_les()) return PageStack::from_les(pi, bss, std::max(through, bss.max_page));
    return PageStack::from_differentials(bss);
}

void SpectralChart::validate() const {
    bss.validate();
    if (has_pi) {
        pi.validate();
        if (!(pi.window == bss.window)) throw MathError("homotopy chart and pages use different windows");
        if (bss.les) {
            for (const auto& [d, m] : bss.les->proj) check_hom(*pi.group(d), *bss.e2_at(d), m, "proj at " + d.to_string());
            for (const auto& [d, m] : bss.les->delta) {
                auto p = pi.group({d.x - 1, d.y + 2});
                if (!p) throw MathError("delta at " + d.to_string() + " lands in an undetermined degree");
                check_hom(*bss.e2_at(d), *p, m, "delta at " + d.to_string());
            }
        }
    } else if (bss.les) {
        throw MathError("exact couple maps given without a homotopy chart");
    }
    for (const auto& [d, c] : deco.colors) {
        auto e = bss.e2_at(d);
        if (!e || c.size() != e->ngens())
            throw MathError("color list at " + d.to_string() + " does not match the E2 generators");
    }
}

std::optional<Matrix> ChartMap::pi_at(Bidegree d) const {
    auto s = source.pi.group(d), t = target.pi.group(d);
    if (!s || !t) return std::nullopt;
    auto it = pi.find(d);
    if (it != pi.end()) return it->second;
    return zero_hom(*s, *t);
}

std::optional<Matrix> ChartMap::e2_at(Bidegree d) const {
    auto s = source.bss.e2_at(d), t = target.bss.e2_at(d);
    if (!s || !t) return std::nullopt;
    auto it = e2.find(d);
    if (it != e2.end()) return it->second;
    return zero_hom(*s, *t);
}

void ChartMap::validate() const {
    source.validate();
    target.validate();
    for (const auto& [d, m] : pi) {
        auto s = source.pi.group(d), t = target.pi.group(d);
        if (!s || !t) throw MathError("homotopy map at undetermined degree " + d.to_string());
        check_hom(*s, *t, m, "homotopy map at " + d.to_string());
    }
    for (const auto& [d, m] : e2) {
        auto s = source.bss.e2_at(d), t = target.bss.e2_at(d);
        if (!s || !t) throw MathError("E2 map at undetermined degree " + d.to_string());
        check_hom(*s, *t, m, "E2 map at " + d.to_string());
    }
}

}  // namespace tauchart
