#include "tauchart/chart/ops.hpp"

#include <algorithm>

namespace tauchart {

GroupType cokernel_type(const AbGroup& target, const Matrix& f) {
    return Subquotient(target, Lattice::full(target.ngens()), hom_image(target, f)).group().type();
}

GroupType kernel_type(const AbGroup& source, const AbGroup& target, const Matrix& f) {
    return Subquotient(source, hom_kernel(source, target, f), source.relations()).group().type();
}

GroupType image_type(const AbGroup& target, const Matrix& f) {
    return Subquotient(target, hom_image(target, f), target.relations()).group().type();
}

namespace {

std::vector<Int> primes_dividing(const Vec& xs) {
    std::vector<Int> ps;
    for (Int n : xs) {
        n = abs(n);
        for (Int p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
        if (n > 1) ps.push_back(n);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

std::size_t p_count(const GroupType& g, const Int& p) {
    std::size_t c = 0;
    for (const auto& t : g.torsion)
        if (t % p == 0) ++c;
    return c;
}

Int torsion_order(const GroupType& g) {
    Int o = 1;
    for (const auto& t : g.torsion) o *= t;
    return o;
}

}  // namespace

bool extension_compatible(const GroupType& sub, const GroupType& quot, const GroupType& total) {
    if (total.rank != sub.rank + quot.rank) return false;
    Vec all = sub.torsion;
    all.insert(all.end(), quot.torsion.begin(), quot.torsion.end());
    all.insert(all.end(), total.torsion.begin(), total.torsion.end());
    const bool finite = total.rank == 0;
    if (finite && torsion_order(total) != torsion_order(sub) * torsion_order(quot)) return false;
    if (!divides(torsion_order(sub), torsion_order(total))) return false;
    for (const auto& p : primes_dividing(all)) {
        std::size_t s = p_count(sub, p), q = p_count(quot, p), t = p_count(total, p);
        if (s > t) return false;
        if (finite && (q > t || t > s + q)) return false;
    }
    return true;
}

LesReport check_les_consistency(const SpectralChart& sc) {
    LesReport rep;
    if (!sc.has_pi) throw MathError("consistency check needs a homotopy chart");
    const TauChart& chart = sc.pi;
    const BssPages& bss = sc.bss;
    const Window& w = chart.window;
    auto fail = [&](Bidegree d, std::string what) { rep.failures.push_back({d, std::move(what)}); };

    if (bss.les) {
        rep.exact_maps = true;
        for (i64 x = w.x0; x <= w.x1 + 1; ++x)
            for (i64 y = w.y0 - 2; y <= w.y1 + 1; ++y) {
                Bidegree d{x, y};
                Bidegree up{x, y + 1}, nb{x - 1, y + 2};
                auto p = chart.group(d), e = bss.e2_at(d), pup = chart.group(up), pn = chart.group(nb),
                     pn1 = chart.group({x - 1, y + 1});
                auto t_in = chart.tau_from(up), proj = bss.proj_at(chart, d), delta = bss.delta_at(chart, d),
                     t_n = chart.tau_from(nb);
                if (!p || !e || !pup || !pn || !pn1 || !t_in || !proj || !delta || !t_n) {
                    if (w.contains(d)) rep.unchecked.insert(d);
                    continue;
                }
                try {
                    check_hom(*p, *e, *proj, "proj");
                    check_hom(*e, *pn, *delta, "delta");
                } catch (const MathError& err) {
                    fail(d, err.what());
                    continue;
                }
                if (!(hom_image(*p, *t_in) == hom_kernel(*p, *e, *proj)))
                    fail(d, "not exact at pi" + d.to_string() + ": image of tau differs from kernel of proj");
                if (!(hom_image(*e, *proj) == hom_kernel(*e, *pn, *delta)))
                    fail(d, "not exact at E2" + d.to_string() + ": image of proj differs from kernel of delta");
                if (!(hom_image(*pn, *delta) == hom_kernel(*pn, *pn1, *t_n)))
                    fail(d, "not exact at pi" + nb.to_string() + ": image of delta differs from kernel of tau");
            }
        if (!rep.ok()) return rep;
        if (!bss.differentials.empty() || bss.max_page > 2) {
            PageStack derived = PageStack::from_les(chart, bss, bss.max_page);
            PageStack declared = PageStack::from_differentials(bss);
            for (int r = 2; r <= bss.max_page; ++r) {
                for (const auto& [d, g] : bss.e2) {
                    auto a = derived.cell(r, d), b = declared.cell(r, d);
                    if (!a || !b) continue;
                    if (!(*a == *b)) {
                        fail(d, "declared E_" + std::to_string(r) + " differs from the exact couple");
                        continue;
                    }
                    if (r > bss.max_page) continue;
                    auto da = derived.diff(r, d), db = declared.diff(r, d);
                    if (!da || !db) continue;
                    auto t = derived.cell(r, d_target(d, r));
                    if (!hom_equal(t->group(), *da, *db))
                        fail(d, "declared d_" + std::to_string(r) + " differs from the exact couple");
                }
            }
            if (bss.complete) {
                for (const auto& [d, g] : bss.e2) {
                    auto inf = derived.e_infinity(d);
                    auto last = declared.cell(declared.last_page(), d);
                    if (inf && last && !(*inf == *last))
                        fail(d, "chart is declared complete but E_inf differs from the last declared page");
                }
            }
        }
        return rep;
    }

    for (i64 x = w.x0; x <= w.x1; ++x)
        for (i64 y = w.y0; y <= w.y1; ++y) {
            Bidegree d{x, y};
            Bidegree up{x, y + 1}, nb{x - 1, y + 2};
            auto p = chart.group(d), e = bss.e2_at(d), pn = chart.group(nb), pn1 = chart.group({x - 1, y + 1});
            auto t_in = chart.tau_from(up), t_n = chart.tau_from(nb);
            if (!p || !e || !pn || !pn1 || !t_in || !t_n) {
                rep.unchecked.insert(d);
                continue;
            }
            GroupType c = cokernel_type(*p, *t_in);
            GroupType k = kernel_type(*pn, *pn1, *t_n);
            if (!extension_compatible(c, k, e->type()))
                fail(d, "E2" + d.to_string() + " = " + e->type().to_string() + " is not an extension of " +
                            k.to_string() + " by " + c.to_string());
        }
    return rep;
}

Verdict is_strongly_complete(const TauChart& chart) {
    const Window& w = chart.window;
    if (w.top == Edge::zero) return Verdict::yes;
    if (w.top == Edge::stable) {
        for (i64 x = w.x0; x <= w.x1; ++x) {
            auto g = chart.group({x, w.y1});
            if (g && !g->is_zero()) return Verdict::no;
        }
        return w.left == Edge::unknown || w.right == Edge::unknown ? Verdict::indeterminate : Verdict::yes;
    }
    // Unknown top: a top-row class that survives every tau in the window could
    // be the bottom of an infinitely divisible tower.
    for (i64 x = w.x0; x <= w.x1; ++x) {
        auto g = chart.group({x, w.y1});
        if (!g || g->is_zero()) continue;
        if (w.bottom == Edge::zero) continue;
        if (w.bottom == Edge::unknown) return Verdict::indeterminate;
        auto t = chart.tau_power({x, w.y1}, w.y1 - w.y0);
        auto low = chart.group({x, w.y0});
        if (!t || !low) return Verdict::indeterminate;
        if (!(hom_kernel(*g, *low, *t) == Lattice::full(g->ngens()))) return Verdict::indeterminate;
    }
    return Verdict::yes;
}

std::map<i64, std::optional<AbGroup>> tau_invert(const TauChart& chart) {
    std::map<i64, std::optional<AbGroup>> out;
    const Window& w = chart.window;
    for (i64 x = w.x0; x <= w.x1; ++x) {
        switch (w.bottom) {
            case Edge::zero: out[x] = AbGroup(); break;
            case Edge::stable: out[x] = chart.group({x, w.y0}); break;
            case Edge::unknown: out[x] = std::nullopt; break;
        }
    }
    return out;
}

std::optional<DifferentialSummary> differential_summary(const PageStack& pages, int r, Bidegree source) {
    auto s = pages.cell(r, source);
    auto t = pages.cell(r, d_target(source, r));
    auto m = pages.diff(r, source);
    if (!s || !t || !m) return std::nullopt;
    return DifferentialSummary{image_type(t->group(), *m), kernel_type(s->group(), t->group(), *m)};
}

std::vector<ChartDifference> compare_charts(const SpectralChart& a, const SpectralChart& b, const DiffOptions& opts) {
    std::vector<ChartDifference> out;
    const Window& wa = a.bss.window;
    const Window& wb = b.bss.window;
    i64 x0 = std::min(wa.x0, wb.x0), x1 = std::max(wa.x1, wb.x1);
    i64 y0 = std::min(wa.y0, wb.y0), y1 = std::max(wa.y1, wb.y1);
    if (opts.stems) {
        x0 = std::max(x0, opts.stems->first);
        x1 = std::min(x1, opts.stems->second);
    }
    auto type_of = [](const std::optional<AbGroup>& g) { return g->type().to_string(); };

    if (a.has_pi && b.has_pi)
        for (i64 x = x0; x <= x1; ++x)
            for (i64 y = y0; y <= y1; ++y) {
                auto ga = a.pi.group({x, y}), gb = b.pi.group({x, y});
                if (ga && gb && !(ga->type() == gb->type())) out.push_back({"pi", 0, {x, y}, type_of(ga), type_of(gb)});
            }

    const int through = opts.through > 0 ? opts.through : std::max(a.bss.max_page, b.bss.max_page);
    PageStack pa = a.pages(through), pb = b.pages(through);
    const int last = std::min({pa.last_page(), pb.last_page(), through + 1});
    for (int r = 2; r <= last; ++r)
        for (i64 x = x0; x <= x1; ++x)
            for (i64 y = y0; y <= y1; ++y) {
                const Bidegree d{x, y};
                auto ca = pa.cell(r, d), cb = pb.cell(r, d);
                if (ca && cb && !(ca->group().type() == cb->group().type()))
                    out.push_back({"E", r, d, ca->group().type().to_string(), cb->group().type().to_string()});
                if (r == last) continue;
                auto da = differential_summary(pa, r, d), db = differential_summary(pb, r, d);
                if (da && db && !(*da == *db))
                    out.push_back({"d", r, d, "image " + da->image.to_string() + ", kernel " + da->kernel.to_string(),
                                   "image " + db->image.to_string() + ", kernel " + db->kernel.to_string()});
            }

    if (!opts.decorations) return out;
    auto in_stems = [&](Bidegree d) { return d.x >= x0 && d.x <= x1; };
    auto join = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        std::string s;
        for (const auto& c : v) s += (s.empty() ? "" : ",") + c;
        return s;
    };
    std::set<Bidegree> colored;
    for (const auto& [d, c] : a.deco.colors) colored.insert(d);
    for (const auto& [d, c] : b.deco.colors) colored.insert(d);
    for (Bidegree d : colored) {
        if (!in_stems(d)) continue;
        auto ia = a.deco.colors.find(d), ib = b.deco.colors.find(d);
        std::string ca = ia == a.deco.colors.end() ? "" : join(ia->second);
        std::string cb = ib == b.deco.colors.end() ? "" : join(ib->second);
        if (ca != cb) out.push_back({"color", 0, d, ca, cb});
    }
    std::set<std::pair<int, Bidegree>> tagged;
    for (const auto& [k, t] : a.deco.differential_tags) tagged.insert(k);
    for (const auto& [k, t] : b.deco.differential_tags) tagged.insert(k);
    for (const auto& k : tagged) {
        if (!in_stems(k.second)) continue;
        auto ia = a.deco.differential_tags.find(k), ib = b.deco.differential_tags.find(k);
        std::string ta = ia == a.deco.differential_tags.end() ? "" : ia->second;
        std::string tb = ib == b.deco.differential_tags.end() ? "" : ib->second;
        if (ta != tb) out.push_back({"tag", k.first, k.second, ta, tb});
    }
    return out;
}

}  // namespace tauchart
