#include "tauchart/cover/cover.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tauchart/linalg/normal_forms.hpp"

namespace tauchart {

namespace {

Matrix relation_columns(const AbGroup& g) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < g.ngens(); ++i)
        if (g.order(i) != 0) cols.push_back(vec_scale(unit_vector(g.ngens(), i), g.order(i)));
    return Matrix::from_columns(cols, g.ngens());
}

// Some a with f a = v in the target group.
std::optional<Vec> solve_in(const AbGroup& source, const AbGroup& target, const Matrix& f, const Vec& v) {
    if (target.ngens() == 0) return Vec(source.ngens(), Int(0));
    Matrix a = Matrix::hcat(f, relation_columns(target));
    if (a.cols() == 0) {
        if (!target.is_zero_element(v)) return std::nullopt;
        return Vec{};
    }
    IntegerSolver solver(a);
    auto sol = solver.solve(v);
    if (!sol) return std::nullopt;
    return source.reduce(Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(source.ngens())));
}

Lattice span_in(const AbGroup& g, const std::vector<Vec>& vs) { return Lattice::span(g.ngens(), vs) + g.relations(); }

Lattice column_span(std::size_t n, const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return Lattice::span(n, cols);
}

bool nonzero_map(const AbGroup& target, const Matrix& m) { return !reduce_hom(target, m).is_zero(); }

// A unit multiple of a single generator.
std::optional<std::size_t> unit_generator(const AbGroup& g, const Vec& v) {
    Vec red = g.reduce(v);
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < red.size(); ++i) {
        if (red[i] == 0) continue;
        if (at) return std::nullopt;
        const Int& o = g.order(i);
        bool unit = red[i] == 1 || red[i] == -1 || (o != 0 && red[i] == o - 1);
        if (!unit) return std::nullopt;
        at = i;
    }
    return at;
}

std::optional<std::pair<i64, i64>> line_span(const Line& line, const Window& w) {
    if (w.x1 < w.x0) return std::nullopt;
    i64 lo = line.floor_at(w.x0), hi = lo;
    for (i64 x = w.x0; x <= w.x1; ++x) {
        lo = std::min(lo, line.floor_at(x));
        hi = std::max(hi, line.floor_at(x));
    }
    return std::make_pair(lo, hi);
}

// Verdict from findings and a flag for undetermined checks.
Verdict verdict_of(bool failed, bool undetermined) {
    if (failed) return Verdict::no;
    return undetermined ? Verdict::indeterminate : Verdict::yes;
}

}  // namespace

std::string to_string(Condition c) {
    switch (c) {
        case Condition::strongly_complete: return "strongly complete";
        case Condition::connective_mod_tau: return "E2 vanishes above the line";
        case Condition::tau_inverted: return "tau-inverted equivalence";
        case Condition::iso_and_image: return "isomorphism range and image";
        case Condition::injective: return "injective off the line";
        case Condition::dropped_lift: return "dropped lifts";
        case Condition::kernel_on_line: return "kernel on the line";
        case Condition::drop_differentials: return "line-crossing differentials";
        case Condition::differential_origin: return "differential classification";
    }
    return "?";
}

std::vector<DropRecord> find_drops(const TauChart& y, const Line& line) {
    std::vector<DropRecord> out;
    for (const auto& [d, g] : y.cells) {
        if (!y.window.contains(d) || !line.above(d) || g.is_zero()) continue;
        const i64 l = d.y - line.floor_at(d.x);
        auto up = y.group({d.x, d.y + 1});
        auto t_in = y.tau_from({d.x, d.y + 1});
        std::optional<Lattice> divisible;
        if (up && t_in) divisible = hom_image(g, *t_in);
        for (std::size_t i = 0; i < g.ngens(); ++i) {
            DropRecord rec;
            rec.at = d;
            rec.generator = i;
            rec.name = g.name(i);
            rec.l = l;
            Vec b = unit_vector(g.ngens(), i);
            if (!divisible)
                rec.indeterminate = true;
            else if (divisible->contains(b))
                continue;
            Vec v = b;
            bool dropped = true;
            for (i64 k = 1;; ++k) {
                const Bidegree from{d.x, d.y - k + 1}, to{d.x, d.y - k};
                auto t = y.tau_from(from);
                auto tg = y.group(to);
                if (!t || !tg) {
                    rec.indeterminate = true;
                    break;
                }
                v = tg->reduce(*t * v);
                if (k == l) rec.image = v;
                if (is_zero(v)) {
                    if (k <= l) dropped = false;
                    rec.height = k;
                    break;
                }
                if (k >= l && to.y < y.window.y0 && y.window.bottom == Edge::stable) break;  // tau is iso from here on
            }
            if (dropped) out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<TaggedDifferential> line_crossing_differentials(const PageStack& pages, const Line& line) {
    std::vector<TaggedDifferential> out;
    for (int r = 2; r < pages.last_page(); ++r)
        for (const auto& [src, m] : pages.page(r).d) {
            if (!line.crosses(src, r)) continue;
            auto t = pages.cell(r, d_target(src, r));
            if (t && nonzero_map(t->group(), m)) out.push_back({r, src, "line-crossing"});
        }
    return out;
}

Verdict CoverReport::certified() const {
    Verdict v = Verdict::yes;
    for (Condition c : {Condition::strongly_complete, Condition::connective_mod_tau, Condition::tau_inverted,
                        Condition::iso_and_image, Condition::injective}) {
        auto it = verdicts.find(c);
        v = verdict_and(v, it == verdicts.end() ? Verdict::indeterminate : it->second);
    }
    return v;
}

bool CoverReport::consistent() const {
    return std::none_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second == Verdict::no; });
}

std::string CoverReport::summary() const {
    std::ostringstream os;
    for (const auto& [c, v] : verdicts) {
        os << to_string(c) << ": " << to_string(v) << "\n";
        auto it = witnesses.find(c);
        if (it == witnesses.end()) continue;
        for (const auto& w : it->second) os << "  at " << w.at.to_string() << ": " << w.what << "\n";
    }
    return os.str();
}

namespace {

// State shared by the condition checks of one verification run.
class Verifier {
public:
    Verifier(const ChartMap& f, const Line& line) : f_(f), line_(line) {
        const SpectralChart& x = f.source;
        const SpectralChart& y = f.target;
        if (!x.has_pi || !y.has_pi) throw MathError("verifying a cover needs homotopy on both sides");
        R_ = std::max(x.bss.max_page, y.bss.max_page);
        px_ = x.pages(R_);
        py_ = y.pages(R_);
        last_ = std::min(px_.last_page(), py_.last_page());
    }

    CoverReport run() {
        check_strongly_complete();
        check_vanishing();
        check_tau_inverted();
        check_pages();
        if (is_strongly_complete(f_.target.pi) == Verdict::yes) {
            drops_ = find_drops(f_.target.pi, line_);
            check_dropped_lifts();
            check_kernel();
            check_drop_differentials();
            classify(true);
        } else {
            for (Condition c : {Condition::dropped_lift, Condition::kernel_on_line, Condition::drop_differentials,
                                Condition::differential_origin})
                undetermined_.insert(c);
            classify(false);
        }
        for (Condition c : {Condition::strongly_complete, Condition::connective_mod_tau, Condition::tau_inverted,
                            Condition::iso_and_image, Condition::injective, Condition::dropped_lift,
                            Condition::kernel_on_line, Condition::drop_differentials, Condition::differential_origin}) {
            if (report_.verdicts.count(c)) continue;
            report_.verdicts[c] = verdict_of(report_.witnesses.count(c) > 0, undetermined_.count(c) > 0);
        }
        report_.pages_checked = last_ - 1;
        return std::move(report_);
    }

private:
    void fail(Condition c, Bidegree at, std::string what) { report_.witnesses[c].push_back({at, std::move(what)}); }

    const Window& xw() const { return f_.source.pi.window; }
    bool both_contain(Bidegree d) const {
        return f_.source.pi.window.contains(d) && f_.target.pi.window.contains(d);
    }

    // E_r(X)(d) -> E_r(Y)(d), if both pages are determined and f induces a map.
    const std::optional<Matrix>& induced(int r, Bidegree d) {
        auto key = std::make_pair(r, d);
        auto it = induced_.find(key);
        if (it != induced_.end()) return it->second;
        std::optional<Matrix> out;
        auto sx = px_.cell(r, d), sy = py_.cell(r, d);
        auto m = f_.e2_at(d);
        if (sx && sy && m) {
            try {
                out = sx->induced(*sy, *m);
            } catch (const MathError&) {
                fail(Condition::iso_and_image, d, "the E2 map does not induce a map on E" + std::to_string(r));
            }
        }
        return induced_[key] = out;
    }

    void check_strongly_complete() {
        report_.verdicts[Condition::strongly_complete] = is_strongly_complete(f_.source.pi);
    }

    void check_vanishing() {
        const BssPages& b = f_.source.bss;
        for (const auto& [d, g] : b.e2)
            if (b.window.contains(d) && line_.above(d) && !g.is_zero())
                fail(Condition::connective_mod_tau, d, "E2 is " + g.type().to_string() + " above the line");
        if (b.window.top == Edge::unknown) undetermined_.insert(Condition::connective_mod_tau);
    }

    void check_tau_inverted() {
        const Window& a = f_.source.pi.window;
        const Window& b = f_.target.pi.window;
        const Condition c = Condition::tau_inverted;
        if (a.x0 != b.x0 || a.x1 != b.x1 || a.y0 != b.y0 || a.bottom == Edge::unknown || b.bottom == Edge::unknown) {
            undetermined_.insert(c);
            return;
        }
        for (i64 x = a.x0; x <= a.x1; ++x) {
            const Bidegree d{x, a.y0};
            auto gs = f_.source.pi.group(d), gt = f_.target.pi.group(d);
            AbGroup s = a.bottom == Edge::stable ? *gs : AbGroup::zero();
            AbGroup t = b.bottom == Edge::stable ? *gt : AbGroup::zero();
            Matrix m = (a.bottom == Edge::stable && b.bottom == Edge::stable) ? *f_.pi_at(d) : zero_hom(s, t);
            if (!hom_is_iso(s, t, m)) fail(c, d, "the colimit along tau is not preserved in stem " + std::to_string(x));
        }
        if (a.left == Edge::unknown || a.right == Edge::unknown) undetermined_.insert(c);
    }

    void check_pages() {
        const Window& w = xw();
        for (int r = 2; r <= last_; ++r)
            for (i64 x = w.x0; x <= w.x1; ++x)
                for (i64 y = w.y0; y <= w.y1; ++y) {
                    const Bidegree d{x, y};
                    if (!both_contain(d) || line_.above(d)) continue;
                    const auto& ind = induced(r, d);
                    if (!ind) {
                        if (!px_.cell(r, d) || !py_.cell(r, d)) {
                            undetermined_.insert(Condition::iso_and_image);
                            undetermined_.insert(Condition::injective);
                        }
                        continue;
                    }
                    auto sx = px_.cell(r, d), sy = py_.cell(r, d);
                    const AbGroup& gx = sx->group();
                    const AbGroup& gy = sy->group();
                    if (line_.below_iso_range(d, r)) {
                        if (!hom_is_iso(gx, gy, *ind))
                            fail(Condition::iso_and_image, d,
                                 "E" + std::to_string(r) + " map is not an isomorphism in the isomorphism range");
                    } else {
                        auto perm = py_.permanent_cycles(d);
                        if (!perm) {
                            undetermined_.insert(Condition::iso_and_image);
                        } else {
                            Matrix m = *f_.e2_at(d) * sx->reps();
                            Lattice image = column_span(sy->ambient().ngens(), m) + sy->den();
                            Lattice want = *perm + sy->den();
                            if (!(image == want))
                                fail(Condition::iso_and_image, d,
                                     "E" + std::to_string(r) + " image is not the permanent cycles");
                        }
                    }
                    if (!line_.on_line(d) && !hom_is_injective(gx, gy, *ind))
                        fail(Condition::injective, d, "E" + std::to_string(r) + " map is not injective off the line");
                }
    }

    void check_dropped_lifts() {
        const Condition c = Condition::dropped_lift;
        const TauChart& xs = f_.source.pi;
        for (std::size_t k = 0; k < drops_.size(); ++k) {
            const DropRecord& b = drops_[k];
            const Bidegree dl = b.on_line();
            if (b.indeterminate || !both_contain(dl)) {
                undetermined_.insert(c);
                continue;
            }
            auto gx = xs.group(dl), gy = f_.target.pi.group(dl);
            auto m = f_.pi_at(dl);
            auto a = solve_in(*gx, *gy, *m, b.image);
            if (!a) {
                fail(c, dl, "no dropped lift of " + b.name + " from " + b.at.to_string());
                continue;
            }
            if (!hom_is_injective(*gx, *gy, *m)) fail(c, dl, "the dropped lift of " + b.name + " is not unique");
            lifts_[k] = *a;
            // tau^j a = 0 exactly when tau^{j+l} b = 0.
            for (i64 j = 1; dl.y - j >= xs.window.y0 - 1; ++j) {
                auto t = xs.tau_power(dl, j);
                auto g = xs.group({dl.x, dl.y - j});
                if (!t || !g) {
                    undetermined_.insert(c);
                    break;
                }
                bool a_dies = g->is_zero_element(*t * *a);
                bool b_dies = b.height && j + b.l >= *b.height;
                if (a_dies != b_dies) {
                    fail(c, dl, "tau-torsion of the dropped lift of " + b.name + " does not match");
                    break;
                }
            }
        }
    }

    // [a] in E2(X) coordinates at the lift's degree, or nothing without exact couple maps.
    std::optional<Vec> lift_class(std::size_t k) {
        auto it = lifts_.find(k);
        if (it == lifts_.end()) return std::nullopt;
        const Bidegree dl = drops_[k].on_line();
        auto p = f_.source.bss.proj_at(f_.source.pi, dl);
        if (!p || !f_.source.has_les()) return std::nullopt;
        return *p * it->second;
    }

    // Span of the classes of dropped lifts in E_r(X)(dl), in page coordinates.
    std::optional<Lattice> lift_span(int r, Bidegree dl) {
        auto s = px_.cell(r, dl);
        if (!s) return std::nullopt;
        std::vector<Vec> vs;
        for (std::size_t k = 0; k < drops_.size(); ++k) {
            if (!(drops_[k].on_line() == dl)) continue;
            auto a = lift_class(k);
            if (!a) return std::nullopt;
            if (s->contains(*a)) vs.push_back(s->coords(*a));
        }
        return span_in(s->group(), vs);
    }

    void check_kernel() {
        const Condition c = Condition::kernel_on_line;
        if (!f_.source.has_les()) {
            undetermined_.insert(c);
            return;
        }
        for (const DropRecord& b : drops_)
            if (b.indeterminate) undetermined_.insert(c);
        const Window& w = xw();
        for (i64 x = w.x0; x <= w.x1; ++x) {
            const Bidegree dl{x, line_.floor_at(x)};
            if (!both_contain(dl)) continue;
            for (int r = 2; r <= last_; ++r) {
                const auto& ind = induced(r, dl);
                auto sx = px_.cell(r, dl), sy = py_.cell(r, dl);
                if (!ind) {
                    if (!sx || !sy) undetermined_.insert(c);
                    continue;
                }
                for (std::size_t k = 0; k < drops_.size(); ++k) {
                    const DropRecord& b = drops_[k];
                    if (!(b.on_line() == dl)) continue;
                    bool alive = !b.height || *b.height > b.l + r - 2;
                    if (!alive) continue;
                    auto a = lift_class(k);
                    if (!a) continue;  // reported under the dropped-lift condition
                    if (!sx->contains(*a) || sx->is_zero_class(*a)) {
                        fail(c, dl, "the dropped lift of " + b.name + " vanishes on E" + std::to_string(r));
                        continue;
                    }
                    if (!sy->group().is_zero_element(*ind * sx->coords(*a)))
                        fail(c, dl, "the dropped lift of " + b.name + " is not in the kernel on E" + std::to_string(r));
                }
                auto span = lift_span(r, dl);
                if (!span) {
                    undetermined_.insert(c);
                    continue;
                }
                Lattice ker = hom_kernel(sx->group(), sy->group(), *ind);
                if (!span->contains(ker))
                    fail(c, dl, "E" + std::to_string(r) + " kernel is not spanned by dropped lifts");
            }
        }
    }

    void check_drop_differentials() {
        const Condition c = Condition::drop_differentials;
        if (!f_.source.has_les() || !f_.target.has_les()) {
            undetermined_.insert(c);
            return;
        }
        for (std::size_t k = 0; k < drops_.size(); ++k) {
            const DropRecord& b = drops_[k];
            if (b.indeterminate) {
                undetermined_.insert(c);
                continue;
            }
            if (!b.height) continue;
            const int r = static_cast<int>(*b.height - b.l + 1);
            const int ry = static_cast<int>(*b.height + 1);
            const Bidegree dl = b.on_line();
            // In the target: d_{l+r} hits [b].
            if (ry >= py_.last_page()) {
                undetermined_.insert(c);
            } else {
                auto s = py_.cell(ry, b.at);
                auto dm = py_.diff(ry, d_source_into(b.at, ry));
                auto p = f_.target.bss.proj_at(f_.target.pi, b.at);
                if (!s || !dm || !p) {
                    undetermined_.insert(c);
                } else {
                    // [b] may already be zero on this page when b is congruent mod tau to a
                    // class of smaller height; then the differential onto it is zero.
                    Vec pb = p->column(b.generator);
                    if (!s->contains(pb) ||
                        (!s->is_zero_class(pb) &&
                         !hom_image(s->group(), *dm).contains(s->group().reduce(s->coords(pb)))))
                        fail(c, b.at,
                             "[" + b.name + "] is not hit by a nonzero d" + std::to_string(ry) + " in the target");
                }
            }
            // In the source: d_r hits the dropped lift.
            if (r >= px_.last_page() || !both_contain(dl)) {
                undetermined_.insert(c);
                continue;
            }
            auto a = lift_class(k);
            auto s = px_.cell(r, dl);
            auto dm = px_.diff(r, d_source_into(dl, r));
            if (!a) continue;
            if (!s || !dm) {
                undetermined_.insert(c);
                continue;
            }
            if (!s->contains(*a) || s->is_zero_class(*a) ||
                !hom_image(s->group(), *dm).contains(s->group().reduce(s->coords(*a))))
                fail(c, dl, "the dropped lift of " + b.name + " is not hit by a nonzero d" + std::to_string(r));
        }
    }

    void classify(bool check) {
        const Condition c = Condition::differential_origin;
        for (int r = 2; r < px_.last_page() && r < last_; ++r)
            for (const auto& [src, dm] : px_.page(r).d) {
                const Bidegree tgt = d_target(src, r);
                auto st = px_.cell(r, tgt);
                if (!st || !nonzero_map(st->group(), dm)) continue;
                const auto& it = induced(r, tgt);
                if (!it) {
                    report_.source_differentials.push_back({r, src, "unclassified"});
                    if (check) undetermined_.insert(c);
                    continue;
                }
                auto sy = py_.cell(r, tgt);
                Matrix image = *it * dm;
                if (!nonzero_map(sy->group(), image)) {
                    report_.source_differentials.push_back({r, src, "drop"});
                    if (!check) continue;
                    if (!line_.on_line(tgt)) {
                        fail(c, src, "d" + std::to_string(r) + " dies under the map away from the line");
                        continue;
                    }
                    auto span = lift_span(r, tgt);
                    if (!span)
                        undetermined_.insert(c);
                    else if (!span->contains(hom_image(st->group(), dm)))
                        fail(c, src, "d" + std::to_string(r) + " does not hit dropped lifts");
                    continue;
                }
                report_.source_differentials.push_back({r, src, "lifted"});
                if (!check) continue;
                const auto& is = induced(r, src);
                auto dy = py_.diff(r, src);
                if (!is || !dy) {
                    undetermined_.insert(c);
                    continue;
                }
                if (!hom_equal(sy->group(), image, *dy * *is))
                    fail(c, src, "the map does not commute with d" + std::to_string(r));
            }
    }

    const ChartMap& f_;
    Line line_;
    int R_ = 2;
    int last_ = 2;
    PageStack px_, py_;
    std::vector<DropRecord> drops_;
    std::map<std::size_t, Vec> lifts_;
    std::map<std::pair<int, Bidegree>, std::optional<Matrix>> induced_;
    std::set<Condition> undetermined_;
    CoverReport report_;
};

}  // namespace

CoverReport verify_cover_map(const ChartMap& f, const Line& line) { return Verifier(f, line).run(); }

bool lifts(const ChartMap& f, Bidegree d, const Vec& x) {
    auto s = f.source.pi.group(d), t = f.target.pi.group(d);
    auto m = f.pi_at(d);
    if (!s || !t || !m) throw MathError("homotopy undetermined at " + d.to_string());
    return solve_in(*s, *t, *m, x).has_value();
}

CoverPrediction predict_cover(const SpectralChart& input, const Line& line) {
    if (!input.has_les()) throw MathError("predicting a cover needs the homotopy chart and exact couple maps");
    input.validate();

    // Widen the input so that the line and the rows just around it lie in the window.
    SpectralChart y = input;
    const Window& w0 = input.pi.window;
    auto span = line_span(line, w0);
    if (!span) throw MathError("empty window");
    i64 y0 = w0.y0, y1 = w0.y1;
    if (w0.bottom != Edge::unknown) y0 = std::min(y0, span->first - 1);
    if (w0.top != Edge::unknown) y1 = std::max(y1, span->second + 1);
    y.pi = input.pi.extended(y0, y1);
    y.bss.window = y.pi.window;
    const Window& w = y.pi.window;

    std::vector<DropRecord> drops = find_drops(y.pi, line);

    // Generators of pi on the line that are exactly a dropped lift take its name.
    std::map<Bidegree, std::map<std::size_t, std::string>> renames;
    for (const DropRecord& b : drops) {
        if (b.indeterminate || b.image.empty() || !w.contains(b.on_line())) continue;
        auto g = y.pi.group(b.on_line());
        if (auto i = unit_generator(*g, b.image)) renames[b.on_line()].emplace(*i, b.lift_name());
    }
    auto renamed = [&](Bidegree d, const AbGroup& g) {
        auto it = renames.find(d);
        if (it == renames.end()) return g;
        std::vector<std::string> names = g.names();
        for (const auto& [i, n] : it->second) names[i] = n;
        return AbGroup(names, g.orders());
    };

    SpectralChart x;
    x.has_pi = true;
    Window xw = w;
    xw.top = span->second <= w.y1 ? Edge::zero : Edge::unknown;
    x.pi.window = xw;
    ChartMap f;
    for (const auto& [d, g] : y.pi.cells) {
        if (!w.contains(d) || line.above(d)) continue;
        x.pi.cells[d] = renamed(d, g);
        f.pi[d] = identity_hom(g);
    }
    for (const auto& [d, t] : y.pi.tau)
        if (line.on_or_below(d) && w.column_in(d.x) && d.y <= w.y1) x.pi.tau[d] = t;

    x.bss.window = xw;
    x.bss.les = LesMaps{};
    LesMaps& les = *x.bss.les;
    for (i64 sx = w.x0; sx <= w.x1; ++sx)
        for (i64 sy = w.y0; sy <= w.y1; ++sy) {
            const Bidegree d{sx, sy};
            if (line.above(d)) continue;
            auto ey = y.bss.e2_at(d);
            auto py = y.pi.group(d);
            auto proj = y.bss.proj_at(y.pi, d);
            if (line.below_iso_range(d, 2)) {
                // Same E2 and the same exact couple maps.
                if (ey->is_zero()) continue;
                x.bss.e2[d] = *ey;
                f.e2[d] = identity_hom(*ey);
                if (!py->is_zero()) les.proj[d] = *proj;
                auto it = y.bss.les->delta.find(d);
                if (it != y.bss.les->delta.end()) les.delta[d] = it->second;
            } else if (line.on_line(d)) {
                // E2 is pi itself: nothing maps in by tau.
                if (py->is_zero()) continue;
                AbGroup g = renamed(d, *py);
                x.bss.e2[d] = g;
                les.proj[d] = identity_hom(g);
                if (!ey->is_zero()) f.e2[d] = *proj;
            } else {
                // Off the line: the image of proj, i.e. the permanent cycles of E2.
                if (ey->is_zero() || py->is_zero()) continue;
                Subquotient sq(*ey, hom_image(*ey, *proj), ey->relations());
                if (sq.group().is_zero()) continue;
                x.bss.e2[d] = sq.group();
                f.e2[d] = sq.reps();
                Matrix p(sq.group().ngens(), py->ngens());
                for (std::size_t j = 0; j < py->ngens(); ++j) p.set_column(j, sq.coords(proj->column(j)));
                les.proj[d] = p;
            }
        }
    x.bss.max_page = y.bss.max_page;
    x.bss.complete = y.bss.complete;
    x.bss.differentials = PageStack::from_les(x.pi, x.bss, x.bss.max_page).differential_table();
    x.validate();

    f.source = std::move(x);
    f.target = y;
    f.validate();

    CoverReport report = verify_cover_map(f, line);
    if (!report.consistent()) throw MathError("the predicted cover is inconsistent:\n" + report.summary());

    // Decorations.
    SpectralChart& xs = f.source;
    for (const auto& [d, g] : xs.bss.e2) {
        const AbGroup gy = *y.bss.e2_at(d);
        Matrix m = *f.e2_at(d);
        std::vector<std::string> colors;
        for (std::size_t i = 0; i < g.ngens(); ++i) {
            Vec v = gy.reduce(m.column(i));
            if (is_zero(v))
                colors.push_back("orange");
            else if (unit_generator(gy, v))
                colors.push_back("black");
            else
                colors.push_back("blue");
        }
        xs.deco.colors[d] = colors;
    }
    for (const auto& t : report.source_differentials) xs.deco.differential_tags[{t.r, t.source}] = t.tag;
    for (const auto& l : y.deco.lines)
        if (line.on_or_below(l.from) && line.on_or_below(l.to)) xs.deco.lines.push_back(l);

    CoverPrediction out;
    out.drops = std::move(drops);
    out.differentials = report.source_differentials;
    out.line_crossing = line_crossing_differentials(y.pages(y.bss.max_page), line);
    for (const auto& t : out.line_crossing) f.target.deco.differential_tags[{t.r, t.source}] = t.tag;
    out.report = std::move(report);
    out.map = std::move(f);
    return out;
}

ConnectivityResult connectivity_via_gr(const SpectralChart& x, const Line& line) {
    ConnectivityResult out;
    if (x.has_pi && is_strongly_complete(x.pi) == Verdict::no)
        throw MathError("the mod-tau criterion needs a strongly complete chart");
    out.via_gr = vanishing_line_check(x.bss, line);
    for (const auto& [d, g] : x.bss.e2)
        if (x.bss.window.contains(d) && line.above(d) && !g.is_zero()) out.witnesses.push_back(d);
    if (x.has_pi) {
        bool nonzero = false;
        for (const auto& [d, g] : x.pi.cells)
            if (x.pi.window.contains(d) && line.above(d) && !g.is_zero()) nonzero = true;
        Verdict v = nonzero ? Verdict::no
                            : (x.pi.window.top == Edge::unknown ? Verdict::indeterminate : Verdict::yes);
        // A stable top edge repeats the top row forever; it is above the line eventually.
        if (!nonzero && x.pi.window.top == Edge::stable)
            for (i64 c = x.pi.window.x0; c <= x.pi.window.x1; ++c)
                if (!x.pi.group({c, x.pi.window.y1})->is_zero()) v = Verdict::no;
        out.via_pi = v;
        if (out.via_gr != Verdict::indeterminate && v != Verdict::indeterminate && v != out.via_gr)
            throw MathError("connectivity via the associated graded disagrees with the homotopy");
    }
    return out;
}

Verdict vanishing_line_check(const BssPages& pages, const Line& line) {
    for (const auto& [d, g] : pages.e2)
        if (pages.window.contains(d) && line.above(d) && !g.is_zero()) return Verdict::no;
    return pages.window.top == Edge::unknown ? Verdict::indeterminate : Verdict::yes;
}

i64 cobar_support_bound(const std::vector<i64>& generator_degrees, i64 s) {
    if (generator_degrees.empty()) throw MathError("no generator degrees given");
    if (s < 0) throw MathError("negative cobar degree");
    return *std::min_element(generator_degrees.begin(), generator_degrees.end()) * s;
}

Line cobar_line(i64 m) {
    if (m < 2) throw MathError("a cobar vanishing line needs generators in degrees >= 2");
    return Line(Rational(1, m - 1));
}

CoverCriterion cover_criterion(const FilteredMap& f, const Line& line) {
    f.validate();
    CoverCriterion out;
    const FilteredComplex& a = f.source;
    const FilteredComplex& b = f.target;
    auto lowest = [](const FilteredComplex& c, i64 fallback) { return c.is_empty() ? fallback : c.N0; };
    i64 lo = std::min({lowest(a, f.N0), lowest(b, f.N0), f.N0});
    i64 hi = std::max({a.is_empty() ? lo : a.N1, b.is_empty() ? lo : b.N1, f.N1});
    auto level = [](const FilteredComplex& c, i64 n) { return c.is_empty() ? ChainComplex{} : c.level(n); };

    // Below every explicit level both towers are constant; there the truncation
    // keeps everything once the threshold passes the lowest chain degree.
    const i64 constant = lo - 1;
    out.condition1 = is_quasi_iso(level(a, constant), level(b, constant), f.at(constant));
    if (!out.condition1) out.notes.push_back("not an equivalence after inverting tau");

    out.condition2 = true;
    for (i64 n = lo - 1; n <= hi; ++n) {
        ChainComplex ga = a.is_empty() ? ChainComplex{} : gr_level(a, n);
        ChainComplex gb = b.is_empty() ? ChainComplex{} : gr_level(b, n);
        // gr^n is cone(X^{n+1} -> X^n); the map on cones is the pair of components.
        ChainMap on_cone;
        ChainMap top = f.at(n + 1), bot = f.at(n);
        const ChainComplex& a1 = level(a, n + 1);
        const ChainComplex& a0 = level(a, n);
        const ChainComplex& b1 = level(b, n + 1);
        const ChainComplex& b0 = level(b, n);
        std::set<i64> degrees;
        for (const auto& [k, r] : ga.ranks) degrees.insert(k);
        for (i64 k : degrees) {
            Matrix m(gb.rank(k), ga.rank(k));
            Matrix fb = bot.at(k, a0, b0), fa = top.at(k - 1, a1, b1);
            for (std::size_t i = 0; i < fb.rows(); ++i)
                for (std::size_t j = 0; j < fb.cols(); ++j) m(i, j) = fb(i, j);
            for (std::size_t i = 0; i < fa.rows(); ++i)
                for (std::size_t j = 0; j < fa.cols(); ++j) m(b0.rank(k) + i, a0.rank(k) + j) = fa(i, j);
            on_cone.set(k, std::move(m));
        }
        if (!is_quasi_iso(ga, gb, on_cone, line.cover_threshold(n))) {
            out.condition2 = false;
            out.notes.push_back("associated graded differ above the threshold at level " + std::to_string(n));
        }
    }

    // Direct check: the truncations agree on every level.
    out.covers_equivalent = true;
    for (i64 n = lo - 1; n <= hi; ++n)
        if (!is_quasi_iso(level(a, n), level(b, n), f.at(n), line.cover_threshold(n))) {
            out.covers_equivalent = false;
            break;
        }
    return out;
}

}  // namespace tauchart
