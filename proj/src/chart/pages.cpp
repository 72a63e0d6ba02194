#include "tauchart/chart/pages.hpp"

#include "tauchart/linalg/normal_forms.hpp"

namespace tauchart {

std::optional<AbGroup> BssPages::e2_at(Bidegree d) const {
    if (d.x < window.x0 || d.x > window.x1) {
        if ((d.x < window.x0 ? window.left : window.right) == Edge::unknown) return std::nullopt;
        return AbGroup();
    }
    if (d.y < window.y0 || d.y > window.y1) {
        if ((d.y < window.y0 ? window.bottom : window.top) == Edge::unknown) return std::nullopt;
        return AbGroup();
    }
    auto it = e2.find(d);
    return it == e2.end() ? AbGroup() : it->second;
}

std::optional<Matrix> BssPages::proj_at(const TauChart& chart, Bidegree d) const {
    auto p = chart.group(d);
    auto e = e2_at(d);
    if (!p || !e) return std::nullopt;
    if (les && window.contains(d)) {
        auto it = les->proj.find(d);
        if (it != les->proj.end()) return it->second;
    }
    return zero_hom(*p, *e);
}

std::optional<Matrix> BssPages::delta_at(const TauChart& chart, Bidegree d) const {
    auto e = e2_at(d);
    auto p = chart.group({d.x - 1, d.y + 2});
    if (!p || !e) return std::nullopt;
    if (les && window.contains(d)) {
        auto it = les->delta.find(d);
        if (it != les->delta.end()) return it->second;
    }
    return zero_hom(*e, *p);
}

void BssPages::validate() const {
    window.validate();
    for (const auto& [d, g] : e2)
        if (!window.contains(d)) throw MathError("E2 cell " + d.to_string() + " lies outside the window");
    if (max_page < 1) throw MathError("max_page must be at least 1");
    for (const auto& [r, table] : differentials) {
        if (r < 2 || r > max_page)
            throw MathError("differential on page " + std::to_string(r) + " outside the declared range 2.." +
                            std::to_string(max_page));
        for (const auto& [d, m] : table)
            if (!window.contains(d)) throw MathError("differential source " + d.to_string() + " outside the window");
    }
    if (les) {
        for (const auto& [d, m] : les->proj)
            if (!window.contains(d)) throw MathError("proj map at " + d.to_string() + " outside the window");
        for (const auto& [d, m] : les->delta)
            if (!window.contains(d)) throw MathError("delta map at " + d.to_string() + " outside the window");
    }
}

namespace {

Matrix relation_columns(const AbGroup& g) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < g.ngens(); ++i)
        if (g.order(i) != 0) {
            Vec v(g.ngens());
            v[i] = g.order(i);
            cols.push_back(v);
        }
    return Matrix::from_columns(cols, g.ngens());
}

// Lookup of E_r in a page under construction, falling back to edge rules.
std::optional<Subquotient> page_lookup(const Page& p, const BssPages& bss, Bidegree d) {
    if (!bss.window.contains(d)) {
        auto e = bss.e2_at(d);
        if (!e) return std::nullopt;
        return Subquotient::whole(*e);
    }
    if (p.unknown.count(d)) return std::nullopt;
    auto it = p.cells.find(d);
    if (it != p.cells.end()) return it->second;
    return Subquotient::whole(AbGroup());
}

}  // namespace

std::optional<Subquotient> les_page_cell(const TauChart& chart, const BssPages& bss, Bidegree d, int r) {
    auto e = bss.e2_at(d);
    if (!e) return std::nullopt;
    if (e->is_zero() || r == 2) return Subquotient::whole(*e);
    auto delta = bss.delta_at(chart, d);
    Bidegree up{d.x - 1, d.y + r}, mid{d.x - 1, d.y + 2};
    auto t1 = chart.tau_power(up, r - 2);
    auto pmid = chart.group(mid);
    auto t2 = chart.tau_power(d, r - 2);
    auto pd = chart.group(d), plow = chart.group({d.x, d.y - r + 2});
    auto proj = bss.proj_at(chart, d);
    if (!delta || !t1 || !pmid || !t2 || !pd || !plow || !proj) return std::nullopt;
    Lattice z = Lattice::preimage(*delta, hom_image(*pmid, *t1));
    Lattice b = hom_kernel(*pd, *plow, *t2).image(*proj);
    return Subquotient(*e, z, b);
}

PageStack PageStack::from_les(const TauChart& chart, const BssPages& bss, int last) {
    PageStack st;
    st.bss_ = std::make_shared<const BssPages>(bss);
    st.chart_ = std::make_shared<const TauChart>(chart);
    for (int r = 2; r <= last + 1; ++r) {
        Page p;
        p.r = r;
        for (const auto& [d, g] : bss.e2) {
            if (g.is_zero()) continue;
            auto sq = les_page_cell(chart, bss, d, r);
            if (sq)
                p.cells.emplace(d, std::move(*sq));
            else
                p.unknown.insert(d);
        }
        st.pages_.push_back(std::move(p));
    }
    for (int r = 2; r <= last; ++r) {
        Page& p = st.pages_[static_cast<std::size_t>(r - 2)];
        for (const auto& [d, s] : p.cells) {
            if (s.group().is_zero()) continue;
            Bidegree t = d_target(d, r);
            auto tgt = page_lookup(p, bss, t);
            if (!tgt) {
                p.d_unknown.insert(d);
                continue;
            }
            if (tgt->group().is_zero()) continue;
            Bidegree up{d.x - 1, d.y + r}, mid{d.x - 1, d.y + 2};
            auto delta = bss.delta_at(chart, d);
            auto t1 = chart.tau_power(up, r - 2);
            auto pmid = chart.group(mid);
            auto pup = chart.group(up);
            auto proj_up = bss.proj_at(chart, up);
            if (!delta || !t1 || !pmid || !pup || !proj_up) {
                p.d_unknown.insert(d);
                continue;
            }
            IntegerSolver solver(Matrix::hcat(*t1, relation_columns(*pmid)));
            Matrix m(tgt->group().ngens(), s.group().ngens());
            for (std::size_t j = 0; j < s.group().ngens(); ++j) {
                Vec v = *delta * s.rep(j);
                auto sol = solver.solve(v);
                if (!sol)
                    throw MathError("exact couple inconsistent at " + d.to_string() + ": E_" + std::to_string(r) +
                                    " cycle whose boundary is not divisible by tau^" + std::to_string(r - 2));
                Vec a(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(pup->ngens()));
                m.set_column(j, tgt->coords(*proj_up * a));
            }
            if (!m.is_zero()) p.d.emplace(d, std::move(m));
        }
    }
    return st;
}

namespace {

void attach_declared(Page& p, const BssPages& bss) {
    auto tab_it = bss.differentials.find(p.r);
    const std::map<Bidegree, Matrix> empty;
    const auto& table = tab_it == bss.differentials.end() ? empty : tab_it->second;
    for (const auto& [d, m] : table) {
        if (p.unknown.count(d)) {
            p.d_unknown.insert(d);
            continue;
        }
        auto src = page_lookup(p, bss, d);
        if (src->group().is_zero() && !m.is_zero())
            throw MathError("d_" + std::to_string(p.r) + " declared on " + d.to_string() + " where E_" +
                            std::to_string(p.r) + " is zero");
    }
    for (const auto& [d, s] : p.cells) {
        if (s.group().is_zero()) continue;
        auto tgt = page_lookup(p, bss, d_target(d, p.r));
        auto it = table.find(d);
        if (!tgt) {
            p.d_unknown.insert(d);
            continue;
        }
        if (tgt->group().is_zero()) {
            if (it != table.end() && !it->second.is_zero())
                throw MathError("d_" + std::to_string(p.r) + " from " + d.to_string() + " targets a zero group");
            continue;
        }
        if (it == table.end()) continue;
        const std::string what = "d_" + std::to_string(p.r) + " from " + d.to_string();
        check_hom(s.group(), tgt->group(), it->second, what);
        Matrix m = reduce_hom(tgt->group(), it->second);
        if (!m.is_zero()) p.d.emplace(d, m);
    }
}

}  // namespace

Page turn_page(const Page& er, const BssPages& bss) {
    const int r = er.r;
    // d o d = 0
    for (const auto& [s, m1] : er.d) {
        Bidegree t = d_target(s, r);
        auto it = er.d.find(t);
        if (it == er.d.end()) continue;
        auto tt = page_lookup(er, bss, d_target(t, r));
        if (!tt) continue;
        if (!reduce_hom(tt->group(), it->second * m1).is_zero())
            throw MathError("d_" + std::to_string(r) + " o d_" + std::to_string(r) + " != 0 starting at " +
                            s.to_string());
    }
    Page next;
    next.r = r + 1;
    for (const auto& [d, g] : bss.e2) {
        if (g.is_zero()) continue;
        auto cur = page_lookup(er, bss, d);
        if (!cur || er.d_unknown.count(d)) {
            next.unknown.insert(d);
            continue;
        }
        const Subquotient& s = *cur;
        if (s.group().is_zero()) {
            next.cells.emplace(d, s);
            continue;
        }
        Bidegree src = d_source_into(d, r);
        auto incoming = page_lookup(er, bss, src);
        if (!incoming || er.d_unknown.count(src)) {
            next.unknown.insert(d);
            continue;
        }
        Lattice num = s.num();
        auto out_it = er.d.find(d);
        if (out_it != er.d.end()) {
            auto tgt = page_lookup(er, bss, d_target(d, r));
            const Matrix& bas = s.num().basis();
            Matrix w(tgt->group().ngens(), bas.rows());
            for (std::size_t i = 0; i < bas.rows(); ++i) w.set_column(i, out_it->second * s.coords(bas.row(i)));
            Lattice k = Lattice::preimage(w, tgt->group().relations());
            num = k.rank() ? Lattice::span_rows(k.basis() * bas) : Lattice(s.ambient().ngens());
        }
        Lattice den = s.den();
        auto in_it = er.d.find(src);
        if (in_it != er.d.end()) den = den + Lattice::span_cols(s.reps() * in_it->second);
        next.cells.emplace(d, Subquotient(s.ambient(), num, den));
    }
    return next;
}

PageStack PageStack::from_differentials(const BssPages& bss) {
    PageStack st;
    st.bss_ = std::make_shared<const BssPages>(bss);
    Page p;
    p.r = 2;
    for (const auto& [d, g] : bss.e2)
        if (!g.is_zero()) p.cells.emplace(d, Subquotient::whole(g));
    for (int r = 2; r <= bss.max_page; ++r) {
        attach_declared(p, bss);
        Page next = turn_page(p, bss);
        st.pages_.push_back(std::move(p));
        p = std::move(next);
    }
    st.pages_.push_back(std::move(p));
    return st;
}

std::optional<Subquotient> PageStack::cell(int r, Bidegree d) const {
    if (r < 2 || r > last_page()) throw MathError("page " + std::to_string(r) + " not computed");
    return page_lookup(page(r), *bss_, d);
}

std::optional<Matrix> PageStack::diff(int r, Bidegree d) const {
    if (r < 2 || r >= last_page()) throw MathError("differential d_" + std::to_string(r) + " not computed");
    auto s = cell(r, d);
    auto t = cell(r, d_target(d, r));
    if (!s || !t) return std::nullopt;
    if (s->group().is_zero() || t->group().is_zero()) return Matrix(t->group().ngens(), s->group().ngens());
    const Page& p = page(r);
    if (p.d_unknown.count(d)) return std::nullopt;
    auto it = p.d.find(d);
    if (it != p.d.end()) return it->second;
    return Matrix(t->group().ngens(), s->group().ngens());
}

std::optional<Lattice> PageStack::permanent_cycles(Bidegree d) const {
    auto e = bss_->e2_at(d);
    if (!e) return std::nullopt;
    if (e->is_zero()) return Lattice(0);
    if (chart_) {
        if (bss_->window.top == Edge::unknown) return std::nullopt;
        const TauChart& chart = *chart_;
        i64 r = std::max<i64>(2, bss_->window.y1 - d.y + 1);
        auto delta = bss_->delta_at(chart, d);
        auto t1 = chart.tau_power({d.x - 1, d.y + r}, r - 2);
        auto pmid = chart.group({d.x - 1, d.y + 2});
        if (!delta || !t1 || !pmid) return std::nullopt;
        return Lattice::preimage(*delta, hom_image(*pmid, *t1)) + e->relations();
    }
    if (!bss_->complete) return std::nullopt;
    auto c = cell(last_page(), d);
    if (!c) return std::nullopt;
    return c->num();
}

std::optional<Lattice> PageStack::infinite_boundaries(Bidegree d) const {
    auto e = bss_->e2_at(d);
    if (!e) return std::nullopt;
    if (e->is_zero()) return Lattice(0);
    if (chart_) {
        if (bss_->window.bottom == Edge::unknown) return std::nullopt;
        const TauChart& chart = *chart_;
        i64 k = std::max<i64>(0, d.y - bss_->window.y0 + 1);
        auto t2 = chart.tau_power(d, k);
        auto pd = chart.group(d), plow = chart.group({d.x, d.y - k});
        auto proj = bss_->proj_at(chart, d);
        if (!t2 || !pd || !plow || !proj) return std::nullopt;
        return hom_kernel(*pd, *plow, *t2).image(*proj) + e->relations();
    }
    if (!bss_->complete) return std::nullopt;
    auto c = cell(last_page(), d);
    if (!c) return std::nullopt;
    return c->den();
}

std::optional<Subquotient> PageStack::e_infinity(Bidegree d) const {
    auto e = bss_->e2_at(d);
    if (!e) return std::nullopt;
    auto z = permanent_cycles(d);
    auto b = infinite_boundaries(d);
    if (!z || !b) return std::nullopt;
    if (e->is_zero()) return Subquotient::whole(*e);
    return Subquotient(*e, *z, *b);
}

std::map<int, std::map<Bidegree, Matrix>> PageStack::differential_table() const {
    std::map<int, std::map<Bidegree, Matrix>> out;
    for (int r = 2; r < last_page(); ++r)
        for (const auto& [d, m] : page(r).d)
            if (!m.is_zero()) out[r][d] = m;
    return out;
}

}  // namespace tauchart
