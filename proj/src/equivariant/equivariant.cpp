#include "tauchart/equivariant/equivariant.hpp"

#include <algorithm>

namespace tauchart {

namespace {

void check_in_chain(const GroupData& g, std::size_t h) {
    if (h >= g.chain_length()) throw MathError("subgroup index " + std::to_string(h) + " is not in the chain of " + g.name());
}

Verdict pi_vanishes_above(const TauChart& pi, const Line& line, std::vector<Bidegree>& witnesses) {
    for (const auto& [d, g] : pi.cells)
        if (pi.window.contains(d) && line.above(d) && !g.is_zero()) witnesses.push_back(d);
    if (pi.window.top == Edge::stable)
        for (i64 x = pi.window.x0; x <= pi.window.x1; ++x) {
            const Bidegree d{x, pi.window.y1};
            if (!pi.group(d)->is_zero() && !line.above(d))
                witnesses.push_back({x, std::max(pi.window.y1 + 1, line.floor_at(x) + 1)});
        }
    if (!witnesses.empty()) return Verdict::no;
    if (pi.window.top == Edge::unknown) return Verdict::indeterminate;
    return Verdict::yes;
}

}  // namespace

void GeomFamily::validate() const {
    if (!group) throw MathError("geometric family without group data");
    for (const auto& [h, m] : members) {
        check_in_chain(*group, h);
        if (m.tower.has_value() == m.chart.has_value())
            throw MathError("member for " + group->subgroup(h).name + " must be exactly one of a tower or a chart");
        if (m.tower) m.tower->validate();
        if (m.chart) m.chart->validate();
    }
}

Line slice_line(const GroupData& g, std::size_t h) {
    check_in_chain(g, h);
    return Line(Rational(g.order(h) - 1, 1));
}

MemberCheck check_member(const GeomMember& m, const Line& line) {
    MemberCheck out;
    if (m.tower) {
        out.verdict = pi_vanishes_above(homotopy_chart(*m.tower), line, out.witnesses);
        return out;
    }
    if (!m.chart) return out;
    const SpectralChart& c = *m.chart;
    if (!c.bss.e2.empty() || !c.has_pi) {
        try {
            ConnectivityResult r = connectivity_via_gr(c, line);
            out.verdict = r.via_gr;
            out.witnesses = r.witnesses;
            return out;
        } catch (const MathError&) {
            // Not strongly complete: fall back on the homotopy when it is there.
            if (!c.has_pi) return out;
        }
    }
    out.verdict = pi_vanishes_above(c.pi, line, out.witnesses);
    return out;
}

Verdict member_connective(const GeomMember& m, const Line& line) { return check_member(m, line).verdict; }

SliceCheck slice_check(const GeomFamily& fam, SliceKind kind) {
    fam.validate();
    SliceCheck out;
    for (std::size_t h = kind == SliceKind::slice ? 0 : 1; h < fam.group->chain_length(); ++h) {
        auto it = fam.members.find(h);
        MemberCheck m;
        if (it == fam.members.end())
            m.missing = true;
        else
            m = check_member(it->second, slice_line(*fam.group, h));
        m.subgroup = h;
        out.verdict = verdict_and(out.verdict, m.verdict);
        out.members.push_back(m);
    }
    return out;
}

Verdict slice_connective(const GeomFamily& fam) { return slice_check(fam, SliceKind::slice).verdict; }

Verdict o_slice_connective(const GeomFamily& fam) { return slice_check(fam, SliceKind::o_slice).verdict; }

RestrictedLine restricted_line(SliceKind kind) {
    if (kind == SliceKind::slice) return {false, Line(Rational(0, 1))};
    return {true, Line(Rational(0, 1))};
}

std::string SphereSymbol::to_string() const { return "S^{" + V.to_string() + "," + std::to_string(s) + "}"; }

SphereSymbol norm_sphere(std::size_t h, std::size_t g, const SphereSymbol& sym) {
    const GroupData& gd = *sym.V.group();
    check_in_chain(gd, g);
    if (sym.ambient() != h) throw MathError("sphere symbol does not live over the given subgroup");
    if (h > g) throw MathError("norm goes from a subgroup to a larger one");
    return {sym.V.induce_to(g), sym.s * (gd.order(g) / gd.order(h))};
}

GeometricSphere geometric_sphere_chart(const SphereSymbol& sym, std::size_t k) {
    check_in_chain(*sym.V.group(), k);
    if (k > sym.ambient()) throw MathError("geometric fixed points for a subgroup outside the ambient one");
    return {sym.V.fixed_dim(k), sym.V.dim() + sym.s};
}

FilteredComplex sphere_tower(const GeometricSphere& s) {
    ChainComplex c;
    c.ranks[s.dim] = 1;
    return FilteredComplex::constant(c, s.start);
}

GeometricSphere read_sphere_tower(const FilteredComplex& x) {
    FilteredComplex c = x.canonical();
    if (c.is_empty() || c.N0 != c.N1) throw MathError("not the tower of a single sphere");
    const ChainComplex& top = c.level(c.N1);
    if (top.ranks.size() != 1 || top.ranks.begin()->second != 1 || !top.d.empty())
        throw MathError("not the tower of a single sphere");
    return {top.ranks.begin()->first, c.N1};
}

DilationCheck dilation_relation_check(std::size_t h, std::size_t g, const SphereSymbol& sym) {
    const GroupData& gd = *sym.V.group();
    DilationCheck out;
    out.lhs = geometric_sphere_chart(norm_sphere(h, g, sym), g);
    FilteredComplex phi_h = sphere_tower(geometric_sphere_chart(sym, h));
    out.rhs = read_sphere_tower(dilate_fcc(phi_h, gd.order(g) / gd.order(h)));
    return out;
}

void ROFiltered::validate() const {
    if (!group) throw MathError("RO-indexed data without group data");
    check_in_chain(*group, subgroup);
    for (const auto& [v, c] : values) {
        if (v.subgroup() != subgroup) throw MathError("support element " + v.to_string() + " over another subgroup");
        c.validate();
    }
    for (const auto& [key, m] : maps) {
        const auto& [w, v] = key;
        auto iw = values.find(w), iv = values.find(v);
        if (iw == values.end() || iv == values.end())
            throw MathError("map " + w.to_string() + " -> " + v.to_string() + " leaves the support");
        if (ro_compare(v, w) != RoOrder::less || w.dim() != v.dim() + 1)
            throw MathError("map " + w.to_string() + " -> " + v.to_string() + " is not along a covering relation");
        if (!is_chain_map(iw->second, iv->second, m))
            throw MathError("map " + w.to_string() + " -> " + v.to_string() + " is not a chain map");
    }
}

FilteredComplex total(const ROFiltered& x) {
    x.validate();
    if (!x.constant_axes.empty())
        throw MathError("the total object needs finite support, but the data is constant along " + x.constant_axes[0]);
    if (x.values.empty()) return FilteredComplex::empty();
    std::map<i64, std::vector<VirtualRep>> by_dim;
    for (const auto& [v, c] : x.values) by_dim[v.dim()].push_back(v);
    const i64 lo = by_dim.begin()->first, hi = by_dim.rbegin()->first;

    // Offsets of each summand, per chain degree.
    std::map<i64, ChainComplex> level;
    std::map<VirtualRep, std::map<i64, std::size_t>> offset;
    for (i64 n = lo; n <= hi; ++n) {
        ChainComplex sum;
        for (const VirtualRep& v : by_dim[n]) {
            const ChainComplex& c = x.values.at(v);
            for (const auto& [k, r] : c.ranks) offset[v][k] = sum.rank(k);
            sum = direct_sum(sum, c);
        }
        level[n] = sum;
    }

    FilteredComplex out;
    out.N0 = lo - 1;
    out.N1 = hi;
    out.levels.push_back(ChainComplex{});
    for (i64 n = lo; n <= hi; ++n) out.levels.push_back(level[n]);
    out.maps.push_back(ChainMap{});
    for (i64 n = lo; n < hi; ++n) {
        const ChainComplex& src = level[n + 1];
        const ChainComplex& dst = level[n];
        std::map<i64, Matrix> blocks;
        for (const auto& [k, r] : src.ranks) blocks[k] = Matrix(dst.rank(k), r);
        for (const auto& [key, m] : x.maps) {
            const auto& [w, v] = key;
            if (w.dim() != n + 1) continue;
            const ChainComplex& cw = x.values.at(w);
            const ChainComplex& cv = x.values.at(v);
            for (const auto& [k, r] : cw.ranks) {
                Matrix b = m.at(k, cw, cv);
                for (std::size_t i = 0; i < b.rows(); ++i)
                    for (std::size_t j = 0; j < b.cols(); ++j)
                        blocks[k](offset[v][k] + i, offset[w][k] + j) = b(i, j);
            }
        }
        ChainMap f;
        for (auto& [k, b] : blocks) f.set(k, std::move(b));
        out.maps.push_back(f);
    }
    out.validate();
    return out;
}

ROFiltered dim_pullback(const FilteredComplex& z, std::shared_ptr<const GroupData> group, std::size_t subgroup,
                        const std::vector<VirtualRep>& support) {
    ROFiltered out;
    out.group = std::move(group);
    out.subgroup = subgroup;
    for (const VirtualRep& v : support) out.values[v] = z.level(v.dim());
    for (const VirtualRep& w : support)
        for (const VirtualRep& v : support)
            if (w.dim() == v.dim() + 1 && ro_compare(v, w) == RoOrder::less) out.maps[{w, v}] = z.structure(v.dim());
    out.validate();
    return out;
}

std::string MixedGenerator::to_string(const GroupData& g) const {
    std::string rep = this->rep.to_string();
    if (subgroup > 0) {
        VirtualRep reg = VirtualRep::regular(this->rep.group(), subgroup);
        for (long long m = -64; m <= 64; ++m)
            if (m != 0 && reg * m == this->rep) rep = (m == 1 ? "" : std::to_string(m)) + "rho_" + g.subgroup(subgroup).name;
    }
    std::string sphere = "S^{" + rep + "}";
    if (subgroup == g.top()) return sphere;
    return "Ind_" + g.subgroup(subgroup).name + "^" + g.subgroup(g.top()).name + " " + sphere;
}

std::vector<MixedGenerator> mixed_generators(i64 i, std::shared_ptr<const GroupData> group, i64 m_lo, i64 m_hi) {
    std::vector<MixedGenerator> out;
    auto add = [&](MixedGenerator g) {
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    };
    for (std::size_t h = 0; h < group->chain_length(); ++h) add({h, VirtualRep::trivial(group, h, i)});
    for (std::size_t h = 0; h < group->chain_length(); ++h) {
        const i64 order = group->order(h);
        for (i64 m = std::max(ceil_div(i, order), m_lo); m <= m_hi; ++m)
            add({h, VirtualRep::regular(group, h) * m});
    }
    return out;
}

}  // namespace tauchart
