#pragma once

// Constructions shared by the unit and acceptance tests: mutated cover maps
// and pairs of towers with equivalent covers.

#include <random>

#include "tauchart/cover/cover.hpp"

namespace tauchart::support {

inline Matrix drop_row(const Matrix& m, std::size_t i) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (r != i) keep.push_back(r);
    return m.select_rows(keep);
}

inline Matrix drop_col(const Matrix& m, std::size_t j) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (c != j) keep.push_back(c);
    return m.select_cols(keep);
}

// Removes generator i of E2 of the source at d, with every map touching it.
inline void delete_source_generator(ChartMap& f, Bidegree d, std::size_t i) {
    SpectralChart& x = f.source;
    AbGroup g = x.bss.e2.at(d);
    std::vector<std::string> names;
    Vec orders;
    for (std::size_t k = 0; k < g.ngens(); ++k)
        if (k != i) {
            names.push_back(g.name(k));
            orders.push_back(g.order(k));
        }
    if (names.empty())
        x.bss.e2.erase(d);
    else
        x.bss.e2[d] = AbGroup(names, orders);
    if (x.bss.les) {
        auto p = x.bss.les->proj.find(d);
        if (p != x.bss.les->proj.end()) p->second = drop_row(p->second, i);
        auto q = x.bss.les->delta.find(d);
        if (q != x.bss.les->delta.end()) q->second = drop_col(q->second, i);
        if (names.empty()) {
            x.bss.les->proj.erase(d);
            x.bss.les->delta.erase(d);
        }
    }
    auto e = f.e2.find(d);
    if (e != f.e2.end()) {
        if (names.empty())
            f.e2.erase(e);
        else
            e->second = drop_col(e->second, i);
    }
    x.bss.differentials.clear();
    x.deco.colors.erase(d);
    x.deco.differential_tags.clear();
}

// A class of order 2 in E2 of the source at d, with zero exact couple maps.
inline void add_spurious_class(ChartMap& f, Bidegree d) {
    SpectralChart& x = f.source;
    AbGroup old = x.bss.e2_at(d).value_or(AbGroup::zero());
    std::vector<std::string> names = old.names();
    Vec orders = old.orders();
    names.push_back("spurious");
    orders.push_back(Int(2));
    x.bss.e2[d] = AbGroup(names, orders);
    if (x.bss.les) {
        auto pg = x.pi.group(d);
        auto p = x.bss.les->proj.find(d);
        if (p != x.bss.les->proj.end()) p->second = Matrix::vcat(p->second, Matrix(1, pg->ngens()));
        auto q = x.bss.les->delta.find(d);
        if (q != x.bss.les->delta.end()) q->second = Matrix::hcat(q->second, Matrix(q->second.rows(), 1));
    }
    auto e = f.e2.find(d);
    if (e != f.e2.end()) e->second = Matrix::hcat(e->second, Matrix(e->second.rows(), 1));
    x.deco.colors.erase(d);
}

// Makes the source's d_r from src vanish by zeroing the exact couple map behind it.
inline void remove_source_differential(ChartMap& f, int r, Bidegree src) {
    SpectralChart& x = f.source;
    if (x.bss.les) x.bss.les->delta.erase(src);
    x.bss.differentials[r].erase(src);
    x.deco.differential_tags.erase({r, src});
}

inline ChainComplex point_complex(i64 k) {
    ChainComplex c;
    c.ranks[k] = 1;
    return c;
}

// A single explicit level n0 carrying Z[j] with zero below: its homology and
// that of its graded pieces sit strictly below the cover thresholds.
inline FilteredComplex below_threshold_tower(const Line& line, i64 n0, i64 slack) {
    const i64 j = line.cover_threshold(n0 - 1) - 2 - slack;
    FilteredComplex a;
    a.N0 = n0 - 1;
    a.N1 = n0;
    a.levels = {ChainComplex{}, point_complex(j)};
    a.maps = {ChainMap{}};
    a.validate();
    return a;
}

// The inclusion x -> x + a of the first summand.
inline FilteredMap summand_inclusion(const FilteredComplex& x, const FilteredComplex& a) {
    FilteredMap f;
    f.source = x;
    f.target = direct_sum(x, a);
    f.N0 = std::min(f.source.is_empty() ? f.target.N0 : f.source.N0, f.target.N0);
    f.N1 = std::max(f.source.N1, f.target.N1);
    for (i64 n = f.N0; n <= f.N1; ++n) {
        const ChainComplex& s = f.source.level(n);
        const ChainComplex& t = f.target.level(n);
        ChainMap m;
        for (const auto& [k, r] : s.ranks) {
            Matrix block(t.rank(k), r);
            for (std::size_t i = 0; i < r; ++i) block(i, i) = 1;
            m.set(k, block);
        }
        f.components.push_back(m);
    }
    f.validate();
    return f;
}

// Pairs where both hypotheses of the mod-tau criterion hold by construction.
inline FilteredMap criterion_pair(std::uint64_t seed, const Line& line) {
    std::mt19937_64 rng(seed);
    FilteredComplex x = random_tower(seed);
    FilteredComplex junk = below_threshold_tower(line, static_cast<i64>(rng() % 5), static_cast<i64>(rng() % 2));
    if (rng() % 2) junk = direct_sum(junk, below_threshold_tower(line, static_cast<i64>(rng() % 5) - 2, 0));
    return summand_inclusion(x, junk);
}

}  // namespace tauchart::support
