#include <gtest/gtest.h>

#include <random>

#include "support/characters.hpp"
#include "tauchart/equivariant/equivariant.hpp"

using namespace tauchart;

namespace {

std::shared_ptr<const GroupData> cyclic(int n) {
    return std::make_shared<const GroupData>(GroupData::cyclic_two_power(n));
}

ChainComplex point(i64 k) {
    ChainComplex c;
    c.ranks[k] = 1;
    return c;
}

GeomMember empty_chart() {
    SpectralChart c;
    c.has_pi = true;
    c.pi.window = {0, 4, -2, 6};
    c.bss.window = c.pi.window;
    return {std::nullopt, c};
}

GeomMember tower(const FilteredComplex& x) { return {x, std::nullopt}; }

// A chart with Z in a single degree of E2 and nothing else known.
GeomMember class_at(Bidegree d) {
    SpectralChart c;
    c.bss.window = {d.x - 2, d.x + 2, d.y - 3, d.y + 2};
    c.bss.e2[d] = AbGroup({"a"}, {Int(0)});
    return {std::nullopt, c};
}

}  // namespace

TEST(Equivariant, SliceExamples) {
    auto c2 = cyclic(1);
    GeomFamily empty{c2, {{0, empty_chart()}, {1, empty_chart()}}};
    EXPECT_EQ(slice_connective(empty), Verdict::yes);

    // Phi^e connective for y = 0, Phi^{C2} with a class above y = x.
    GeomFamily bad{c2, {{0, tower(FilteredComplex::constant(point(0), 0))}, {1, class_at({2, 3})}}};
    EXPECT_EQ(slice_connective(bad), Verdict::no);
    EXPECT_EQ(o_slice_connective(bad), Verdict::no);

    // The sphere S^rho from level 2: Phi^e = S^2, Phi^{C2} = S^1.
    SphereSymbol rho{VirtualRep::regular(c2, 1), 0};
    GeometricSphere e = geometric_sphere_chart(rho, 0), top = geometric_sphere_chart(rho, 1);
    EXPECT_EQ(e, (GeometricSphere{2, 2}));
    EXPECT_EQ(top, (GeometricSphere{1, 2}));
    GeomFamily sphere{c2, {{0, tower(sphere_tower(e))}, {1, tower(sphere_tower(top))}}};
    EXPECT_EQ(slice_connective(sphere), Verdict::yes);

    // Missing members leave the answer open.
    GeomFamily partial{c2, {{0, empty_chart()}}};
    EXPECT_EQ(slice_connective(partial), Verdict::indeterminate);
}

TEST(Equivariant, OSliceExemptsTrivialSubgroup) {
    auto c2 = cyclic(1);
    // Z[0] at levels <= 40: a class far above y = 0 in the underlying member.
    GeomFamily fam{c2, {{0, tower(FilteredComplex::constant(point(0), 40))}, {1, empty_chart()}}};
    EXPECT_EQ(slice_connective(fam), Verdict::no);
    EXPECT_EQ(o_slice_connective(fam), Verdict::yes);
}

TEST(Equivariant, RestrictedLines) {
    EXPECT_FALSE(restricted_line(SliceKind::slice).trivial);
    EXPECT_EQ(restricted_line(SliceKind::slice).line.slope(), Rational(0, 1));
    EXPECT_TRUE(restricted_line(SliceKind::o_slice).trivial);
    auto c8 = cyclic(3);
    EXPECT_EQ(slice_line(*c8, 3).slope(), Rational(7, 1));
}

TEST(Equivariant, SliceImpliesOSliceAndRestatement) {
    auto c4 = cyclic(2);
    std::mt19937_64 rng(3);
    int slice_yes = 0;
    for (int t = 0; t < 60; ++t) {
        GeomFamily fam{c4, {}};
        for (std::size_t h = 0; h < 3; ++h) {
            FilteredComplex x = random_tower(rng());
            // Shift down so that some members are connective.
            fam.members[h] = tower(shift_fcc(x, 0, -static_cast<i64>(rng() % 12)));
        }
        Verdict s = slice_connective(fam), o = o_slice_connective(fam);
        if (s == Verdict::yes) {
            ++slice_yes;
            EXPECT_EQ(o, Verdict::yes);
        }
        // With a y = 0 connective underlying member the two predicates agree.
        if (member_connective(fam.members[0], restricted_line(SliceKind::slice).line) == Verdict::yes)
            EXPECT_EQ(s, o);
    }
    EXPECT_GT(slice_yes, 3);
}

TEST(Equivariant, NormExamples) {
    auto c2 = cyclic(1);
    for (i64 s = -3; s <= 3; ++s) {
        SphereSymbol n = norm_sphere(0, 1, {VirtualRep::zero(c2, 0), s});
        EXPECT_EQ(n.V, VirtualRep::zero(c2, 1));
        EXPECT_EQ(n.s, 2 * s);
    }
    SphereSymbol one = norm_sphere(0, 1, {VirtualRep::trivial(c2, 0, 1), 0});
    EXPECT_EQ(one.V, VirtualRep::regular(c2, 1));
    EXPECT_EQ(one.s, 0);
    SphereSymbol unit{VirtualRep::zero(c2, 1), 0};
    EXPECT_EQ(norm_sphere(1, 1, unit), unit);
    EXPECT_THROW(norm_sphere(1, 0, unit), MathError);
    EXPECT_THROW(norm_sphere(0, 5, {VirtualRep::zero(c2, 0), 0}), MathError);
}

TEST(Equivariant, GeometricSpheres) {
    auto c2 = cyclic(1);
    EXPECT_EQ(geometric_sphere_chart({VirtualRep::parse(c2, 1, "sigma"), 0}, 1), (GeometricSphere{0, 1}));
    EXPECT_EQ(geometric_sphere_chart({VirtualRep::regular(c2, 1), 0}, 1), (GeometricSphere{1, 2}));
    SphereSymbol v{VirtualRep::parse(c2, 1, "2-3sigma"), 4};
    EXPECT_EQ(geometric_sphere_chart(v, 0), (GeometricSphere{-1, 3}));
}

TEST(Equivariant, DilationRelationGrid) {
    for (int k : {1, 2}) {
        auto g = cyclic(k);
        for (std::size_t h = 0; h < g->chain_length(); ++h) {
            const std::size_t n = g->subgroup(h).irreps.size();
            std::vector<long long> m(n, -2);
            // Enumerate all multiplicity vectors in [-2, 2]^n.
            for (;;) {
                for (i64 s = -3; s <= 3; ++s)
                    for (std::size_t top = h; top < g->chain_length(); ++top) {
                        SphereSymbol sym{VirtualRep(g, h, m), s};
                        DilationCheck c = dilation_relation_check(h, top, sym);
                        EXPECT_TRUE(c.holds()) << sym.to_string();
                        const int index = g->order(top) / g->order(h);
                        EXPECT_EQ(c.lhs.dim, oracle::fixed_dimension(g->order(h), g->order(h), m));
                        EXPECT_EQ(c.lhs.start, index * (sym.V.dim() + s));
                    }
                std::size_t i = 0;
                while (i < n && m[i] == 2) m[i++] = -2;
                if (i == n) break;
                ++m[i];
            }
        }
    }
}

TEST(Equivariant, TotalOfSingleSupport) {
    auto c2 = cyclic(1);
    ROFiltered x{c2, 1, {}, {}, {}};
    VirtualRep v = VirtualRep::parse(c2, 1, "1+2sigma");
    x.values[v] = point(1);
    FilteredComplex t = total(x);
    EXPECT_EQ(t.N1, 3);
    EXPECT_EQ(t.level(3), point(1));
    EXPECT_TRUE(t.level(2).ranks.empty());
    x.constant_axes = {"sigma"};
    EXPECT_THROW(total(x), MathError);
}

TEST(Equivariant, TotalOfTwoElementSupport) {
    // {0, sigma} over C2 with the map X^sigma -> X^0 multiplication by 3.
    auto c2 = cyclic(1);
    ROFiltered x{c2, 1, {}, {}, {}};
    VirtualRep zero = VirtualRep::zero(c2, 1), sigma = VirtualRep::parse(c2, 1, "sigma");
    x.values[zero] = point(0);
    x.values[sigma] = point(0);
    ChainMap three;
    three.set(0, Matrix::from_rows({{Int(3)}}, 1));
    x.maps[{sigma, zero}] = three;
    FilteredComplex by_hand;
    by_hand.N0 = -1;
    by_hand.N1 = 1;
    by_hand.levels = {ChainComplex{}, point(0), point(0)};
    by_hand.maps = {ChainMap{}, three};
    EXPECT_EQ(total(x), by_hand);
}

TEST(Equivariant, DimPullback) {
    auto c2 = cyclic(1);
    FilteredComplex z = random_tower(31);
    std::vector<VirtualRep> support;
    for (long long a = -1; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b) support.push_back(VirtualRep(c2, 1, {a, b}));
    ROFiltered p = dim_pullback(z, c2, 1, support);
    for (const VirtualRep& v : support) EXPECT_EQ(p.values.at(v), z.level(v.dim()));
    FilteredComplex t = total(p);
    for (i64 n = -1; n <= 4; ++n) {
        int count = 0;
        for (const VirtualRep& v : support) count += v.dim() == n;
        const ChainComplex& lvl = t.level(n);
        for (const auto& [k, r] : z.level(n).ranks) EXPECT_EQ(lvl.rank(k), count * r);
    }
    // Constant towers pull back to constant data.
    ROFiltered c = dim_pullback(FilteredComplex::constant(point(2), 50), c2, 1, support);
    for (const auto& [v, val] : c.values) EXPECT_EQ(val, point(2));
}

TEST(Equivariant, MixedGenerators) {
    auto c2 = cyclic(1);
    auto gens = mixed_generators(2, c2, -10, 3);
    std::vector<std::string> names;
    for (const auto& g : gens) names.push_back(g.to_string(*c2));
    std::vector<std::string> want = {"Ind_e^C2 S^{2}", "S^{2}", "Ind_e^C2 S^{3}", "S^{rho_C2}", "S^{2rho_C2}",
                                     "S^{3rho_C2}"};
    EXPECT_EQ(names, want);

    auto e = cyclic(0);
    auto w = mixed_generators(-2, e, -5, 1);
    std::vector<std::string> wn;
    for (const auto& g : w) wn.push_back(g.to_string(*e));
    EXPECT_EQ(wn, (std::vector<std::string>{"S^{-2}", "S^{-1}", "S^{0}", "S^{1}"}));
}
