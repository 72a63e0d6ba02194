#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tauchart/chart/ops.hpp"
#include "tauchart/fcc/filtered_complex.hpp"

using namespace tauchart;

namespace {

ChainComplex point(i64 k) {
    ChainComplex c;
    c.ranks[k] = 1;
    return c;
}

// Z[k+1] -m-> Z[k]
ChainComplex disk(i64 k, long m) {
    ChainComplex c;
    c.ranks[k] = 1;
    c.ranks[k + 1] = 1;
    c.set_diff(k + 1, Matrix::from_rows({{Int(m)}}, 1));
    return c;
}

ChainMap scalar(i64 k, long v) {
    ChainMap f;
    f.set(k, Matrix::from_rows({{Int(v)}}, 1));
    return f;
}

FilteredComplex two_level(const ChainComplex& top, const ChainComplex& bottom, const ChainMap& f) {
    FilteredComplex x;
    x.N0 = 0;
    x.N1 = 1;
    x.levels = {bottom, top};
    x.maps = {f};
    x.validate();
    return x;
}

// Free rank and p-torsion multiplicities of H_k from ranks over Q and F_p.
struct OracleType {
    std::size_t rank;
    std::map<long, std::size_t> p_counts;
    bool operator==(const OracleType&) const = default;
};

const long kPrimes[] = {2, 3, 5, 7, 11, 13};

OracleType oracle_homology(const ChainComplex& c, i64 k) {
    Matrix dk = c.diff(k), dk1 = c.diff(k + 1);
    const std::size_t q1 = oracle::rational_rank(dk1);
    OracleType t{c.rank(k) - oracle::rational_rank(dk) - q1, {}};
    for (long p : kPrimes) t.p_counts[p] = q1 - oracle::mod_p_rank(dk1, p);
    return t;
}

OracleType from_type(const GroupType& g) {
    OracleType t{g.rank, {}};
    for (long p : kPrimes) {
        std::size_t n = 0;
        for (const auto& f : g.torsion)
            if (f % p == 0) ++n;
        t.p_counts[p] = n;
    }
    return t;
}

}  // namespace

TEST(Fcc, ConstantTowerChart) {
    FilteredComplex x = FilteredComplex::yoneda(0);
    TauChart t = homotopy_chart(x);
    for (i64 y = t.window.y0 - 3; y <= 0; ++y) {
        ASSERT_TRUE(t.group({0, y}));
        EXPECT_EQ(t.group({0, y})->type().to_string(), "Z");
        EXPECT_TRUE(hom_is_iso(*t.group({0, y}), *t.group({0, y - 1}), *t.tau_from({0, y})));
    }
    EXPECT_TRUE(t.group({0, 1})->is_zero());
}

TEST(Fcc, TorsionAtOneLevel) {
    FilteredComplex x = FilteredComplex::constant(disk(0, 2), 3);
    TauChart t = homotopy_chart(x);
    EXPECT_EQ(t.group({0, 3})->type().to_string(), "Z/2");
    EXPECT_TRUE(t.group({0, 4})->is_zero());
    EXPECT_TRUE(t.group({1, 2})->is_zero());
}

TEST(Fcc, HomologyAgreesWithRankOracle) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        FilteredComplex x = random_tower(seed);
        for (i64 n = x.N0; n <= x.N1; ++n) {
            const ChainComplex& c = x.level(n);
            auto dr = c.degree_range();
            if (!dr) continue;
            for (i64 k = dr->first - 1; k <= dr->second + 1; ++k)
                EXPECT_EQ(from_type(homology(c, k).group().type()), oracle_homology(c, k))
                    << "seed " << seed << " level " << n << " degree " << k;
        }
    }
}

TEST(Fcc, GradedPieces) {
    FilteredComplex c = FilteredComplex::constant(disk(0, 3), 2);
    for (const auto& [n, g] : gr(c)) {
        if (n >= 2) continue;
        for (i64 k = -1; k <= 3; ++k) EXPECT_TRUE(homology(g, k).group().is_zero()) << n << " " << k;
    }
    FilteredComplex y = FilteredComplex::yoneda(4);
    for (i64 n = 0; n <= 6; ++n) {
        Subquotient h = homology(gr_level(y, n), 0);
        EXPECT_EQ(h.group().type().to_string(), n == 4 ? "Z" : "0");
    }
}

TEST(Fcc, TwoLevelBocksteinByHand) {
    // X^1 = Z[0] including into X^0 = (Z[1] -2-> Z[0]).
    FilteredComplex x = two_level(point(0), disk(0, 2), scalar(0, 1));
    SpectralChart sc = spectral_chart(x, 4);
    EXPECT_EQ(sc.pi.group({0, 1})->type().to_string(), "Z");
    EXPECT_EQ(sc.pi.group({0, 0})->type().to_string(), "Z/2");
    EXPECT_EQ(sc.bss.e2_at({0, 1})->type().to_string(), "Z");
    EXPECT_EQ(sc.bss.e2_at({1, -1})->type().to_string(), "Z");
    EXPECT_TRUE(sc.bss.e2_at({0, 0})->is_zero());
    PageStack p = sc.pages(4);
    auto s = differential_summary(p, 2, {1, -1});
    ASSERT_TRUE(s);
    EXPECT_EQ(s->image.to_string(), "Z");
    EXPECT_EQ(p.cell(3, {0, 1})->group().type().to_string(), "Z/2");
    EXPECT_TRUE(p.cell(3, {1, -1})->group().is_zero());
    EXPECT_EQ(p.e_infinity({0, 1})->group().type().to_string(), "Z/2");
    // The limit class has tau-torsion height 1 only after inverting tau: tau is onto.
    EXPECT_TRUE(hom_is_surjective(*sc.pi.group({0, 0}), *sc.pi.tau_from({0, 1})));
    EXPECT_TRUE(check_les_consistency(sc).ok());
}

TEST(Fcc, ConstantTowerHasNoDifferentials) {
    FilteredComplex x = FilteredComplex::constant(direct_sum(disk(0, 2), point(1)), 0);
    SpectralChart sc = spectral_chart(x, 5);
    EXPECT_TRUE(sc.bss.differentials.empty());
    PageStack p = sc.pages(5);
    for (const auto& [d, g] : sc.bss.e2) EXPECT_EQ(p.e_infinity(d)->group().type(), g.type());
}

TEST(Fcc, OracleChartsAreConsistent) {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        FilteredComplex x = random_tower(seed);
        SpectralChart sc = spectral_chart(x, 6);
        sc.validate();
        LesReport r = check_les_consistency(sc);
        EXPECT_TRUE(r.ok()) << "seed " << seed << ": " << (r.ok() ? "" : r.failures[0].what);
        EXPECT_TRUE(r.unchecked.empty()) << "seed " << seed;
        EXPECT_NE(is_strongly_complete(sc.pi), Verdict::no);
    }
}

TEST(Fcc, DirectSumIsPagewise) {
    FilteredComplex a = random_tower(7), b = random_tower(8);
    FilteredComplex s = direct_sum(a, b);
    s.validate();
    Window w = default_window(s);
    PageStack pa = spectral_chart(a, 5, w).pages(5), pb = spectral_chart(b, 5, w).pages(5),
              ps = spectral_chart(s, 5, w).pages(5);
    for (int r = 2; r <= 6; ++r)
        for (i64 x = w.x0; x <= w.x1; ++x)
            for (i64 y = w.y0; y <= w.y1; ++y) {
                GroupType ta = pa.cell(r, {x, y})->group().type(), tb = pb.cell(r, {x, y})->group().type(),
                          ts = ps.cell(r, {x, y})->group().type();
                AbGroup sum(std::vector<std::string>(ta.torsion.size() + tb.torsion.size() + ta.rank + tb.rank, "g"),
                            [&] {
                                Vec o = ta.torsion;
                                o.insert(o.end(), tb.torsion.begin(), tb.torsion.end());
                                o.insert(o.end(), ta.rank + tb.rank, Int(0));
                                return o;
                            }());
                EXPECT_EQ(sum.type(), ts) << r << " " << x << " " << y;
            }
}

TEST(Fcc, CoverIsConnectiveAndIsoBelowLine) {
    const Rational slopes[] = {{0, 1}, {1, 2}, {1, 1}, {3, 2}, {2, 1}, {3, 1}};
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        FilteredComplex x = random_tower(seed);
        for (const auto& a : slopes) {
            Line line(a);
            FilteredMap f = linear_cover_map(x, line);
            f.validate();
            Window w = default_window(x);
            for (i64 s = w.x0; s <= w.x1; ++s)
                for (i64 t = w.y0; t <= w.y1; ++t) {
                    const i64 n = s + t;
                    Subquotient hc = homology(f.source.level(n), s), hx = homology(x.level(n), s);
                    if (line.above({s, t})) {
                        EXPECT_TRUE(hc.group().is_zero()) << seed << " " << s << "," << t;
                    } else {
                        Matrix m = hc.induced(hx, f.at(n).at(s, f.source.level(n), x.level(n)));
                        EXPECT_TRUE(hom_is_iso(hc.group(), hx.group(), m)) << seed << " " << s << "," << t;
                    }
                }
        }
    }
}

TEST(Fcc, CoverOfConnectiveTowerIsLevelwiseEquivalent) {
    // Z[0] at levels <= 0 is connective for every line.
    FilteredComplex x = FilteredComplex::yoneda(0);
    FilteredMap f = linear_cover_map(x, Line(Rational(1, 2)));
    for (i64 n = -5; n <= 1; ++n) EXPECT_TRUE(is_quasi_iso(f.source.level(n), x.level(n), f.at(n))) << n;
}

TEST(Fcc, SlopeZeroCoverIsLevelwiseConnectiveCover) {
    ChainComplex c = direct_sum(direct_sum(point(-1), disk(0, 2)), point(2));
    FilteredComplex x = FilteredComplex::constant(c, 2);
    FilteredComplex cov = linear_cover_fcc(x, Line(Rational(0, 1)));
    for (i64 n = -3; n <= 2; ++n)
        for (i64 k = -2; k <= 3; ++k) {
            GroupType expect = k >= n ? homology(c, k).group().type() : GroupType{};
            EXPECT_EQ(homology(cov.level(n), k).group().type(), expect) << n << " " << k;
        }
}

TEST(Fcc, CoverOfTwoLevelTowerByHand) {
    // X^1 = Z[0] -2-> X^0 = Z[0]; at slope 0 level 1 keeps degrees >= 1, so it vanishes.
    FilteredComplex x = two_level(point(0), point(0), scalar(0, 2));
    FilteredComplex cov = linear_cover_fcc(x, Line(Rational(0, 1)));
    TauChart t = homotopy_chart(cov, default_window(x));
    EXPECT_TRUE(t.group({0, 1})->is_zero());
    EXPECT_EQ(t.group({0, 0})->type().to_string(), "Z");
    BssPages b = bss_pages(cov, 4, default_window(x));
    EXPECT_EQ(b.e2_at({0, 0})->type().to_string(), "Z");
    EXPECT_TRUE(b.e2_at({0, 1})->is_zero());
    EXPECT_TRUE(b.e2_at({1, 0})->is_zero());
}

TEST(Fcc, Dilation) {
    FilteredComplex x = random_tower(31);
    EXPECT_EQ(dilate_fcc(x, 1).canonical(), x.canonical());
    for (i64 k = -4; k <= 4; ++k) EXPECT_EQ(dilate_fcc(FilteredComplex::yoneda(k), 2).canonical(),
                                            FilteredComplex::yoneda(2 * k));
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
        FilteredComplex y = random_tower(seed);
        FilteredComplex a = dilate_fcc(dilate_fcc(y, 3), 2);
        a.validate();
        EXPECT_EQ(a.canonical(), dilate_fcc(y, 6).canonical());
        for (i64 m = y.N0 * 6 - 8; m <= y.N1 * 6 + 2; ++m) EXPECT_EQ(a.level(m), y.level(ceil_div(m, 6)));
    }
}

TEST(Fcc, Shift) {
    FilteredComplex x = random_tower(77);
    EXPECT_EQ(shift_fcc(x, 0, 0), x);
    for (i64 s = -3; s <= 3; ++s) EXPECT_EQ(shift_fcc(FilteredComplex::yoneda(0), 0, s), FilteredComplex::yoneda(s));
    FilteredComplex sh = shift_fcc(x, 2, -1);
    sh.validate();
    TauChart a = homotopy_chart(x), b = homotopy_chart(sh);
    for (const auto& [d, g] : a.cells) EXPECT_EQ(b.group({d.x + 2, d.y - 1})->type(), g.type());
    for (const auto& [d, g] : b.cells) EXPECT_EQ(a.group({d.x - 2, d.y + 1})->type(), g.type());
}

TEST(Fcc, EventuallyConstantBound) {
    FilteredComplex c = FilteredComplex::constant(point(0), 3);
    EXPECT_EQ(eventually_constant_bound(c), -3);
    EXPECT_EQ(eventually_constant_bound(FilteredComplex::yoneda(-2)), 2);
    ChainComplex conn = direct_sum(disk(0, 2), point(1));
    EXPECT_EQ(eventually_constant_bound(whitehead_tower(conn)), 0);
    FilteredComplex wh = whitehead_tower(conn);
    for (i64 n = -2; n <= 3; ++n)
        for (i64 k = -1; k <= 3; ++k)
            EXPECT_EQ(homology(wh.level(n), k).group().type(),
                      k >= n ? homology(conn, k).group().type() : GroupType{});
}

TEST(Fcc, RandomTowersAreReproducibleAndBounded) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        FilteredComplex a = random_tower(seed), b = random_tower(seed);
        EXPECT_EQ(a, b);
        EXPECT_LE(a.N1 - a.N0 + 1, 8);
        for (const auto& c : a.levels)
            for (const auto& [k, r] : c.ranks) {
                EXPECT_LE(r, 4u);
                EXPECT_GE(k, -1);
                EXPECT_LE(k, 9);
            }
    }
}
