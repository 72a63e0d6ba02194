#include <gtest/gtest.h>

#include "support/cover_support.hpp"
#include "tauchart/cover/cover.hpp"

using namespace tauchart;

namespace {

ChainComplex point(i64 k) {
    ChainComplex c;
    c.ranks[k] = 1;
    return c;
}

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

const Line kSlopes[] = {Line(Rational(0, 1)), Line(Rational(1, 2)), Line(Rational(1, 1)),
                        Line(Rational(2, 1)), Line(Rational(1, 3)), Line(Rational(-1, 2))};

// Predicted cover against the chart of the explicit cover.
std::vector<ChartDifference> oracle_gap(const FilteredComplex& x, const Line& line, int R) {
    SpectralChart y = spectral_chart(x, R);
    CoverPrediction p = predict_cover(y, line);
    SpectralChart direct = spectral_chart(linear_cover_fcc(x, line), R, p.map.source.pi.window);
    DiffOptions o;
    o.decorations = false;
    o.through = R;
    return compare_charts(p.map.source, direct, o);
}

std::string describe(const std::vector<ChartDifference>& diffs) {
    std::string s;
    for (const auto& d : diffs)
        s += d.kind + " E" + std::to_string(d.page) + " " + d.at.to_string() + ": " + d.left + " vs " + d.right + "\n";
    return s;
}

}  // namespace

TEST(Cover, PredictionMatchesExplicitCover) {
    int drops = 0, drop_differentials = 0;
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
        FilteredComplex x = random_tower(seed);
        for (const Line& line : kSlopes) {
            auto gap = oracle_gap(x, line, 6);
            EXPECT_TRUE(gap.empty()) << "seed " << seed << " slope " << line.to_string() << "\n" << describe(gap);
            CoverPrediction p = predict_cover(spectral_chart(x, 6), line);
            drops += static_cast<int>(p.drops.size());
            for (const auto& t : p.differentials) drop_differentials += t.tag == "drop";
        }
    }
    // The sample has to exercise the interesting conditions.
    EXPECT_GT(drops, 20);
    EXPECT_GT(drop_differentials, 5);
}

TEST(Cover, PredictedMapPassesVerification) {
    for (std::uint64_t seed = 400; seed < 420; ++seed) {
        CoverPrediction p = predict_cover(spectral_chart(random_tower(seed), 6), Line(Rational(1, 2)));
        EXPECT_EQ(p.report.certified(), Verdict::yes) << p.report.summary();
        for (const auto& [c, v] : p.report.verdicts) EXPECT_EQ(v, Verdict::yes) << to_string(c);
        for (const auto& t : p.differentials) EXPECT_TRUE(t.tag == "lifted" || t.tag == "drop");
    }
}

TEST(Cover, TwoLevelTowerByHand) {
    // Z[0] at level 1 mapping by 2 into Z[0] at level 0: pi_{0,1} = Z sits above
    // the line y = 0, tau is multiplication by 2 into pi_{0,0}.
    FilteredComplex x;
    x.N0 = 0;
    x.N1 = 1;
    x.levels = {point(0), point(0)};
    x.maps = {scalar(0, 2)};
    x.validate();
    const Line line(Rational(0, 1));
    SpectralChart y = spectral_chart(x, 4);
    auto drops = find_drops(y.pi, line);
    ASSERT_EQ(drops.size(), 1u);
    EXPECT_EQ(drops[0].at, (Bidegree{0, 1}));
    EXPECT_EQ(drops[0].l, 1);
    EXPECT_FALSE(drops[0].height.has_value());

    CoverPrediction p = predict_cover(y, line);
    const SpectralChart& c = p.map.source;
    // The cover is the constant tower on Z[0] below level 0: E2 = Z at (0,0) only.
    EXPECT_EQ(c.bss.e2_at({0, 0})->type().to_string(), "Z");
    EXPECT_TRUE(c.bss.e2_at({0, 1})->is_zero());
    // tau b = 2g is not a generator, so nothing is renamed; g maps onto E2 = Z/2.
    EXPECT_EQ(drops[0].image, Vec{Int(2)});
    EXPECT_EQ(c.bss.e2_at({0, 0})->name(0), y.pi.group({0, 0})->name(0));
    EXPECT_EQ(p.map.target.bss.e2_at({0, 0})->type().to_string(), "Z/2");
    EXPECT_EQ(c.deco.colors.at({0, 0}), std::vector<std::string>{"black"});
    EXPECT_TRUE(oracle_gap(x, line, 4).empty());
}

TEST(Cover, DropDifferentialByHand) {
    // Levels 1 and 0 are Z[0] joined by the identity, level -1 is zero: b in
    // pi_{0,1} has tau b != 0 and tau^2 b = 0.
    FilteredComplex x;
    x.N0 = -1;
    x.N1 = 1;
    x.levels = {ChainComplex{}, point(0), point(0)};
    x.maps = {ChainMap{}, scalar(0, 1)};
    x.validate();
    const Line line(Rational(0, 1));
    SpectralChart y = spectral_chart(x, 5);
    auto drops = find_drops(y.pi, line);
    ASSERT_EQ(drops.size(), 1u);
    EXPECT_EQ(drops[0].at, (Bidegree{0, 1}));
    EXPECT_EQ(drops[0].l, 1);
    EXPECT_EQ(drops[0].height, std::optional<i64>(2));

    CoverPrediction p = predict_cover(y, line);
    // d_3 in the input crosses the line; the cover has d_2 onto the dropped lift.
    EXPECT_EQ(p.line_crossing, (std::vector<TaggedDifferential>{{3, {1, -2}, "line-crossing"}}));
    EXPECT_EQ(p.differentials, (std::vector<TaggedDifferential>{{2, {1, -2}, "drop"}}));
    EXPECT_EQ(p.map.source.bss.e2_at({0, 0})->name(0), drops[0].lift_name());
    EXPECT_EQ(p.map.source.deco.colors.at({0, 0}), std::vector<std::string>{"orange"});
    EXPECT_TRUE(oracle_gap(x, line, 5).empty());
}

TEST(Cover, LineCrossingClassification) {
    // d_2 from (1,-1) to (0,1) in the two-level Bockstein example crosses y = 0.
    FilteredComplex x;
    x.N0 = 0;
    x.N1 = 1;
    x.levels = {disk(0, 2), point(0)};
    ChainMap f;
    f.set(0, Matrix::from_rows({{Int(1)}}, 1));
    x.maps = {f};
    x.validate();
    SpectralChart y = spectral_chart(x, 4);
    auto lc = line_crossing_differentials(y.pages(4), Line(Rational(0, 1)));
    ASSERT_EQ(lc.size(), 1u);
    EXPECT_EQ(lc[0].r, 2);
    EXPECT_EQ(lc[0].source, (Bidegree{1, -1}));
    EXPECT_TRUE(lc.size() == 1 && Line(Rational(0, 1)).crosses({1, -1}, 2));
    EXPECT_TRUE(oracle_gap(x, Line(Rational(0, 1)), 4).empty());
}

namespace {

// First predicted cover among random towers with a dropped lift and a drop differential.
CoverPrediction interesting_cover(std::uint64_t& seed, const Line& line) {
    for (;; ++seed) {
        CoverPrediction p = predict_cover(spectral_chart(random_tower(seed), 6), line);
        bool has7 = false;
        for (const auto& t : p.differentials) has7 |= t.tag == "drop";
        if (has7) return p;
    }
}

bool has_witness(const CoverReport& r, Condition c, std::optional<Bidegree> at = std::nullopt) {
    auto it = r.witnesses.find(c);
    if (it == r.witnesses.end()) return false;
    if (!at) return true;
    for (const auto& w : it->second)
        if (w.at == *at) return true;
    return false;
}

}  // namespace

TEST(Cover, MutationsAreCaught) {
    const Line line(Rational(1, 2));
    std::uint64_t seed = 500;
    CoverPrediction p = interesting_cover(seed, line);
    ASSERT_FALSE(p.drops.empty());

    {  // A class above the line.
        ChartMap m = p.map;
        Bidegree d{m.source.bss.window.x0, m.source.bss.window.y1};
        ASSERT_TRUE(line.above(d));
        support::add_spurious_class(m, d);
        CoverReport r = verify_cover_map(m, line);
        EXPECT_EQ(r.verdicts[Condition::connective_mod_tau], Verdict::no);
        EXPECT_TRUE(has_witness(r, Condition::connective_mod_tau, d));
    }
    {  // Remove the differential that hits a dropped lift.
        ChartMap m = p.map;
        TaggedDifferential t;
        for (const auto& x : p.differentials)
            if (x.tag == "drop") t = x;
        support::remove_source_differential(m, t.r, t.source);
        CoverReport r = verify_cover_map(m, line);
        EXPECT_FALSE(r.consistent());
        EXPECT_TRUE(has_witness(r, Condition::drop_differentials, d_target(t.source, t.r))) << r.summary();
    }
}

TEST(Cover, DeletedDroppedLiftIsCaught) {
    const Line line(Rational(1, 2));
    int checked = 0;
    for (std::uint64_t seed = 600; seed < 640 && checked < 5; ++seed) {
        CoverPrediction p = predict_cover(spectral_chart(random_tower(seed), 6), line);
        for (const auto& [d, colors] : p.map.source.deco.colors) {
            auto it = std::find(colors.begin(), colors.end(), "orange");
            if (it == colors.end()) continue;
            ChartMap m = p.map;
            support::delete_source_generator(m, d, static_cast<std::size_t>(it - colors.begin()));
            CoverReport r = verify_cover_map(m, line);
            EXPECT_TRUE(has_witness(r, Condition::kernel_on_line, d)) << r.summary();
            ++checked;
            break;
        }
    }
    EXPECT_GE(checked, 3);
}

TEST(Cover, CriterionIsSufficientButNotNecessary) {
    // Zero against Z[0] at level 1 alone: both covers vanish for slope 0, yet the
    // graded pieces differ above the threshold at level 0.
    FilteredComplex y;
    y.N0 = 0;
    y.N1 = 1;
    y.levels = {ChainComplex{}, support::point_complex(0)};
    y.maps = {ChainMap{}};
    y.validate();
    FilteredMap f;
    f.target = y;
    f.N0 = 0;
    f.N1 = 1;
    f.components = {ChainMap{}, ChainMap{}};
    CoverCriterion c = cover_criterion(f, Line(Rational(0, 1)));
    EXPECT_TRUE(c.condition1);
    EXPECT_FALSE(c.condition2);
    EXPECT_FALSE(c.holds());
    EXPECT_TRUE(c.covers_equivalent);
}

TEST(Cover, CriterionPairsHaveEquivalentCovers) {
    for (const Line& line : kSlopes)
        for (std::uint64_t seed = 700; seed < 710; ++seed) {
            FilteredMap f = support::criterion_pair(seed, line);
            CoverCriterion c = cover_criterion(f, line);
            EXPECT_TRUE(c.holds()) << seed;
            EXPECT_TRUE(c.covers_equivalent) << seed;
        }
}

TEST(Cover, IdentitySatisfiesCriterionAndNonEquivalenceFailsIt) {
    FilteredComplex x = random_tower(17);
    EXPECT_TRUE(cover_criterion(FilteredMap::identity(x), Line(Rational(1, 2))).holds());
    FilteredComplex junk = support::below_threshold_tower(Line(Rational(1, 2)), 2, 0);
    // Shifting the junk up by a lot puts it above every threshold.
    FilteredMap f = support::summand_inclusion(x, shift_fcc(junk, 6, -6));
    CoverCriterion c = cover_criterion(f, Line(Rational(1, 2)));
    EXPECT_FALSE(c.covers_equivalent);
    EXPECT_FALSE(c.holds());
}

TEST(Cover, ConnectivityFromAssociatedGraded) {
    for (std::uint64_t seed = 800; seed < 820; ++seed) {
        FilteredComplex x = random_tower(seed);
        for (const Line& line : kSlopes) {
            SpectralChart cov = spectral_chart(linear_cover_fcc(x, line), 4);
            EXPECT_EQ(connectivity_via_gr(cov, line).via_gr, Verdict::yes);
            SpectralChart y = spectral_chart(x, 4);
            ConnectivityResult r = connectivity_via_gr(y, line);
            EXPECT_EQ(r.via_gr, *r.via_pi);
        }
    }
}

TEST(Cover, CobarSupport) {
    EXPECT_EQ(cobar_support_bound({3, 2, 5}, 4), 8);
    EXPECT_EQ(cobar_support_bound({2}, 0), 0);
    EXPECT_THROW(cobar_support_bound({}, 2), MathError);
    EXPECT_EQ(cobar_line(2).slope(), Rational(1, 1));
    EXPECT_EQ(cobar_line(4).slope(), Rational(1, 3));
    EXPECT_THROW(cobar_line(1), MathError);
    // Classes with t >= m s lie on or below y = x / (m - 1).
    const Line l = cobar_line(3);
    for (i64 s = 0; s < 6; ++s)
        for (i64 t = 3 * s; t < 3 * s + 5; ++t) EXPECT_TRUE(l.on_or_below({t - s, s}));
}

TEST(Cover, DroppedClassAlreadyDeadOnItsPage) {
    // pi_{3,*} of this tower has b at (3,3) with tau^3 b = 0, while b is congruent
    // mod tau to a class of height 1: [b] dies to a d_2 before d_4 could hit it.
    const Line line(Rational(1, 2));
    FilteredComplex x = random_tower(1037);
    SpectralChart y = spectral_chart(x, 6);
    auto drops = find_drops(y.pi, line);
    ASSERT_FALSE(drops.empty());
    EXPECT_EQ(drops[0].at, (Bidegree{3, 3}));
    EXPECT_EQ(drops[0].height, std::optional<i64>(3));
    EXPECT_TRUE(y.pages(6).cell(3, {3, 3})->group().is_zero());
    CoverPrediction p = predict_cover(y, line);
    EXPECT_EQ(p.report.certified(), Verdict::yes) << p.report.summary();
    EXPECT_TRUE(oracle_gap(x, line, 6).empty());
}
