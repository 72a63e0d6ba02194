#include <gtest/gtest.h>

#include "tauchart/chart/ops.hpp"

using namespace tauchart;

namespace {

AbGroup Z(const std::string& name) { return AbGroup({name}, {0}); }
Matrix one(Int v) { return Matrix::from_rows({{v}}, 1); }

// A single tau-free class at (0,0): pi_{0,y} = Z for y <= 0, E2 = Z at (0,0).
SpectralChart tau_free() {
    SpectralChart c;
    c.has_pi = true;
    Window w{0, 0, -2, 2, Edge::zero, Edge::zero, Edge::zero, Edge::stable};
    c.pi.window = w;
    for (i64 y = -2; y <= 0; ++y) c.pi.cells[{0, y}] = Z("t^" + std::to_string(-y));
    for (i64 y = -1; y <= 0; ++y) c.pi.tau[{0, y}] = one(1);
    c.bss.window = w;
    c.bss.e2[{0, 0}] = Z("a");
    c.bss.les = LesMaps{};
    c.bss.les->proj[{0, 0}] = one(1);
    return c;
}

// A class at (1,0) killing a class at (0,2) by d_2; homotopy is Z at (0,2).
SpectralChart d2_pair() {
    SpectralChart c;
    c.has_pi = true;
    Window w{0, 1, -1, 3, Edge::zero, Edge::zero, Edge::zero, Edge::zero};
    c.pi.window = w;
    c.pi.cells[{0, 2}] = Z("g");
    c.bss.window = w;
    c.bss.e2[{0, 2}] = Z("b");
    c.bss.e2[{1, 0}] = Z("c");
    c.bss.les = LesMaps{};
    c.bss.les->proj[{0, 2}] = one(1);
    c.bss.les->delta[{1, 0}] = one(1);
    c.bss.max_page = 2;
    c.bss.differentials[2][{1, 0}] = one(1);
    return c;
}

}  // namespace

TEST(Chart, TauFreeGeneratorIsConsistentAndPermanent) {
    SpectralChart c = tau_free();
    c.validate();
    LesReport r = check_les_consistency(c);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures[0].what);
    EXPECT_TRUE(r.unchecked.empty());
    PageStack p = c.pages(4);
    auto inf = p.e_infinity({0, 0});
    ASSERT_TRUE(inf);
    EXPECT_EQ(inf->group().type().to_string(), "Z");
    EXPECT_EQ(is_strongly_complete(c.pi), Verdict::yes);
    auto inv = tau_invert(c.pi);
    ASSERT_TRUE(inv.at(0));
    EXPECT_EQ(inv.at(0)->type().to_string(), "Z");
}

TEST(Chart, StableBottomNeedsInjectiveTau) {
    SpectralChart c = tau_free();
    c.pi.tau[{0, -1}] = one(2);  // tau into the bottom row is no longer an isomorphism
    LesReport r = check_les_consistency(c);
    EXPECT_FALSE(r.ok());
}

TEST(Chart, DerivedDifferentialMatchesDeclared) {
    SpectralChart c = d2_pair();
    c.validate();
    LesReport r = check_les_consistency(c);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures[0].what);
    PageStack les = c.pages(2);
    auto s = differential_summary(les, 2, {1, 0});
    ASSERT_TRUE(s);
    EXPECT_EQ(s->image.to_string(), "Z");
    EXPECT_EQ(s->kernel.to_string(), "0");
    EXPECT_TRUE(les.cell(3, {0, 2})->group().is_zero());
    EXPECT_TRUE(les.cell(3, {1, 0})->group().is_zero());
    PageStack declared = PageStack::from_differentials(c.bss);
    EXPECT_TRUE(declared.cell(3, {0, 2})->group().is_zero());
}

TEST(Chart, WrongDeclaredDifferentialIsReported) {
    SpectralChart c = d2_pair();
    c.bss.differentials[2][{1, 0}] = one(2);
    EXPECT_FALSE(check_les_consistency(c).ok());
}

TEST(Chart, BrokenExactnessIsReported) {
    SpectralChart c = d2_pair();
    c.bss.les->delta[{1, 0}] = one(3);
    EXPECT_FALSE(check_les_consistency(c).ok());
}

TEST(Chart, SmithLevelRouteWithoutMaps) {
    SpectralChart c = d2_pair();
    c.bss.les.reset();
    EXPECT_TRUE(check_les_consistency(c).ok());
    c.bss.e2[{0, 2}] = AbGroup({"b"}, {2});
    EXPECT_FALSE(check_les_consistency(c).ok());
}

TEST(Chart, ExtensionCompatibility) {
    auto t = [](Vec tors, std::size_t rank) { return GroupType{std::move(tors), rank}; };
    EXPECT_TRUE(extension_compatible(t({2}, 0), t({2}, 0), t({4}, 0)));
    EXPECT_TRUE(extension_compatible(t({2}, 0), t({2}, 0), t({2, 2}, 0)));
    EXPECT_FALSE(extension_compatible(t({2}, 0), t({2}, 0), t({2}, 0)));
    EXPECT_TRUE(extension_compatible(t({}, 1), t({2}, 0), t({}, 1)));
    EXPECT_FALSE(extension_compatible(t({}, 1), t({}, 0), t({}, 2)));
}

TEST(Chart, StrongCompletenessHeuristic) {
    SpectralChart c = tau_free();
    c.pi.window.top = Edge::stable;
    c.pi.window.y1 = 0;
    EXPECT_EQ(is_strongly_complete(c.pi), Verdict::no);
    c.pi.window.top = Edge::unknown;
    EXPECT_EQ(is_strongly_complete(c.pi), Verdict::indeterminate);
    c.pi.window.y1 = 2;
    EXPECT_EQ(is_strongly_complete(c.pi), Verdict::yes);
}

TEST(Chart, SpuriousClassIsLocated) {
    SpectralChart c = tau_free();
    c.bss.e2[{0, 1}] = Z("z");
    c.bss.les->proj[{0, 1}] = Matrix(1, 0);
    LesReport r = check_les_consistency(c);
    ASSERT_FALSE(r.ok());
    std::set<Bidegree> at;
    for (const auto& f : r.failures) at.insert(f.at);
    EXPECT_TRUE(at.count({0, 1})) << r.failures[0].at.to_string() << ": " << r.failures[0].what;
    // The Smith-level route finds it too.
    c.bss.les.reset();
    r = check_les_consistency(c);
    at.clear();
    for (const auto& f : r.failures) at.insert(f.at);
    EXPECT_TRUE(at.count({0, 1}));
}
