#include <gtest/gtest.h>

#include <random>

#include "support/characters.hpp"
#include "tauchart/grading/line.hpp"
#include "tauchart/grading/representation.hpp"
#include "tauchart/linalg/integer.hpp"

using namespace tauchart;

TEST(Line, RegionsAndThresholds) {
    const Line half(Rational(1, 2)), zero(Rational(0, 1)), one(Rational(1, 1));
    EXPECT_TRUE(half.on_or_below({4, 0}));
    EXPECT_FALSE(half.on_or_below({3, 2}));
    EXPECT_TRUE(one.on_or_below({5, 5}));
    EXPECT_EQ(half.cover_threshold(4), 3);
    EXPECT_EQ(zero.cover_threshold(7), 7);
    EXPECT_EQ(one.cover_threshold(5), 3);
    EXPECT_TRUE(half.crosses({4, 0}, 3));
    EXPECT_FALSE(half.crosses({10, 1}, 2));
    for (i64 x = -5; x <= 5; ++x) EXPECT_TRUE(zero.crosses({x, 0}, 2));
    EXPECT_EQ(half.floor_at(-3), -2);
    EXPECT_THROW(Line(Rational(-1, 1)), MathError);
    EXPECT_THROW(Line(Rational(-3, 2)), MathError);
}

TEST(Line, ExactArithmeticProperties) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const i64 q = 1 + static_cast<i64>(rng() % 7);
        const i64 p = static_cast<i64>(rng() % 20) - q + 1;  // p/q > -1
        const Line l(Rational(p, q));
        for (i64 n = -30; n < 30; ++n) EXPECT_LE(l.cover_threshold(n), l.cover_threshold(n + 1));
        for (i64 x = -8; x <= 8; ++x)
            for (i64 y = -8; y <= 8; ++y) {
                const Bidegree d{x, y};
                const bool above = y * l.slope().den > l.slope().num * x;
                EXPECT_NE(l.on_or_below(d), above);
                EXPECT_EQ(l.above(d), above);
                // floor(alpha x) is the largest y on or below the line.
                EXPECT_TRUE(l.on_or_below({x, l.floor_at(x)}));
                EXPECT_FALSE(l.on_or_below({x, l.floor_at(x) + 1}));
            }
    }
}

namespace {

std::shared_ptr<const GroupData> cyclic(int n) {
    return std::make_shared<const GroupData>(GroupData::cyclic_two_power(n));
}

}  // namespace

TEST(Representation, CompareExamples) {
    auto c2 = cyclic(1);
    auto rep = [&](const std::string& s) { return VirtualRep::parse(c2, 1, s); };
    EXPECT_EQ(ro_compare(rep("1+sigma"), rep("2")), RoOrder::incomparable);
    EXPECT_EQ(ro_compare(rep("1+sigma"), rep("1+sigma")), RoOrder::equal);
    EXPECT_EQ(ro_compare(rep("sigma"), rep("1+sigma")), RoOrder::less);
    EXPECT_EQ(ro_compare(rep("1+sigma"), rep("sigma")), RoOrder::greater);
    EXPECT_THROW(ro_compare(rep("1"), VirtualRep::trivial(c2, 0, 1)), MathError);
}

TEST(Representation, CompareIsPartialOrder) {
    auto c4 = cyclic(2);
    std::mt19937_64 rng(5);
    auto random_rep = [&] {
        std::vector<long long> m(3);
        for (auto& a : m) a = static_cast<long long>(rng() % 5) - 2;
        return VirtualRep(c4, 2, m);
    };
    for (int t = 0; t < 300; ++t) {
        VirtualRep a = random_rep(), b = random_rep(), c = random_rep();
        EXPECT_EQ(ro_compare(a, a), RoOrder::equal);
        RoOrder ab = ro_compare(a, b), ba = ro_compare(b, a);
        if (ab == RoOrder::equal) EXPECT_TRUE(a == b);
        if (ab == RoOrder::less) EXPECT_EQ(ba, RoOrder::greater);
        if (ab == RoOrder::incomparable) EXPECT_EQ(ba, RoOrder::incomparable);
        if (a.leq(b) && b.leq(c)) EXPECT_TRUE(a.leq(c));
    }
}

TEST(Representation, ArithmeticExamples) {
    auto c2 = cyclic(1);
    auto c4 = cyclic(2);
    EXPECT_EQ(VirtualRep::parse(c2, 1, "3+4sigma").dim(), 7);
    EXPECT_EQ(VirtualRep::trivial(c2, 0, 1).induce_to(1), VirtualRep::parse(c2, 1, "1+sigma"));
    EXPECT_EQ(VirtualRep::parse(c4, 2, "lambda").fixed_dim(2), 0);
    EXPECT_EQ(VirtualRep::parse(c4, 2, "lambda").dim(), 2);
    EXPECT_EQ(VirtualRep::parse(c4, 2, "lambda").restrict_to(1), VirtualRep::parse(c4, 1, "2sigma"));
    EXPECT_EQ(VirtualRep::regular(c4, 2).dim(), 4);
    EXPECT_THROW(VirtualRep::parse(c2, 1, "tau"), MathError);
}

TEST(Representation, TablesMatchCharacterTheory) {
    for (int k = 0; k <= 3; ++k) {
        auto g = cyclic(k);
        for (std::size_t h = 0; h < g->chain_length(); ++h)
            for (std::size_t s = 0; s <= h; ++s) {
                const int n = g->order(h), m = g->order(s);
                const auto& res = g->restriction(h, s);
                const auto& ind = g->induction(s, h);
                ASSERT_EQ(static_cast<int>(res.size()), oracle::irrep_count(m));
                for (int i = 0; i < oracle::irrep_count(m); ++i)
                    for (int j = 0; j < oracle::irrep_count(n); ++j) {
                        EXPECT_EQ(res[i][j], oracle::restriction_multiplicity(n, m, i, j));
                        EXPECT_EQ(ind[j][i], oracle::induction_multiplicity(m, n, j, i));
                    }
                for (int j = 0; j < oracle::irrep_count(n); ++j) {
                    std::vector<long long> mult(oracle::irrep_count(n), 0);
                    mult[j] = 1;
                    EXPECT_EQ(g->fixed_dim(h, s, j), oracle::fixed_dimension(n, m, mult));
                }
            }
    }
}

TEST(Representation, FrobeniusAndDimension) {
    for (int k = 0; k <= 3; ++k) {
        auto g = cyclic(k);
        for (std::size_t h = 0; h < g->chain_length(); ++h)
            for (std::size_t s = 0; s <= h; ++s)
                for (std::size_t j = 0; j < g->subgroup(s).irreps.size(); ++j) {
                    VirtualRep v = VirtualRep::zero(g, s);
                    std::vector<long long> m(g->subgroup(s).irreps.size(), 0);
                    m[j] = 1;
                    v = VirtualRep(g, s, m);
                    VirtualRep up = v.induce_to(h);
                    EXPECT_EQ(up.dim(), v.dim() * (g->order(h) / g->order(s)));
                    EXPECT_EQ(up.fixed_dim(h), v.fixed_dim(s));
                    EXPECT_EQ(up.restrict_to(s).dim(), up.dim());
                }
    }
}
