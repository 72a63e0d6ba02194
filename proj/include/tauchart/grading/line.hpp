#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tauchart {

using i64 = std::int64_t;

// Mathematical floor/ceiling of a/b for b > 0.
i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

// Chart coordinates: x is the stem, y the filtration.
struct Bidegree {
    i64 x = 0;
    i64 y = 0;
    auto operator<=>(const Bidegree&) const = default;
    std::string to_string() const;
};

// Exact rational p/q, q > 0, lowest terms.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 p, i64 q);
    static Rational parse(const std::string& text);

    bool operator==(const Rational&) const = default;
    std::string to_string() const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// The line y = alpha * x of a linear t-structure, alpha > -1.
class Line {
public:
    Line() = default;
    explicit Line(Rational slope);
    static Line parse(const std::string& text) { return Line(Rational::parse(text)); }

    const Rational& slope() const { return alpha_; }

    // floor(alpha * x): the on-line filtration in stem x.
    i64 floor_at(i64 x) const;
    // ceil(n / (alpha + 1)): least homological degree kept at level n.
    i64 cover_threshold(i64 n) const;

    bool above(Bidegree d) const;          // y > alpha x
    bool on_or_below(Bidegree d) const { return !above(d); }
    bool on_line(Bidegree d) const { return d.y == floor_at(d.x); }
    // d_r from d stays in the isomorphism range: y + r <= alpha (x - 1).
    bool below_iso_range(Bidegree d, i64 r) const;
    // d_r from a class on or below the line lands above it.
    bool crosses(Bidegree d, i64 r) const;

    std::string to_string() const { return alpha_.to_string(); }
    bool operator==(const Line&) const = default;

private:
    Rational alpha_{0, 1};
};

}  // namespace tauchart
