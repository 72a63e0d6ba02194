#include "tauchart/grading/line.hpp"

#include <numeric>
#include <stdexcept>

#include "tauchart/linalg/integer.hpp"

namespace tauchart {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

std::string Bidegree::to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

Rational::Rational(i64 p, i64 q) {
    if (q == 0) throw MathError("rational with zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    i64 g = std::gcd(p < 0 ? -p : p, q);
    if (g == 0) g = 1;
    num = p / g;
    den = q / g;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            i64 p = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(p, 1);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        i64 p = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        i64 q = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return Rational(p, q);
    } catch (const std::logic_error&) {
        throw MathError("cannot parse rational '" + text + "'");
    }
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Line::Line(Rational slope) : alpha_(slope) {
    if (alpha_.num <= -alpha_.den) throw MathError("line slope must exceed -1, got " + alpha_.to_string());
}

i64 Line::floor_at(i64 x) const { return floor_div(alpha_.num * x, alpha_.den); }

i64 Line::cover_threshold(i64 n) const { return ceil_div(n * alpha_.den, alpha_.num + alpha_.den); }

bool Line::above(Bidegree d) const { return d.y * alpha_.den > alpha_.num * d.x; }

bool Line::below_iso_range(Bidegree d, i64 r) const { return (d.y + r) * alpha_.den <= alpha_.num * (d.x - 1); }

bool Line::crosses(Bidegree d, i64 r) const { return !above(d) && !below_iso_range(d, r); }

}  // namespace tauchart
