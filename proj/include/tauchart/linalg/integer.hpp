#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tauchart {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Errors raised on malformed or inconsistent mathematical input.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& a) { return a.get_str(); }

// Floor division and nonnegative remainder for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// g = gcd(a, b) = s*a + t*b with g >= 0.
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline bool is_zero(const Vec& v) {
    for (const auto& a : v)
        if (a != 0) return false;
    return true;
}

}  // namespace tauchart
