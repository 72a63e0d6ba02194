#pragma once

// Character-theory oracle for real representations of cyclic 2-groups,
// independent of the restriction tables used by the library.

#include <cmath>
#include <vector>

namespace tauchart::oracle {

// Real irreducibles of C_n in the order 1, sigma (n >= 2), then the rotations
// by 2 pi a / n for 1 <= a < n/2.
inline int irrep_count(int n) { return n == 1 ? 1 : 2 + (n / 2 - 1); }

// Character of irreducible j of C_n at g^e.
inline double character(int n, int j, long e) {
    if (j == 0) return 1.0;
    if (j == 1) return (e % 2 == 0) ? 1.0 : -1.0;
    const int a = j - 1;
    return 2.0 * std::cos(2.0 * M_PI * a * static_cast<double>(e) / n);
}

inline double self_product(int n, int j) {
    double s = 0;
    for (long e = 0; e < n; ++e) s += character(n, j, e) * character(n, j, e);
    return s / n;
}

// Multiplicity of irreducible i of C_m in the restriction of irreducible j of
// C_n, where C_m is generated by g^{n/m}.
inline int restriction_multiplicity(int n, int m, int i, int j) {
    double s = 0;
    for (long e = 0; e < m; ++e) s += character(n, j, e * (n / m)) * character(m, i, e);
    return static_cast<int>(std::lround(s / m / self_product(m, i)));
}

// Multiplicity of irreducible i of C_n in the induction of irreducible j of C_m.
inline int induction_multiplicity(int m, int n, int i, int j) {
    // The induced character is (n/m) chi_j on C_m and zero elsewhere.
    double s = 0;
    for (long e = 0; e < n; ++e) {
        if (e % (n / m) != 0) continue;
        s += static_cast<double>(n / m) * character(m, j, e / (n / m)) * character(n, i, e);
    }
    return static_cast<int>(std::lround(s / n / self_product(n, i)));
}

// dim of the C_m-fixed points of sum_j mult[j] * irreducible j of C_n.
inline long fixed_dimension(int n, int m, const std::vector<long long>& mult) {
    double s = 0;
    for (std::size_t j = 0; j < mult.size(); ++j)
        for (long e = 0; e < m; ++e) s += static_cast<double>(mult[j]) * character(n, static_cast<int>(j), e * (n / m));
    return std::lround(s / m);
}

}  // namespace tauchart::oracle
