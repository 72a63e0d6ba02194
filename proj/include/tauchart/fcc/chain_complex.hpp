#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tauchart/grading/line.hpp"
#include "tauchart/linalg/abgroup.hpp"

namespace tauchart {

// Bounded complex of free abelian groups. Only nonzero ranks and nonzero
// differentials are stored, so structural equality is meaningful.
class ChainComplex {
public:
    std::map<i64, std::size_t> ranks;
    std::map<i64, Matrix> d;  // d.at(k) : C_k -> C_{k-1}

    std::size_t rank(i64 k) const;
    Matrix diff(i64 k) const;
    void set_diff(i64 k, Matrix m);
    bool is_zero() const { return ranks.empty(); }
    std::optional<std::pair<i64, i64>> degree_range() const;
    void validate() const;
    ChainComplex shifted(i64 a) const;
    std::string basis_name(i64 k, std::size_t i) const;

    bool operator==(const ChainComplex&) const = default;
};

// Components f_k : A_k -> B_k; absent components are zero.
struct ChainMap {
    std::map<i64, Matrix> f;

    Matrix at(i64 k, const ChainComplex& a, const ChainComplex& b) const;
    void set(i64 k, Matrix m);
    static ChainMap identity(const ChainComplex& c);
    static ChainMap compose(const ChainMap& g, const ChainMap& f, const ChainComplex& a, const ChainComplex& b,
                            const ChainComplex& c);
    bool operator==(const ChainMap&) const = default;
};

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const ChainMap& f);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// H_k as a subquotient of the free module C_k.
Subquotient homology(const ChainComplex& c, i64 k);
AbGroup chain_ambient(const ChainComplex& c, i64 k);

// cone(f)_k = B_k + A_{k-1} with d(b, a) = (d b + f a, -d a).
ChainComplex cone(const ChainComplex& a, const ChainComplex& b, const ChainMap& f);

// Smart truncation: C_j for j > k, ker d_k in degree k, 0 below. Returns the
// truncation and the inclusion into c.
std::pair<ChainComplex, ChainMap> smart_truncation(const ChainComplex& c, i64 k);

// Whether f induces isomorphisms on H_k for all k >= from (all k if absent).
bool is_quasi_iso(const ChainComplex& a, const ChainComplex& b, const ChainMap& f,
                  std::optional<i64> from = std::nullopt);

}  // namespace tauchart
