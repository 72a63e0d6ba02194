#include "tauchart/fcc/chain_complex.hpp"

#include <algorithm>
#include <set>

#include "tauchart/linalg/normal_forms.hpp"

namespace tauchart {

std::size_t ChainComplex::rank(i64 k) const {
    auto it = ranks.find(k);
    return it == ranks.end() ? 0 : it->second;
}

Matrix ChainComplex::diff(i64 k) const {
    auto it = d.find(k);
    if (it != d.end()) return it->second;
    return Matrix(rank(k - 1), rank(k));
}

void ChainComplex::set_diff(i64 k, Matrix m) {
    if (m.rows() != rank(k - 1) || m.cols() != rank(k))
        throw MathError("differential from degree " + std::to_string(k) + " has the wrong shape");
    if (m.is_zero())
        d.erase(k);
    else
        d[k] = std::move(m);
}

std::optional<std::pair<i64, i64>> ChainComplex::degree_range() const {
    if (ranks.empty()) return std::nullopt;
    return std::make_pair(ranks.begin()->first, ranks.rbegin()->first);
}

void ChainComplex::validate() const {
    for (const auto& [k, r] : ranks)
        if (r == 0) throw MathError("zero rank stored in degree " + std::to_string(k));
    for (const auto& [k, m] : d) {
        if (m.rows() != rank(k - 1) || m.cols() != rank(k))
            throw MathError("differential from degree " + std::to_string(k) + " has the wrong shape");
        if (m.is_zero()) throw MathError("zero differential stored in degree " + std::to_string(k));
    }
    for (const auto& [k, m] : d)
        if (!(diff(k - 1) * m).is_zero()) throw MathError("d o d != 0 at degree " + std::to_string(k));
}

ChainComplex ChainComplex::shifted(i64 a) const {
    ChainComplex out;
    for (const auto& [k, r] : ranks) out.ranks[k + a] = r;
    for (const auto& [k, m] : d) out.d[k + a] = m;
    return out;
}

std::string ChainComplex::basis_name(i64 k, std::size_t i) const {
    return "c" + std::to_string(k) + "_" + std::to_string(i);
}

Matrix ChainMap::at(i64 k, const ChainComplex& a, const ChainComplex& b) const {
    auto it = f.find(k);
    if (it != f.end()) return it->second;
    return Matrix(b.rank(k), a.rank(k));
}

void ChainMap::set(i64 k, Matrix m) {
    if (m.is_zero())
        f.erase(k);
    else
        f[k] = std::move(m);
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    ChainMap m;
    for (const auto& [k, r] : c.ranks) m.f[k] = Matrix::identity(r);
    return m;
}

ChainMap ChainMap::compose(const ChainMap& g, const ChainMap& f, const ChainComplex& a, const ChainComplex& b,
                           const ChainComplex& c) {
    ChainMap out;
    for (const auto& [k, r] : a.ranks) out.set(k, g.at(k, b, c) * f.at(k, a, b));
    return out;
}

bool is_chain_map(const ChainComplex& a, const ChainComplex& b, const ChainMap& f) {
    for (const auto& [k, m] : f.f)
        if (m.rows() != b.rank(k) || m.cols() != a.rank(k)) return false;
    std::set<i64> degrees;
    for (const auto& [k, r] : a.ranks) {
        degrees.insert(k);
        degrees.insert(k + 1);
    }
    for (i64 k : degrees)
        if (!(b.diff(k) * f.at(k, a, b) == f.at(k - 1, a, b) * a.diff(k))) return false;
    return true;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex out;
    std::set<i64> degrees;
    for (const auto& [k, r] : a.ranks) degrees.insert(k);
    for (const auto& [k, r] : b.ranks) degrees.insert(k);
    for (i64 k : degrees) out.ranks[k] = a.rank(k) + b.rank(k);
    for (i64 k : degrees) {
        Matrix m(out.rank(k - 1), out.rank(k));
        Matrix da = a.diff(k), db = b.diff(k);
        for (std::size_t i = 0; i < da.rows(); ++i)
            for (std::size_t j = 0; j < da.cols(); ++j) m(i, j) = da(i, j);
        for (std::size_t i = 0; i < db.rows(); ++i)
            for (std::size_t j = 0; j < db.cols(); ++j) m(a.rank(k - 1) + i, a.rank(k) + j) = db(i, j);
        out.set_diff(k, std::move(m));
    }
    return out;
}

AbGroup chain_ambient(const ChainComplex& c, i64 k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < c.rank(k); ++i) names.push_back(c.basis_name(k, i));
    return AbGroup(names, Vec(names.size(), Int(0)));
}

Subquotient homology(const ChainComplex& c, i64 k) {
    AbGroup amb = chain_ambient(c, k);
    Lattice cycles = Lattice::kernel(c.diff(k));
    Lattice boundaries = Lattice::span_cols(c.diff(k + 1));
    return Subquotient(amb, cycles, boundaries);
}

ChainComplex cone(const ChainComplex& a, const ChainComplex& b, const ChainMap& f) {
    ChainComplex out;
    std::set<i64> degrees;
    for (const auto& [k, r] : b.ranks) degrees.insert(k);
    for (const auto& [k, r] : a.ranks) degrees.insert(k + 1);
    for (i64 k : degrees) out.ranks[k] = b.rank(k) + a.rank(k - 1);
    for (i64 k : degrees) {
        // (b, a) in B_k + A_{k-1}  ->  (d b + f a, -d a) in B_{k-1} + A_{k-2}
        Matrix m(out.rank(k - 1), out.rank(k));
        Matrix db = b.diff(k), fa = f.at(k - 1, a, b), da = a.diff(k - 1);
        const std::size_t bk = b.rank(k), bk1 = b.rank(k - 1);
        for (std::size_t i = 0; i < db.rows(); ++i)
            for (std::size_t j = 0; j < db.cols(); ++j) m(i, j) = db(i, j);
        for (std::size_t i = 0; i < fa.rows(); ++i)
            for (std::size_t j = 0; j < fa.cols(); ++j) m(i, bk + j) = fa(i, j);
        for (std::size_t i = 0; i < da.rows(); ++i)
            for (std::size_t j = 0; j < da.cols(); ++j) m(bk1 + i, bk + j) = -da(i, j);
        out.set_diff(k, std::move(m));
    }
    return out;
}

std::pair<ChainComplex, ChainMap> smart_truncation(const ChainComplex& c, i64 k) {
    ChainComplex t;
    ChainMap inc;
    for (const auto& [j, r] : c.ranks)
        if (j > k) {
            t.ranks[j] = r;
            inc.f[j] = Matrix::identity(r);
        }
    Matrix kbasis = integer_kernel(c.diff(k)).transpose();  // columns span ker d_k
    if (kbasis.cols() > 0) {
        t.ranks[k] = kbasis.cols();
        inc.f[k] = kbasis;
    }
    for (const auto& [j, r] : t.ranks) {
        if (j == k) continue;
        if (j > k + 1) {
            t.set_diff(j, c.diff(j));
            continue;
        }
        // j == k + 1: land in the kernel coordinates.
        Matrix dk1 = c.diff(j);
        Matrix m(t.rank(k), r);
        if (t.rank(k) > 0) {
            IntegerSolver solver(kbasis);
            for (std::size_t col = 0; col < r; ++col) {
                auto sol = solver.solve(dk1.column(col));
                if (!sol) throw MathError("boundary outside the kernel during truncation");
                m.set_column(col, *sol);
            }
        }
        t.set_diff(j, std::move(m));
    }
    return {std::move(t), std::move(inc)};
}

bool is_quasi_iso(const ChainComplex& a, const ChainComplex& b, const ChainMap& f, std::optional<i64> from) {
    std::set<i64> degrees;
    for (const auto& [k, r] : a.ranks) degrees.insert(k);
    for (const auto& [k, r] : b.ranks) degrees.insert(k);
    for (i64 k : degrees) {
        if (from && k < *from) continue;
        Subquotient ha = homology(a, k), hb = homology(b, k);
        Matrix m = ha.induced(hb, f.at(k, a, b));
        if (!hom_is_iso(ha.group(), hb.group(), m)) return false;
    }
    return true;
}

}  // namespace tauchart
