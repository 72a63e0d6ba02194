#include "tauchart/linalg/lattice.hpp"

#include "tauchart/linalg/normal_forms.hpp"

namespace tauchart {

Lattice Lattice::full(std::size_t n) {
    Lattice l(n);
    l.basis_ = Matrix::identity(n);
    l.rebuild_pivots();
    return l;
}

Lattice Lattice::span(std::size_t n, const std::vector<Vec>& generators) {
    return span_rows(Matrix::from_rows(generators, n));
}

Lattice Lattice::span_rows(const Matrix& rows) {
    Lattice l(rows.cols());
    if (rows.rows() > 0) l.basis_ = hermite_rows(rows);
    l.rebuild_pivots();
    return l;
}

Lattice Lattice::span_cols(const Matrix& cols) { return span_rows(cols.transpose()); }

Lattice Lattice::kernel(const Matrix& f) {
    Lattice l(f.cols());
    l.basis_ = integer_kernel(f);
    l.rebuild_pivots();
    return l;
}

Lattice Lattice::preimage(const Matrix& f, const Lattice& target) {
    if (f.rows() != target.ambient()) throw MathError("Lattice::preimage: shape mismatch");
    const std::size_t n = f.cols();
    // Solve f v - S^T w = 0 and keep v.
    Matrix st = -target.basis().transpose();
    Matrix big = Matrix::hcat(f, st);
    Matrix k = integer_kernel(big);
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;
    if (k.rows() == 0) return Lattice(n);
    return span_rows(k.select_cols(idx));
}

void Lattice::rebuild_pivots() {
    pivots_.clear();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t j = 0;
        while (j < n_ && basis_(i, j) == 0) ++j;
        pivots_.push_back(j);
    }
}

std::vector<Vec> Lattice::basis_vectors() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
}

std::optional<Vec> Lattice::coordinates(const Vec& v) const {
    if (v.size() != n_) throw MathError("Lattice::coordinates: dimension mismatch");
    Vec w = v;
    Vec c(basis_.rows());
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
        const std::size_t p = pivots_[k];
        for (std::size_t j = (k ? pivots_[k - 1] + 1 : 0); j < p; ++j)
            if (w[j] != 0) return std::nullopt;
        if (w[p] == 0) continue;
        if (!divides(basis_(k, p), w[p])) return std::nullopt;
        c[k] = w[p] / basis_(k, p);
        for (std::size_t j = p; j < n_; ++j)
            if (basis_(k, j) != 0) w[j] -= c[k] * basis_(k, j);
    }
    if (!is_zero(w)) return std::nullopt;
    return c;
}

bool Lattice::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Lattice Lattice::operator+(const Lattice& other) const {
    if (n_ != other.n_) throw MathError("Lattice sum: dimension mismatch");
    if (other.rank() == 0) return *this;
    if (rank() == 0) return other;
    return span_rows(Matrix::vcat(basis_, other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const {
    if (n_ != other.n_) throw MathError("Lattice intersection: dimension mismatch");
    if (rank() == 0 || other.rank() == 0) return Lattice(n_);
    // a B1 = b B2  <=>  [B1^T | -B2^T] (a, b) = 0
    Matrix big = Matrix::hcat(basis_.transpose(), -other.basis_.transpose());
    Matrix k = integer_kernel(big);
    if (k.rows() == 0) return Lattice(n_);
    std::vector<std::size_t> idx(rank());
    for (std::size_t j = 0; j < rank(); ++j) idx[j] = j;
    Matrix a = k.select_cols(idx);
    return span_rows(a * basis_);
}

Lattice Lattice::image(const Matrix& f) const {
    if (f.cols() != n_) throw MathError("Lattice::image: shape mismatch");
    if (rank() == 0) return Lattice(f.rows());
    return span_rows((f * basis_.transpose()).transpose());
}

}  // namespace tauchart
