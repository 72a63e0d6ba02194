#pragma once

#include <optional>
#include <vector>

#include "tauchart/linalg/matrix.hpp"

namespace tauchart {

// A subgroup of Z^n stored by its (unique) row Hermite basis, so equality of
// lattices is equality of bases and derived constructions are canonical.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}

    static Lattice full(std::size_t n);
    static Lattice span(std::size_t n, const std::vector<Vec>& generators);
    static Lattice span_rows(const Matrix& rows);
    static Lattice span_cols(const Matrix& cols);
    // {v : f v in target}
    static Lattice preimage(const Matrix& f, const Lattice& target);
    static Lattice kernel(const Matrix& f);

    std::size_t ambient() const { return n_; }
    std::size_t rank() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const;

    bool contains(const Vec& v) const;
    bool contains(const Lattice& other) const;
    // Coefficients of v in the Hermite basis, if v lies in the lattice.
    std::optional<Vec> coordinates(const Vec& v) const;

    Lattice operator+(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;
    Lattice image(const Matrix& f) const;

    bool operator==(const Lattice& other) const { return n_ == other.n_ && basis_ == other.basis_; }

private:
    void rebuild_pivots();

    std::size_t n_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace tauchart
