#pragma once

#include <optional>

#include "tauchart/linalg/matrix.hpp"

namespace tauchart {

// U * A * V = D with D diagonal, d_1 | d_2 | ... , nonnegative.
struct SmithForm {
    Matrix D;
    Matrix U;
    Matrix U_inv;
    Matrix V;
    Vec diagonal;  // length min(rows, cols)
    std::size_t rank = 0;
};

SmithForm smith_form(const Matrix& a, bool with_transforms = true);

// Invariant factors of a matrix (nonzero diagonal entries of its Smith form).
Vec smith_invariants(const Matrix& a);

// Row Hermite normal form: the nonzero rows of the fully reduced echelon form
// of the row span. Pivots are positive and entries above pivots lie in [0, pivot).
Matrix hermite_rows(const Matrix& generators);

// Basis (as rows) of {x : A x = 0}, in Hermite form.
Matrix integer_kernel(const Matrix& a);

// Solves A x = b over the integers for several right-hand sides, reusing one
// Smith decomposition.
class IntegerSolver {
public:
    explicit IntegerSolver(const Matrix& a);
    std::optional<Vec> solve(const Vec& b) const;

private:
    SmithForm sf_;
    std::size_t cols_;
};

}  // namespace tauchart
