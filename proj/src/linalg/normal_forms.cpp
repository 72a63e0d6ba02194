#include "tauchart/linalg/normal_forms.hpp"

#include <algorithm>

namespace tauchart {

namespace {

struct SmithState {
    Matrix& d;
    Matrix* u;
    Matrix* u_inv;
    Matrix* v;

    void row_swap(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        if (u) {
            u->swap_rows(i, j);
            u_inv->swap_cols(i, j);
        }
    }
    void col_swap(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        if (v) v->swap_cols(i, j);
    }
    // row_i += c row_j
    void row_add(std::size_t i, std::size_t j, const Int& c) {
        d.add_row(i, j, c);
        if (u) {
            u->add_row(i, j, c);
            u_inv->add_col(j, i, -c);
        }
    }
    void col_add(std::size_t i, std::size_t j, const Int& c) {
        d.add_col(i, j, c);
        if (v) v->add_col(i, j, c);
    }
    void row_negate(std::size_t i) {
        d.negate_row(i);
        if (u) {
            u->negate_row(i);
            u_inv->negate_col(i);
        }
    }
    // Replace rows (p, i) so that d(p, col) becomes gcd and d(i, col) becomes 0.
    void row_gcd(std::size_t p, std::size_t i, std::size_t col) {
        Int a = d(p, col), b = d(i, col), g, s, t;
        ext_gcd(a, b, g, s, t);
        Int ag = a / g, bg = b / g;
        d.combine_rows(p, i, s, t, -bg, ag);
        if (u) {
            u->combine_rows(p, i, s, t, -bg, ag);
            u_inv->combine_cols(p, i, ag, bg, -t, s);
        }
    }
    void col_gcd(std::size_t p, std::size_t j, std::size_t row) {
        Int a = d(row, p), b = d(row, j), g, s, t;
        ext_gcd(a, b, g, s, t);
        Int ag = a / g, bg = b / g;
        d.combine_cols(p, j, s, t, -bg, ag);
        if (v) v->combine_cols(p, j, s, t, -bg, ag);
    }
};

}  // namespace

SmithForm smith_form(const Matrix& a, bool with_transforms) {
    SmithForm out;
    out.D = a;
    const std::size_t m = a.rows(), n = a.cols();
    if (with_transforms) {
        out.U = Matrix::identity(m);
        out.U_inv = Matrix::identity(m);
        out.V = Matrix::identity(n);
    }
    SmithState st{out.D, with_transforms ? &out.U : nullptr, with_transforms ? &out.U_inv : nullptr,
                  with_transforms ? &out.V : nullptr};
    Matrix& d = out.D;
    std::size_t t = 0;
    const std::size_t lim = std::min(m, n);
    while (t < lim) {
        // Pivot: nonzero entry of least absolute value.
        bool found = false;
        std::size_t pi = 0, pj = 0;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d(i, j) == 0) continue;
                Int av = abs(d(i, j));
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        st.row_swap(t, pi);
        st.col_swap(t, pj);
        for (;;) {
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (d(i, t) == 0) continue;
                    if (divides(d(t, t), d(i, t))) {
                        st.row_add(i, t, -(d(i, t) / d(t, t)));
                    } else {
                        st.row_gcd(t, i, t);
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (d(t, j) == 0) continue;
                    if (divides(d(t, t), d(t, j))) {
                        st.col_add(j, t, -(d(t, j) / d(t, t)));
                    } else {
                        st.col_gcd(t, j, t);
                        dirty = true;
                    }
                }
                if (dirty) {
                    bool col_clean = true;
                    for (std::size_t i = t + 1; i < m; ++i)
                        if (d(i, t) != 0) col_clean = false;
                    dirty = !col_clean;
                }
            }
            // Divisibility of the remaining block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(d(t, t), d(i, j))) {
                        st.row_add(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (d(t, t) < 0) st.row_negate(t);
        ++t;
    }
    out.rank = t;
    out.diagonal.resize(lim);
    for (std::size_t i = 0; i < lim; ++i) out.diagonal[i] = d(i, i);
    return out;
}

Vec smith_invariants(const Matrix& a) {
    SmithForm s = smith_form(a, false);
    Vec r;
    for (std::size_t i = 0; i < s.rank; ++i) r.push_back(s.diagonal[i]);
    return r;
}

namespace {

// Echelon form by gcd row operations, pivots restricted to columns < col_limit.
// Returns the number of pivot rows; fills pivot column indices.
std::size_t echelon(Matrix& m, std::size_t col_limit, std::vector<std::size_t>& pivots, bool reduce) {
    std::size_t r = 0;
    pivots.clear();
    for (std::size_t c = 0; c < col_limit && r < m.rows(); ++c) {
        std::size_t first = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                first = i;
                break;
            }
        if (first == m.rows()) continue;
        m.swap_rows(r, first);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            if (divides(m(r, c), m(i, c))) {
                m.add_row(i, r, -(m(i, c) / m(r, c)));
            } else {
                Int a = m(r, c), b = m(i, c), g, s, t;
                ext_gcd(a, b, g, s, t);
                m.combine_rows(r, i, s, t, -(b / g), a / g);
            }
        }
        if (m(r, c) < 0) m.negate_row(r);
        if (reduce)
            for (std::size_t i = 0; i < r; ++i)
                if (m(i, c) != 0) m.add_row(i, r, -floor_div(m(i, c), m(r, c)));
        pivots.push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

Matrix hermite_rows(const Matrix& generators) {
    Matrix m = generators;
    std::vector<std::size_t> piv;
    std::size_t r = echelon(m, m.cols(), piv, true);
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    return m.select_rows(idx);
}

Matrix integer_kernel(const Matrix& a) {
    const std::size_t n = a.cols(), m = a.rows();
    Matrix aug = Matrix::hcat(a.transpose(), Matrix::identity(n));
    std::vector<std::size_t> piv;
    std::size_t r = echelon(aug, m, piv, false);
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = r; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) cols.push_back(m + j);
    Matrix k = aug.select_rows(rows).select_cols(cols);
    if (k.rows() == 0) return Matrix(0, n);
    return hermite_rows(k);
}

IntegerSolver::IntegerSolver(const Matrix& a) : sf_(smith_form(a, true)), cols_(a.cols()) {}

std::optional<Vec> IntegerSolver::solve(const Vec& b) const {
    if (b.size() != sf_.U.rows()) throw MathError("IntegerSolver: right-hand side has wrong size");
    Vec ub = sf_.U * b;
    Vec y(cols_);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < sf_.rank) {
            if (!divides(sf_.diagonal[i], ub[i])) return std::nullopt;
            y[i] = ub[i] / sf_.diagonal[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return sf_.V * y;
}

}  // namespace tauchart
