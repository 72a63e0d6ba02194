#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tauchart/linalg/integer.hpp"

namespace tauchart {

// Dense integer matrix, row-major. Acts on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix diagonal(const Vec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Vec operator*(const Vec& v) const;
    bool operator==(const Matrix& other) const = default;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    // Submatrix built from chosen rows / columns.
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

    // Block concatenation.
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);

    // Elementary operations used by the normal form algorithms.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
    void combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c, const Int& d);
    void combine_cols(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c, const Int& d);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Int& c);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace tauchart
