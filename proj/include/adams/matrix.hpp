#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adams/integer.hpp"

namespace adams {

// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<BigInt> column(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    // Stacks rows of b below rows of a (equal column counts).
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<BigInt> apply(std::span<const BigInt> v) const;  // this * v

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

// Sparse integer matrix stored by columns; each column keeps its nonzero
// entries sorted by row. Used for group actions on large tensor lattices.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, BigInt>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const IntMatrix& m);
    // Entries (row, col, value); duplicates are summed, zeros dropped.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<std::tuple<std::size_t, std::size_t, BigInt>> triplets);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Column& column(std::size_t c) const { return columns_[c]; }
    // Replaces column c; entries must be sorted by row and nonzero.
    void set_column(std::size_t c, Column col);
    BigInt at(std::size_t r, std::size_t c) const;
    std::size_t nonzeros() const;

    IntMatrix to_dense() const;
    SparseMatrix transpose() const;
    BigInt trace() const;
    std::vector<BigInt> apply(std::span<const BigInt> v) const;
    Column apply(const Column& v) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix scaled(const BigInt& s) const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Column> columns_;
};

// trace(a * b) without forming the product.
BigInt trace_of_product(const SparseMatrix& a, const SparseMatrix& b);

// Kronecker product a (x) b with the row-major tensor index i*b.size + j.
SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace adams
