#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intres/errors.hpp"

namespace intres {

using Scalar = std::uint32_t;

bool is_prime(Scalar p);
Scalar inverse_mod(Scalar x, Scalar p);

// Dense row-major matrix over the prime field GF(p).  The characteristic
// travels with every matrix; mixing characteristics throws.  All dimensions
// may be zero (empty matrices behave as zero maps between zero spaces).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, Scalar p);

    static Matrix identity(int n, Scalar p);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Scalar p);
    static Matrix column_vector(const std::vector<Scalar>& v, Scalar p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar field() const { return p_; }

    Scalar at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Scalar v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v % p_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Scalar c) const;
    Matrix transposed() const;
    Matrix hstack(const Matrix& rhs) const; // same row count
    Matrix vstack(const Matrix& rhs) const; // same column count
    Matrix columns(const std::vector<int>& idx) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    std::vector<Scalar> row(int i) const;
    std::vector<Scalar> col(int j) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& rhs) const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    Scalar p_ = 2;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix rref;
    std::vector<int> pivots; // pivot column of each pivot row, ascending
};

// Gauss-Jordan with deterministic pivoting: first nonzero entry in column
// order, rows scanned top to bottom.
Echelon reduced_row_echelon(const Matrix& m);

int rank(const Matrix& m);

// Columns form a basis of { v : m v = 0 }: one vector per free column of the
// RREF, in column order.
Matrix kernel_basis(const Matrix& m);

struct Solution {
    std::vector<Scalar> particular;
    Matrix kernel;
};

// m x = b.  Unsolvable is a valid return, not an error.
std::optional<Solution> solve(const Matrix& m, const std::vector<Scalar>& b);

// X with a X = b, columnwise.  Unique when a has full column rank; otherwise
// the particular solution per column is the deterministic one with free
// variables zero.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

// Deterministic basis of the column span: the original columns sitting at the
// pivot positions of the RREF.
Matrix column_space_basis(const Matrix& m);

} // namespace intres
