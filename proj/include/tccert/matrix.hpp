#pragma once

#include "tccert/field.hpp"

#include <vector>

namespace tccert {

/// Dense matrix over a single FieldSpec, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f,
                            const std::vector<std::vector<long long>>& rows);

    Matrix transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // m * v

    bool operator==(const Matrix& o) const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    Matrix rref;
};

/// Reduced row-echelon form, deterministic: leftmost pivot column, topmost
/// nonzero entry. OpenMP-parallel row updates; identical output to the
/// serial reference.
EchelonForm reduce_echelon(const Matrix& m);

/// Serial reference implementation, kept for testing and benchmarking.
EchelonForm reduce_echelon_serial(const Matrix& m);

/// Basis of the null space {v : m v = 0}; every vector re-checked.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Basis of the column space (pivot columns of m).
std::vector<std::vector<Scalar>> image_basis(const Matrix& m);

/// Exact binomial coefficient C(n, k) reduced into the field.
Scalar binomial_in_field(long long n, long long k, const FieldSpec& f);

}  // namespace tccert
