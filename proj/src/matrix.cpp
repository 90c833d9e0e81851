#include "tccert/matrix.hpp"

#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tccert {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

namespace {

// Gauss-Jordan with fixed pivot order. The row updates in one elimination
// step are independent, so they can run in parallel without changing the
// result.
EchelonForm gauss_jordan(const Matrix& input, bool parallel) {
    EchelonForm ef;
    ef.rref = input;
    Matrix& m = ef.rref;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = col; j < cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < cols; ++j) m.at(pivot_row, j) *= inv;

        const std::int64_t n_rows = static_cast<std::int64_t>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows * cols > 4096)
#endif
        for (std::int64_t r = 0; r < n_rows; ++r) {
            if (static_cast<std::size_t>(r) == pivot_row) continue;
            const Scalar factor = m.at(r, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j)
                m.at(r, j) -= factor * m.at(pivot_row, j);
        }
        ef.pivots.push_back(col);
        ++pivot_row;
    }
    (void)parallel;
    ef.rank = ef.pivots.size();
    return ef;
}

}  // namespace

EchelonForm reduce_echelon(const Matrix& m) { return gauss_jordan(m, true); }

EchelonForm reduce_echelon_serial(const Matrix& m) { return gauss_jordan(m, false); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const FieldSpec f = m.field();
    EchelonForm ef = reduce_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : ef.pivots) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (std::size_t pr = 0; pr < ef.pivots.size(); ++pr)
            v[ef.pivots[pr]] = -ef.rref.at(pr, free_col);
        for (const Scalar& s : m.apply(v))
            if (!s.is_zero()) throw std::logic_error("kernel vector fails m*v = 0");
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Scalar>> image_basis(const Matrix& m) {
    EchelonForm ef = reduce_echelon(m);
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t p : ef.pivots) {
        std::vector<Scalar> col;
        col.reserve(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(m.at(r, p));
        basis.push_back(std::move(col));
    }
    return basis;
}

Scalar binomial_in_field(long long n, long long k, const FieldSpec& f) {
    if (k < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Scalar(f, BigRational(num, den));
}

}  // namespace tccert
