#include "tccert/chain.hpp"

namespace tccert {

Matrix IntMatrix::over(const FieldSpec& f) const {
    Matrix m(f, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0) m.at(r, c) = Scalar(f, at(r, c));
    return m;
}

void validate(const ChainComplexData& cc) {
    if (cc.dims.empty()) throw std::invalid_argument("chain complex needs degree 0");
    if (cc.boundaries.size() + 1 != cc.dims.size())
        throw std::invalid_argument("boundary count must be one less than degree count");
    for (std::size_t k = 0; k < cc.boundaries.size(); ++k) {
        const IntMatrix& b = cc.boundaries[k];
        if (b.rows() != cc.dims[k] || b.cols() != cc.dims[k + 1])
            throw std::invalid_argument("boundary matrix shape mismatch at degree " +
                                        std::to_string(k + 1));
    }
    // d_k . d_{k+1} = 0 over Z
    for (std::size_t k = 0; k + 1 < cc.boundaries.size(); ++k) {
        const IntMatrix& a = cc.boundaries[k];      // C_{k+1} -> C_k
        const IntMatrix& b = cc.boundaries[k + 1];  // C_{k+2} -> C_{k+1}
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) {
                long long sum = 0;
                for (std::size_t m = 0; m < a.cols(); ++m) sum += a.at(i, m) * b.at(m, j);
                if (sum != 0) throw SquareZeroViolation(static_cast<int>(k + 2));
            }
    }
}

CohomologyBasis::CohomologyBasis(int degree, const FieldSpec& f,
                                 std::vector<std::vector<Scalar>> reps,
                                 std::vector<std::vector<Scalar>> coboundary_basis)
    : degree_(degree), field_(f), reps_(std::move(reps)) {
    const std::size_t n = reps_.empty()
                              ? (coboundary_basis.empty() ? 0 : coboundary_basis[0].size())
                              : reps_[0].size();
    solver_ = Matrix(f, n, reps_.size() + coboundary_basis.size());
    for (std::size_t j = 0; j < reps_.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) solver_.at(i, j) = reps_[j][i];
    for (std::size_t j = 0; j < coboundary_basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            solver_.at(i, reps_.size() + j) = coboundary_basis[j][i];
}

std::vector<Scalar> CohomologyBasis::project(const std::vector<Scalar>& z) const {
    if (z.size() != solver_.rows()) throw std::invalid_argument("cocycle length mismatch");
    // solve solver_ * c = z; the columns are linearly independent
    Matrix aug(field_, solver_.rows(), solver_.cols() + 1);
    for (std::size_t i = 0; i < solver_.rows(); ++i) {
        for (std::size_t j = 0; j < solver_.cols(); ++j) aug.at(i, j) = solver_.at(i, j);
        aug.at(i, solver_.cols()) = z[i];
    }
    EchelonForm ef = reduce_echelon(aug);
    std::vector<Scalar> coords(reps_.size(), Scalar::zero(field_));
    for (std::size_t pr = 0; pr < ef.pivots.size(); ++pr) {
        std::size_t col = ef.pivots[pr];
        if (col == solver_.cols())
            throw std::invalid_argument("vector is not in the cocycle span");
        if (col < reps_.size()) coords[col] = ef.rref.at(pr, solver_.cols());
    }
    return coords;
}

namespace {

// delta_k : C^k -> C^{k+1} is the transpose of d_{k+1}; zero map if k is
// outside the complex.
Matrix coboundary(const ChainComplexData& cc, const FieldSpec& f, int k) {
    int top = cc.top_degree();
    std::size_t dk = (k >= 0 && k <= top) ? cc.dims[k] : 0;
    std::size_t dk1 = (k + 1 >= 0 && k + 1 <= top) ? cc.dims[k + 1] : 0;
    if (k < 0 || k >= top) return Matrix(f, dk1, dk);
    return cc.boundaries[k].over(f).transpose();
}

}  // namespace

CohomologyBasis cohomology(const ChainComplexData& cc, const FieldSpec& f, int k) {
    if (k < 0 || k > cc.top_degree())
        throw std::invalid_argument("cohomology degree out of range");
    Matrix delta_k = coboundary(cc, f, k);
    Matrix delta_km1 = coboundary(cc, f, k - 1);

    auto cocycles = kernel_basis(delta_k);
    auto coboundaries = image_basis(delta_km1);

    // Column-reduce [coboundaries | cocycles]; a cocycle basis vector
    // survives iff its column is a pivot column.
    const std::size_t n = cc.dims[k];
    Matrix m(f, n, coboundaries.size() + cocycles.size());
    for (std::size_t j = 0; j < coboundaries.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = coboundaries[j][i];
    for (std::size_t j = 0; j < cocycles.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, coboundaries.size() + j) = cocycles[j][i];
    EchelonForm ef = reduce_echelon(m);

    std::vector<std::vector<Scalar>> reps;
    std::vector<std::vector<Scalar>> cob_pivots;
    for (std::size_t p : ef.pivots) {
        if (p < coboundaries.size())
            cob_pivots.push_back(coboundaries[p]);
        else
            reps.push_back(cocycles[p - coboundaries.size()]);
    }
    return CohomologyBasis(k, f, std::move(reps), std::move(cob_pivots));
}

std::vector<std::size_t> betti_profile(const ChainComplexData& cc, const FieldSpec& f) {
    std::vector<std::size_t> out;
    for (int k = 0; k <= cc.top_degree(); ++k) out.push_back(cohomology(cc, f, k).dim());
    return out;
}

long long euler_characteristic(const ChainComplexData& cc) {
    long long chi = 0;
    for (std::size_t k = 0; k < cc.dims.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.dims[k]);
    return chi;
}

}  // namespace tccert
