#pragma once

#include "tccert/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tccert {

struct SquareZeroViolation : std::runtime_error {
    explicit SquareZeroViolation(int degree)
        : std::runtime_error("boundary composition nonzero entering degree " +
                             std::to_string(degree)),
          degree(degree) {}
    int degree;
};

/// Integer matrix, row-major. Boundary matrices of a based chain complex.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long long& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    long long at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix over(const FieldSpec& f) const;

private:
    std::size_t rows_, cols_;
    std::vector<long long> data_;
};

/// Finite based chain complex over Z. boundaries[k] is the matrix of
/// d_{k+1} : C_{k+1} -> C_k (rows = k-cells, columns = (k+1)-cells).
struct ChainComplexData {
    std::vector<std::size_t> dims;          // cell counts, degrees 0..d
    std::vector<IntMatrix> boundaries;      // size dims.size() - 1
    std::vector<std::vector<std::string>> labels;  // optional, per degree

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

/// Checks matrix shapes and dd = 0 over Z.
void validate(const ChainComplexData& cc);

/// Chosen basis of H^k(X;F) with explicit representative cocycles and a
/// projection from arbitrary cocycles to coordinates in that basis.
class CohomologyBasis {
public:
    CohomologyBasis(int degree, const FieldSpec& f, std::vector<std::vector<Scalar>> reps,
                    std::vector<std::vector<Scalar>> coboundary_basis);

    int degree() const { return degree_; }
    std::size_t dim() const { return reps_.size(); }
    const std::vector<std::vector<Scalar>>& representatives() const { return reps_; }

    /// Coordinates of the class [z] in the chosen basis; z must be a cocycle
    /// in the span of representatives and coboundaries.
    std::vector<Scalar> project(const std::vector<Scalar>& z) const;

private:
    int degree_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> reps_;
    Matrix solver_;  // columns [reps | independent coboundaries]
};

/// H^k(X;F) with deterministic representatives: kernel basis of delta_k
/// reduced against the image of delta_{k-1}, non-pivot survivors kept.
CohomologyBasis cohomology(const ChainComplexData& cc, const FieldSpec& f, int k);

/// dim H^k for k = 0..top.
std::vector<std::size_t> betti_profile(const ChainComplexData& cc, const FieldSpec& f);

long long euler_characteristic(const ChainComplexData& cc);

}  // namespace tccert
