#pragma once

#include "tccert/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tccert {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computation touches a structure constant the input space
/// did not determine (e.g. H^1 x H^1 products of a presentation complex).
struct UnknownStructureConstant : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Sparse coordinate vector within one degree, entries sorted by index.
struct SparseVec {
    std::vector<std::pair<std::size_t, Scalar>> entries;

    bool empty() const { return entries.empty(); }
    void add(std::size_t index, const Scalar& value);
    void normalize();  // sort, merge, drop zeros
};

/// Finite-dimensional graded-commutative algebra over a field, given by
/// per-degree bases and structure constants. Degree 0 is spanned by the
/// unit. Backed either by an explicit table or lazily by a Koszul-signed
/// tensor product of two algebras.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
public:
    const FieldSpec& field() const { return field_; }
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int degree) const;
    std::size_t total_dim() const;
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::string label(int degree, std::size_t index) const;

    /// Product of basis elements, sparse in degree da+db; nullopt if the
    /// structure constant is unknown.
    std::optional<SparseVec> basis_product_opt(int da, std::size_t ia, int db,
                                               std::size_t ib) const;
    /// Same, but throws UnknownStructureConstant instead of returning nullopt.
    SparseVec basis_product(int da, std::size_t ia, int db, std::size_t ib) const;

    bool is_tensor() const;
    std::shared_ptr<const GradedAlgebra> tensor_lhs() const;
    std::shared_ptr<const GradedAlgebra> tensor_rhs() const;

    struct TensorIndex {
        int lhs_degree;
        std::size_t lhs_index;
        std::size_t rhs_index;
    };
    TensorIndex tensor_decode(int degree, std::size_t index) const;
    std::size_t tensor_encode(int lhs_degree, std::size_t lhs_index, int rhs_degree,
                              std::size_t rhs_index) const;

    /// Koszul-signed tensor product: (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'.
    static std::shared_ptr<const GradedAlgebra> tensor(
        std::shared_ptr<const GradedAlgebra> lhs, std::shared_ptr<const GradedAlgebra> rhs);

private:
    friend class AlgebraBuilder;
    GradedAlgebra() = default;

    struct TableEntry {
        bool known = true;
        SparseVec value;
    };
    struct ExplicitBacking {
        // indexed [flat(a)][flat(b)] for positive-degree pairs within top
        std::vector<std::vector<TableEntry>> table;
    };
    struct TensorBacking {
        std::shared_ptr<const GradedAlgebra> lhs, rhs;
    };

    std::size_t flat(int degree, std::size_t index) const;

    FieldSpec field_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<std::string>> labels_;
    std::variant<ExplicitBacking, TensorBacking> backing_;
};

/// Builder for explicit algebras. Unit products are implicit; unset
/// positive-degree pairs default to zero; pairs may be marked unknown.
class AlgebraBuilder {
public:
    AlgebraBuilder(const FieldSpec& f, std::vector<std::size_t> dims);

    void set_label(int degree, std::size_t index, std::string label);
    void set_product(int da, std::size_t ia, int db, std::size_t ib, SparseVec value);
    void set_unknown(int da, std::size_t ia, int db, std::size_t ib);

    /// Validates grading, unit, graded commutativity on known pairs, and
    /// associativity on basis triples when total dim <= associativity_limit.
    std::shared_ptr<const GradedAlgebra> build(std::size_t associativity_limit = 40) const;

private:
    FieldSpec field_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::string>> labels_;
    std::map<std::tuple<int, std::size_t, int, std::size_t>, std::optional<SparseVec>> products_;
};

/// Element of a graded algebra: homogeneous-component coordinate vectors.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::shared_ptr<const GradedAlgebra> alg) : alg_(std::move(alg)) {}

    static AlgebraElement unit(std::shared_ptr<const GradedAlgebra> alg);
    static AlgebraElement basis(std::shared_ptr<const GradedAlgebra> alg, int degree,
                                std::size_t index);

    const std::shared_ptr<const GradedAlgebra>& algebra() const { return alg_; }
    const std::map<int, std::vector<Scalar>>& components() const { return comps_; }

    void add_term(int degree, std::size_t index, const Scalar& value);
    Scalar coeff(int degree, std::size_t index) const;

    bool is_zero() const;
    /// True iff supported in a single degree (or zero); degree reported via out.
    bool is_homogeneous(int* degree = nullptr) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Scalar& s) const;

    bool operator==(const AlgebraElement& o) const;

private:
    void prune();

    std::shared_ptr<const GradedAlgebra> alg_;
    std::map<int, std::vector<Scalar>> comps_;  // dense per present degree
};

/// Bilinear product; throws UnknownStructureConstant when an undetermined
/// constant is hit with nonzero coefficient.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// x^k with x^0 = 1.
AlgebraElement power(const AlgebraElement& x, unsigned k);

/// x ⊗ 1 and 1 ⊗ y into a tensor algebra.
AlgebraElement embed_lhs(const std::shared_ptr<const GradedAlgebra>& tensor_alg,
                         const AlgebraElement& x);
AlgebraElement embed_rhs(const std::shared_ptr<const GradedAlgebra>& tensor_alg,
                         const AlgebraElement& y);

/// The canonical zero-divisor 1⊗u - u⊗1 of a homogeneous class u.
AlgebraElement zero_divisor(const std::shared_ptr<const GradedAlgebra>& tensor_alg,
                            const AlgebraElement& u);

/// (p,q)-block of an element of A⊗A, flattened row-major (dim_p x dim_q).
std::vector<Scalar> bidegree_component(const AlgebraElement& x, int p, int q);

/// The multiplication map A⊗A -> A, a⊗b ↦ a·b.
class DiagonalRestriction {
public:
    explicit DiagonalRestriction(std::shared_ptr<const GradedAlgebra> self_tensor);

    AlgebraElement apply(const AlgebraElement& x) const;
    /// dim ker over all degrees; intended for small algebras.
    std::size_t kernel_dim() const;

private:
    std::shared_ptr<const GradedAlgebra> aa_;
    std::shared_ptr<const GradedAlgebra> a_;
};

}  // namespace tccert
