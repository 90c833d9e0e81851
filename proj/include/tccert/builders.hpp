#pragma once

#include "tccert/chain.hpp"
#include "tccert/ring.hpp"
#include "tccert/simplicial.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tccert {

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Group presentation; relator words use lowercase letters for generators
/// and uppercase for their inverses, concatenated left to right.
struct GroupPresentation {
    std::vector<std::string> generators;  // single lowercase letters
    std::vector<std::string> relators;

    /// Exponent sum of each generator in the given relator word.
    std::vector<long long> exponent_sums(const std::string& relator) const;
};

/// Hypotheses the engine cannot decide algorithmically; user-asserted,
/// each with a free-text provenance note.
struct AssertionSet {
    bool two_aspherical = false;
    bool pi1_no_Z2 = false;
    bool pi1_torsion_free = false;
    bool aspherical_space = false;  // implies two_aspherical
    std::vector<std::string> atoroidal_classes;  // class names asserted atoroidal directly
    std::map<std::string, std::string> notes;    // per-flag provenance

    bool effective_two_aspherical() const { return two_aspherical || aspherical_space; }
};

/// How a marked class was established atoroidal (or not yet).
enum class ClassProvenance { Plain, UserAsserted, Promoted, Pullback };

/// A distinguished cohomology class of a space's ring.
struct MarkedClassSpec {
    std::string name;
    int degree = 2;
    // coordinates in the chosen H^degree basis; empty means "generator"
    // (only valid when dim H^degree = 1)
    std::vector<std::string> coordinates;
};

/// Marked class resolved against a concrete ring over a field.
struct ResolvedClass {
    std::string name;
    int degree;
    AlgebraElement element;            // in the space's ring
    AssertionSet source_assertions;    // assertions of the originating factor
    bool is_pullback = false;
    bool asserted_atoroidal = false;   // named in atoroidal_classes of the source
};

/// A space the engine can certify: simplicial complex, presentation
/// complex, raw algebra, or finite product. Immutable after construction.
class Space {
public:
    static Space simplicial(std::string name, SimplicialComplex sc, AssertionSet a,
                            std::vector<MarkedClassSpec> marked);
    static Space presentation(std::string name, GroupPresentation p, AssertionSet a,
                              std::vector<MarkedClassSpec> marked);
    static Space raw_algebra(std::string name, int dimension,
                             std::function<std::shared_ptr<const GradedAlgebra>(const FieldSpec&)>
                                 ring_factory,
                             AssertionSet a, std::vector<MarkedClassSpec> marked);
    static Space product(std::string name, std::vector<Space> factors);

    /// Bundled example spaces (triangulations with no assertions attached).
    static Space bundled(const std::string& name);

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    const AssertionSet& assertions() const { return assertions_; }
    bool is_product() const { return !factors_.empty(); }
    const std::vector<Space>& factors() const { return factors_; }

    /// Cohomology ring over the field (cached per characteristic).
    std::shared_ptr<const GradedAlgebra> ring(const FieldSpec& f) const;

    /// Marked classes resolved in ring(f); product spaces pull factor
    /// classes back through the Kuenneth tensor decomposition.
    std::vector<ResolvedClass> marked_classes(const FieldSpec& f) const;

private:
    Space() = default;

    std::string name_;
    int dimension_ = 0;
    AssertionSet assertions_;
    std::vector<MarkedClassSpec> marked_;
    std::vector<Space> factors_;
    std::function<std::shared_ptr<const GradedAlgebra>(const FieldSpec&)> ring_factory_;

    const std::vector<std::shared_ptr<const GradedAlgebra>>& tensor_chain(
        const FieldSpec& f) const;
    mutable std::map<std::uint64_t, std::vector<std::shared_ptr<const GradedAlgebra>>>
        ring_cache_;
};

/// Presentation complex: one 0-cell, a 1-cell per generator, a 2-cell per
/// relator, with the degree-2 boundary given by exponent sums. The ring
/// exposes additive cohomology; H^1 x H^1 products are marked unknown.
ChainComplexData presentation_chain_complex(const GroupPresentation& p);

std::shared_ptr<const GradedAlgebra> presentation_ring(const GroupPresentation& p,
                                                       const FieldSpec& f);

}  // namespace tccert
