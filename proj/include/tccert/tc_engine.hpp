#pragma once

#include "tccert/builders.hpp"

#include "json.hpp"

#include <string>

namespace tccert {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Result of trying to establish that a marked degree-2 class is atoroidal,
/// either directly from a user assertion or by promotion from asphericity.
/// Refusal is a value, not an error: the missing hypothesis is named.
struct PromotionOutcome {
    bool granted = false;
    bool via_user_assertion = false;
    std::string refusal;
    std::vector<std::string> hypotheses;  // assertion names consumed
};

PromotionOutcome promote_atoroidal(const ResolvedClass& c, const FieldSpec& f);

/// A certificate: inference steps ending in an interval [lower, upper] for
/// the topological complexity of the space (reduced convention, TC(pt)=0).
/// `doc` is the full serializable record; dumps are byte-deterministic.
struct Certificate {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    nlohmann::json doc;

    std::string dump() const { return doc.dump(2) + "\n"; }
};

/// Self-contained recursive description of an algebra's structure constants
/// (explicit tables at the leaves, tensor nodes above), embedded in
/// certificates so the replay checker needs nothing else.
nlohmann::json describe_algebra(const std::shared_ptr<const GradedAlgebra>& a);

/// Element of a self-tensor algebra A (x) A as a sorted list of terms
/// [lhs_degree, lhs_index, rhs_degree, rhs_index, coeff string].
nlohmann::json tensor_element_terms(const AlgebraElement& x);

/// Full certification pipeline: promotions, the weighted atoroidal lower
/// bound, the plain zero-divisor product lower bound, and the dimension
/// upper bound. depth < 0 selects the default cap of 2 * dim(space).
Certificate certify(const Space& space, const FieldSpec& f, int depth = -1);

}  // namespace tccert
