#pragma once

#include "tccert/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace tccert {

/// Vertex of the prism Delta_k x {0,1}: (simplex vertex index, level).
using PrismVertex = std::pair<int, int>;

/// Formal integer chain on ordered vertex tuples; no zero terms stored.
class FormalChain {
public:
    void add(const std::vector<PrismVertex>& simplex, long long coeff);
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<PrismVertex>, long long>& terms() const { return terms_; }

    FormalChain boundary() const;  // alternating vertex-dropping
    FormalChain operator+(const FormalChain& o) const;
    FormalChain operator-(const FormalChain& o) const;

    std::string str() const;

private:
    std::map<std::vector<PrismVertex>, long long> terms_;
};

/// The k+1 simplices of the prism decomposition: simplex j has vertices
/// (v_0,0),...,(v_j,0),(v_j,1),...,(v_k,1).
std::vector<std::vector<PrismVertex>> prism_simplices(int k);

struct PrismReport {
    bool ok;
    std::string detail;  // uncancelled term on failure
};

/// Verifies dP(Delta_k) + P(d Delta_k) = top - bottom as formal chains.
PrismReport verify_prism_identity(int k);

/// Exact rational volume check: the prism simplices have pairwise distinct
/// interiors (barycenter containment) and volumes summing to vol(Delta_k).
PrismReport verify_prism_volumes(int k);

/// Affine singular simplex into the torus R^2/Z^2: base point mod Z^2 and
/// exact edge vectors (not reduced).
struct AffineSimplexInTorus {
    std::vector<BigRational> base;                // length 2, stored mod Z^2
    std::vector<std::vector<BigRational>> edges;  // one vector in Q^2 per simplex dimension

    bool operator<(const AffineSimplexInTorus& o) const;
    bool operator==(const AffineSimplexInTorus& o) const;
};

/// Signed sum of four affine 2-simplices forming the fundamental cycle tau.
struct TorusChain {
    std::vector<std::pair<AffineSimplexInTorus, long long>> terms;
};

/// tau exactly as defined by the four-column vertex table; optional sign
/// fault injection flips the coefficient of one term (negative control).
TorusChain torus_cycle(int inject_sign_fault_at = -1);

struct TorusReport {
    bool is_cycle;
    BigRational degree;
    std::string detail;
};

/// Checks d(tau) = 0 under mod-Z^2 simplex equality and computes the
/// mapping degree from the signed simplex areas.
TorusReport verify_torus_cycle(const TorusChain& tau);

}  // namespace tccert
