#include "tccert/builders.hpp"

#include <algorithm>
#include <cctype>

namespace tccert {

std::vector<long long> GroupPresentation::exponent_sums(const std::string& relator) const {
    std::vector<long long> sums(generators.size(), 0);
    for (char ch : relator) {
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        auto it = std::find(generators.begin(), generators.end(), std::string(1, lower));
        if (it == generators.end())
            throw BuildError(std::string("relator letter '") + ch + "' names no generator");
        long long delta = std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1;
        sums[static_cast<std::size_t>(it - generators.begin())] += delta;
    }
    return sums;
}

ChainComplexData presentation_chain_complex(const GroupPresentation& p) {
    if (p.generators.empty()) throw BuildError("presentation needs at least one generator");
    ChainComplexData cc;
    cc.dims = {1, p.generators.size(), p.relators.size()};
    cc.boundaries.emplace_back(1, p.generators.size());  // every edge is a loop
    IntMatrix d2(p.generators.size(), p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        auto sums = p.exponent_sums(p.relators[r]);
        for (std::size_t g = 0; g < sums.size(); ++g) d2.at(g, r) = sums[g];
    }
    cc.boundaries.push_back(std::move(d2));
    cc.labels = {{"*"}, p.generators, {}};
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        cc.labels[2].push_back("r" + std::to_string(r));
    validate(cc);
    return cc;
}

std::shared_ptr<const GradedAlgebra> presentation_ring(const GroupPresentation& p,
                                                       const FieldSpec& f) {
    ChainComplexData cc = presentation_chain_complex(p);
    std::size_t h1 = cohomology(cc, f, 1).dim();
    std::size_t h2 = cohomology(cc, f, 2).dim();
    AlgebraBuilder builder(f, {1, h1, h2});
    for (std::size_t i = 0; i < h1; ++i) builder.set_label(1, i, "x" + std::to_string(i));
    for (std::size_t i = 0; i < h2; ++i) builder.set_label(2, i, "v" + std::to_string(i));
    // Degree (1,1) products would need Fox-derivative cup products; they are
    // recorded as unknown whenever H^2 can receive them. Everything else is
    // forced by the grading.
    if (h2 > 0)
        for (std::size_t i = 0; i < h1; ++i)
            for (std::size_t j = 0; j < h1; ++j) builder.set_unknown(1, i, 1, j);
    return builder.build();
}

Space Space::simplicial(std::string name, SimplicialComplex sc, AssertionSet a,
                        std::vector<MarkedClassSpec> marked) {
    Space s;
    s.name_ = std::move(name);
    s.dimension_ = sc.dimension();
    s.assertions_ = std::move(a);
    s.marked_ = std::move(marked);
    auto shared = std::make_shared<SimplicialComplex>(std::move(sc));
    s.ring_factory_ = [shared](const FieldSpec& f) { return cohomology_ring(*shared, f); };
    return s;
}

Space Space::presentation(std::string name, GroupPresentation p, AssertionSet a,
                          std::vector<MarkedClassSpec> marked) {
    presentation_chain_complex(p);  // validate early
    Space s;
    s.name_ = std::move(name);
    s.dimension_ = 2;
    s.assertions_ = std::move(a);
    s.marked_ = std::move(marked);
    auto shared = std::make_shared<GroupPresentation>(std::move(p));
    s.ring_factory_ = [shared](const FieldSpec& f) { return presentation_ring(*shared, f); };
    return s;
}

Space Space::raw_algebra(std::string name, int dimension,
                         std::function<std::shared_ptr<const GradedAlgebra>(const FieldSpec&)>
                             ring_factory,
                         AssertionSet a, std::vector<MarkedClassSpec> marked) {
    Space s;
    s.name_ = std::move(name);
    s.dimension_ = dimension;
    s.assertions_ = std::move(a);
    s.marked_ = std::move(marked);
    s.ring_factory_ = std::move(ring_factory);
    return s;
}

Space Space::product(std::string name, std::vector<Space> factors) {
    if (factors.empty()) throw BuildError("product of no spaces");
    if (factors.size() == 1) return factors[0];
    Space s;
    s.name_ = std::move(name);
    s.dimension_ = 0;
    for (const Space& f : factors) s.dimension_ += f.dimension();
    // assertions are not inherited: Z^2 always embeds in pi_1 of a product
    // of non-simply-connected factors; atoroidality is resolved per factor
    // before tensoring.
    s.factors_ = std::move(factors);
    return s;
}

Space Space::bundled(const std::string& name) {
    return Space::simplicial(name, bundled_triangulation(name), AssertionSet{}, {});
}

const std::vector<std::shared_ptr<const GradedAlgebra>>& Space::tensor_chain(
    const FieldSpec& f) const {
    auto it = ring_cache_.find(f.characteristic());
    if (it != ring_cache_.end()) return it->second;
    std::vector<std::shared_ptr<const GradedAlgebra>> chain;
    if (is_product()) {
        chain.push_back(factors_[0].ring(f));
        for (std::size_t i = 1; i < factors_.size(); ++i)
            chain.push_back(GradedAlgebra::tensor(chain.back(), factors_[i].ring(f)));
    } else {
        chain.push_back(ring_factory_(f));
    }
    return ring_cache_.emplace(f.characteristic(), std::move(chain)).first->second;
}

std::shared_ptr<const GradedAlgebra> Space::ring(const FieldSpec& f) const {
    return tensor_chain(f).back();
}

namespace {

AlgebraElement resolve_leaf_class(const MarkedClassSpec& spec,
                                  const std::shared_ptr<const GradedAlgebra>& ring) {
    const FieldSpec& f = ring->field();
    AlgebraElement e(ring);
    if (spec.coordinates.empty()) {  // "generator" shorthand
        if (ring->dim(spec.degree) != 1)
            throw BuildError("marked class '" + spec.name + "': 'generator' needs dim H^" +
                             std::to_string(spec.degree) + " = 1, got " +
                             std::to_string(ring->dim(spec.degree)));
        e.add_term(spec.degree, 0, Scalar::one(f));
        return e;
    }
    if (spec.coordinates.size() != ring->dim(spec.degree))
        throw BuildError("marked class '" + spec.name + "': coordinate count mismatch");
    for (std::size_t i = 0; i < spec.coordinates.size(); ++i)
        e.add_term(spec.degree, i, Scalar::parse(f, spec.coordinates[i]));
    if (e.is_zero()) throw BuildError("marked class '" + spec.name + "' resolves to zero");
    return e;
}

}  // namespace

std::vector<ResolvedClass> Space::marked_classes(const FieldSpec& f) const {
    std::vector<ResolvedClass> out;
    if (!is_product()) {
        auto r = ring(f);
        for (const auto& spec : marked_) {
            ResolvedClass rc;
            rc.name = spec.name;
            rc.degree = spec.degree;
            rc.element = resolve_leaf_class(spec, r);
            rc.source_assertions = assertions_;
            rc.asserted_atoroidal =
                std::find(assertions_.atoroidal_classes.begin(),
                          assertions_.atoroidal_classes.end(),
                          spec.name) != assertions_.atoroidal_classes.end();
            out.push_back(std::move(rc));
        }
        return out;
    }
    const auto& partial = tensor_chain(f);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        for (ResolvedClass rc : factors_[i].marked_classes(f)) {
            AlgebraElement e = rc.element;
            if (i == 0) {
                for (std::size_t k = 1; k < partial.size(); ++k) e = embed_lhs(partial[k], e);
            } else {
                e = embed_rhs(partial[i], e);
                for (std::size_t k = i + 1; k < partial.size(); ++k)
                    e = embed_lhs(partial[k], e);
            }
            rc.element = std::move(e);
            rc.name = rc.name + "_" + std::to_string(i + 1);
            rc.is_pullback = true;
            out.push_back(std::move(rc));
        }
    }
    return out;
}

}  // namespace tccert
