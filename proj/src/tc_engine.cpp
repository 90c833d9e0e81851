#include "tccert/tc_engine.hpp"

#include "tccert/matrix.hpp"

#include <algorithm>

namespace tccert {

using nlohmann::json;

PromotionOutcome promote_atoroidal(const ResolvedClass& c, const FieldSpec& f) {
    PromotionOutcome out;
    if (c.asserted_atoroidal) {
        out.granted = true;
        out.via_user_assertion = true;
        out.hypotheses = {"atoroidal_class:" + c.name};
        return out;
    }
    if (c.degree != 2) {
        out.refusal = "class '" + c.name + "' has degree " + std::to_string(c.degree) +
                      "; the weight-2 route applies to degree-2 classes only";
        return out;
    }
    const AssertionSet& a = c.source_assertions;
    if (!a.effective_two_aspherical()) {
        out.refusal = "class '" + c.name +
                      "' is not known aspherical (two_aspherical not asserted)";
        return out;
    }
    if (!a.pi1_no_Z2) {
        out.refusal = "class '" + c.name + "': pi_1 may contain Z^2 (pi1_no_Z2 not asserted)";
        return out;
    }
    if (!f.is_rational() && !a.pi1_torsion_free) {
        out.refusal = "class '" + c.name +
                      "': positive characteristic requires pi1_torsion_free";
        return out;
    }
    out.granted = true;
    out.hypotheses.push_back(a.aspherical_space ? "aspherical_space" : "two_aspherical");
    out.hypotheses.push_back("pi1_no_Z2");
    if (!f.is_rational()) out.hypotheses.push_back("pi1_torsion_free");
    return out;
}

json describe_algebra(const std::shared_ptr<const GradedAlgebra>& a) {
    json out;
    if (a->is_tensor()) {
        out["type"] = "tensor";
        out["lhs"] = describe_algebra(a->tensor_lhs());
        out["rhs"] = describe_algebra(a->tensor_rhs());
        return out;
    }
    out["type"] = "explicit";
    out["dims"] = a->dims();
    json products = json::object();
    json unknown = json::array();
    int top = a->top_degree();
    for (int da = 1; da <= top; ++da)
        for (int db = 1; da + db <= top; ++db)
            for (std::size_t ia = 0; ia < a->dim(da); ++ia)
                for (std::size_t ib = 0; ib < a->dim(db); ++ib) {
                    std::string key = std::to_string(da) + ":" + std::to_string(ia) + "*" +
                                      std::to_string(db) + ":" + std::to_string(ib);
                    auto p = a->basis_product_opt(da, ia, db, ib);
                    if (!p) {
                        unknown.push_back(key);
                    } else if (!p->empty()) {
                        json val = json::array();
                        for (const auto& [idx, c] : p->entries)
                            val.push_back(json::array({idx, c.str()}));
                        products[key] = std::move(val);
                    }
                }
    out["products"] = std::move(products);
    out["unknown"] = std::move(unknown);
    return out;
}

json tensor_element_terms(const AlgebraElement& x) {
    json terms = json::array();
    const auto& aa = x.algebra();
    for (const auto& [degree, coeffs] : x.components())
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            auto ti = aa->tensor_decode(degree, i);
            terms.push_back(json::array({ti.lhs_degree, ti.lhs_index,
                                         degree - ti.lhs_degree, ti.rhs_index,
                                         coeffs[i].str()}));
        }
    return terms;
}

namespace {

struct WitnessFactor {
    std::string label;  // class name for weight-2 factors, basis label otherwise
    int weight;
    AlgebraElement element;
};

json witness_json(const std::vector<WitnessFactor>& factors, const AlgebraElement& product) {
    json factors_json = json::array();
    for (const auto& f : factors)
        factors_json.push_back(json{{"label", f.label},
                                    {"weight", f.weight},
                                    {"terms", tensor_element_terms(f.element)}});
    return json{{"factors", std::move(factors_json)},
                {"product_terms", tensor_element_terms(product)}};
}

struct ZdCandidate {
    int degree;
    std::size_t index;
    std::string label;
    AlgebraElement zd;
};

std::vector<ZdCandidate> basis_zero_divisors(const std::shared_ptr<const GradedAlgebra>& ring,
                                             const std::shared_ptr<const GradedAlgebra>& aa) {
    std::vector<ZdCandidate> out;
    for (int d = 1; d <= ring->top_degree(); ++d)
        for (std::size_t i = 0; i < ring->dim(d); ++i)
            out.push_back({d, i, ring->label(d, i),
                           zero_divisor(aa, AlgebraElement::basis(ring, d, i))});
    return out;
}

/// Greedy extension of `product` by candidate zero-divisors: repeatedly
/// appends the first candidate (fixed order) keeping the product nonzero,
/// until none extends or the factor-count cap is reached.
struct GreedyResult {
    AlgebraElement product;
    std::vector<WitnessFactor> appended;
    bool cap_hit = false;
};

GreedyResult greedy_extend(AlgebraElement product, std::size_t used_factors, std::size_t cap,
                           const std::vector<ZdCandidate>& candidates) {
    GreedyResult r{std::move(product), {}, false};
    while (true) {
        if (used_factors + r.appended.size() >= cap) {
            r.cap_hit = !candidates.empty();
            return r;
        }
        bool extended = false;
        for (const auto& c : candidates) {
            AlgebraElement next;
            try {
                next = multiply(r.product, c.zd);
            } catch (const UnknownStructureConstant&) {
                continue;
            }
            if (next.is_zero()) continue;
            r.product = std::move(next);
            r.appended.push_back({"zd(" + c.label + ")", 1, c.zd});
            extended = true;
            break;
        }
        if (!extended) return r;
    }
}

void enumerate_exponents(std::size_t m, int total, std::vector<int>& acc,
                         const std::function<bool(const std::vector<int>&)>& visit) {
    // lexicographic, first coordinate largest first; visit returns true to stop
    std::function<bool(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
        if (pos + 1 == m) {
            acc[pos] = remaining;
            return visit(acc);
        }
        for (int a = remaining; a >= 0; --a) {
            acc[pos] = a;
            if (rec(pos + 1, remaining - a)) return true;
        }
        return false;
    };
    if (m > 0) rec(0, total);
}

Scalar int_power(const FieldSpec& f, long long base, unsigned n) {
    Scalar s = Scalar::one(f);
    Scalar b(f, base);
    for (unsigned i = 0; i < n; ++i) s *= b;
    return s;
}

void collect_assertion_steps(const Space& s, json& steps) {
    const AssertionSet& a = s.assertions();
    auto note = [&](const char* flag) {
        auto it = a.notes.find(flag);
        return it == a.notes.end() ? std::string() : it->second;
    };
    auto emit = [&](const char* flag) {
        steps.push_back(json{{"rule", "USER_ASSERTION"},
                             {"scope", s.name()},
                             {"assertion", flag},
                             {"note", note(flag)}});
    };
    if (a.aspherical_space) emit("aspherical_space");
    if (a.two_aspherical) emit("two_aspherical");
    if (a.pi1_no_Z2) emit("pi1_no_Z2");
    if (a.pi1_torsion_free) emit("pi1_torsion_free");
    for (const auto& name : a.atoroidal_classes)
        steps.push_back(json{{"rule", "USER_ASSERTION"},
                             {"scope", s.name()},
                             {"assertion", "atoroidal_class:" + name},
                             {"note", note("atoroidal_classes")}});
    for (const Space& f : s.factors()) collect_assertion_steps(f, steps);
}

void collect_aspherical_steps(const Space& s, json& steps) {
    if (s.assertions().effective_two_aspherical())
        steps.push_back(json{
            {"rule", "ASPHERICAL_FROM_2ASPHERICAL"},
            {"scope", s.name()},
            {"conclusion", "every degree-2 cohomology class of this factor is aspherical"}});
    for (const Space& f : s.factors()) collect_aspherical_steps(f, steps);
}

}  // namespace

Certificate certify(const Space& space, const FieldSpec& f, int depth) {
    int dim = space.dimension();
    std::size_t cap = depth >= 0 ? static_cast<std::size_t>(depth)
                                 : static_cast<std::size_t>(2 * dim);
    int upper = 2 * dim;

    auto ring = space.ring(f);
    auto aa = GradedAlgebra::tensor(ring, ring);
    auto classes = space.marked_classes(f);

    json steps = json::array();
    json refusals = json::array();

    collect_assertion_steps(space, steps);
    collect_aspherical_steps(space, steps);

    // atoroidal promotion per marked class
    struct Marked {
        ResolvedClass cls;
        AlgebraElement zd;
    };
    std::vector<Marked> atoroidal;
    for (const auto& c : classes) {
        PromotionOutcome out = promote_atoroidal(c, f);
        if (!out.granted) {
            refusals.push_back("promotion refused: " + out.refusal);
            continue;
        }
        if (out.via_user_assertion) {
            steps.push_back(json{{"rule", "USER_ASSERTION"},
                                 {"scope", space.name()},
                                 {"assertion", "class '" + c.name + "' asserted atoroidal"},
                                 {"note", ""}});
        } else {
            steps.push_back(json{{"rule", "ATOROIDAL_PROMOTION"},
                                 {"class", c.name},
                                 {"pullback", c.is_pullback},
                                 {"characteristic", f.characteristic()},
                                 {"hypotheses", out.hypotheses}});
        }
        atoroidal.push_back({c, zero_divisor(aa, c.element)});
    }

    steps.push_back(json{{"rule", "DIM_UPPER"}, {"dimension", dim}, {"upper", upper}});

    // weighted atoroidal route
    int weighted_lower = 0;
    bool weighted_cap_hit = false;
    std::vector<int> best_exponents;
    std::vector<WitnessFactor> best_factors;
    AlgebraElement best_product;
    long skipped_unknown = 0, searched = 0;

    if (atoroidal.empty()) {
        refusals.push_back("weighted route unavailable: no atoroidal degree-2 classes");
    } else {
        auto candidates = basis_zero_divisors(ring, aa);
        std::size_t m = atoroidal.size();
        std::vector<int> acc(m, 0);
        bool done = false;
        int max_total = std::min(dim, static_cast<int>(cap));
        bool exponent_truncated = max_total < dim;
        for (int total = max_total; total >= 1 && !done; --total) {
            enumerate_exponents(m, total, acc, [&](const std::vector<int>& exp) {
                ++searched;
                AlgebraElement prod = AlgebraElement::unit(aa);
                std::vector<WitnessFactor> factors;
                try {
                    for (std::size_t i = 0; i < m; ++i)
                        for (int k = 0; k < exp[i]; ++k) {
                            prod = multiply(prod, atoroidal[i].zd);
                            factors.push_back(
                                {"zd(" + atoroidal[i].cls.name + ")", 2, atoroidal[i].zd});
                        }
                } catch (const UnknownStructureConstant&) {
                    ++skipped_unknown;
                    return false;
                }
                if (prod.is_zero()) return false;
                GreedyResult ext = greedy_extend(prod, static_cast<std::size_t>(total), cap,
                                                 candidates);
                int value = 2 * total + static_cast<int>(ext.appended.size());
                if (value > weighted_lower) {
                    weighted_lower = value;
                    weighted_cap_hit = ext.cap_hit;
                    best_exponents = exp;
                    best_factors = factors;
                    best_factors.insert(best_factors.end(), ext.appended.begin(),
                                        ext.appended.end());
                    best_product = ext.product;
                }
                if (weighted_lower >= upper) {
                    done = true;
                    return true;
                }
                return false;
            });
        }
        json step{{"rule", "WEIGHTED_LOWER"},
                  {"lower", weighted_lower},
                  {"depth_cap_hit", weighted_cap_hit || exponent_truncated},
                  {"exponent_vectors_searched", searched},
                  {"skipped_unknown_products", skipped_unknown}};
        if (weighted_lower > 0) {
            json exps = json::object();
            for (std::size_t i = 0; i < m; ++i)
                if (best_exponents[i] > 0) exps[atoroidal[i].cls.name] = best_exponents[i];
            step["exponents"] = std::move(exps);
            step["witness"] = witness_json(best_factors, best_product);
        }
        steps.push_back(std::move(step));
    }

    // named-theorem labeling of an exact weighted bound
    bool thm_fired = false;
    if (weighted_lower == upper && upper > 0 && !best_exponents.empty()) {
        std::size_t extension_count = best_factors.size();
        int exp_total = 0;
        for (int a : best_exponents) exp_total += a;
        bool pure = extension_count == static_cast<std::size_t>(exp_total);

        // u_j^2 = 0 for all j with exponent 2, product of the u_j nonzero
        auto try_special = [&]() -> bool {
            if (!pure || f.characteristic() == 2) return false;
            std::vector<std::size_t> J;
            for (std::size_t i = 0; i < best_exponents.size(); ++i) {
                if (best_exponents[i] == 0) continue;
                if (best_exponents[i] != 2) return false;
                J.push_back(i);
            }
            if (2 * static_cast<int>(J.size()) != dim) return false;
            AlgebraElement w = AlgebraElement::unit(ring);
            try {
                for (std::size_t j : J) {
                    const AlgebraElement& u = atoroidal[j].cls.element;
                    if (!multiply(u, u).is_zero()) return false;
                    w = multiply(w, u);
                }
            } catch (const UnknownStructureConstant&) {
                return false;
            }
            if (w.is_zero()) return false;
            unsigned n = static_cast<unsigned>(J.size());
            AlgebraElement expected =
                multiply(embed_lhs(aa, w), embed_rhs(aa, w)).scaled(int_power(f, -2, n));
            bool formula_ok = bidegree_component(best_product, dim, dim) ==
                              bidegree_component(expected, dim, dim);
            json names = json::array();
            for (std::size_t j : J) names.push_back(atoroidal[j].cls.name);
            steps.push_back(json{{"rule", "THM_SPECIAL"},
                                 {"n", n},
                                 {"classes", std::move(names)},
                                 {"product_formula_checked", formula_ok},
                                 {"conclusion", "TC = 2 dim = " + std::to_string(upper)}});
            return true;
        };
        auto try_main = [&]() -> bool {
            if (!pure || dim % 2 != 0) return false;
            if (f.characteristic() != 0 &&
                f.characteristic() <= static_cast<std::uint64_t>(dim))
                return false;
            std::size_t which = best_exponents.size();
            for (std::size_t i = 0; i < best_exponents.size(); ++i) {
                if (best_exponents[i] == 0) continue;
                if (which != best_exponents.size()) return false;
                which = i;
            }
            if (which == best_exponents.size() || best_exponents[which] != dim) return false;
            unsigned n = static_cast<unsigned>(dim / 2);
            AlgebraElement un;
            try {
                un = power(atoroidal[which].cls.element, n);
            } catch (const UnknownStructureConstant&) {
                return false;
            }
            if (un.is_zero()) return false;
            Scalar coeff = binomial_in_field(dim, n, f);
            if (n % 2 == 1) coeff = -coeff;
            AlgebraElement expected =
                multiply(embed_lhs(aa, un), embed_rhs(aa, un)).scaled(coeff);
            bool formula_ok = bidegree_component(best_product, dim, dim) ==
                              bidegree_component(expected, dim, dim);
            steps.push_back(json{{"rule", "THM_MAIN"},
                                 {"n", n},
                                 {"class", atoroidal[which].cls.name},
                                 {"component_formula_checked", formula_ok},
                                 {"conclusion", "TC = 2 dim = " + std::to_string(upper)}});
            return true;
        };
        thm_fired = try_special() || try_main();
    }
    if (!thm_fired && !atoroidal.empty()) {
        if (f.characteristic() == 2)
            refusals.push_back("THM_SPECIAL not applicable: characteristic(F) = 2");
        if (f.characteristic() != 0 && f.characteristic() <= static_cast<std::uint64_t>(dim))
            refusals.push_back("THM_MAIN not applicable: 0 < characteristic(F) <= 2n");
    }

    // plain zero-divisor cup-length route
    auto zd_candidates = basis_zero_divisors(ring, aa);
    GreedyResult zd = greedy_extend(AlgebraElement::unit(aa), 0, cap, zd_candidates);
    int zd_lower = static_cast<int>(zd.appended.size());
    json zd_step{{"rule", "ZD_PRODUCT_LOWER"},
                 {"lower", zd_lower},
                 {"depth_cap_hit", zd.cap_hit}};
    if (zd_lower > 0) zd_step["witness"] = witness_json(zd.appended, zd.product);
    steps.push_back(std::move(zd_step));

    Certificate cert;
    cert.lower = std::max(weighted_lower, zd_lower);
    cert.upper = upper;
    cert.exact = cert.lower == cert.upper;
    cert.doc = json{{"schema_version", 1},
                    {"space", space.name()},
                    {"field", json{{"characteristic", f.characteristic()}}},
                    {"lower", cert.lower},
                    {"upper", cert.upper},
                    {"exact", cert.exact},
                    {"algebra", describe_algebra(ring)},
                    {"steps", std::move(steps)},
                    {"refusals", std::move(refusals)}};
    return cert;
}

}  // namespace tccert
