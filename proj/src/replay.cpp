#include "tccert/replay.hpp"

#include "tccert/field.hpp"

#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <vector>

// Deliberately self-contained: re-implements sparse graded multiplication
// and the tensor basis convention from scratch so a bug in the engine's
// algebra code cannot validate its own certificates.

namespace tccert {

using nlohmann::json;

namespace {

struct ReplayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Recursive algebra description: explicit structure-constant table at the
/// leaves, tensor nodes above. Basis of degree d in a tensor node: blocks of
/// lhs-degree p ascending, each block row-major (lhs index major).
struct RAlg {
    FieldSpec field;
    std::vector<std::size_t> dims;
    bool is_tensor = false;
    std::shared_ptr<RAlg> lhs, rhs;
    std::map<std::string, SparseRow> table;
    std::set<std::string> unknown;

    int top() const { return static_cast<int>(dims.size()) - 1; }
    std::size_t dim(int d) const {
        return (d < 0 || d > top()) ? 0 : dims[static_cast<std::size_t>(d)];
    }

    void decode(int d, std::size_t idx, int& p, std::size_t& i, std::size_t& j) const {
        for (p = 0; p <= d; ++p) {
            std::size_t block = lhs->dim(p) * rhs->dim(d - p);
            if (idx < block) {
                i = idx / rhs->dim(d - p);
                j = idx % rhs->dim(d - p);
                return;
            }
            idx -= block;
        }
        throw ReplayError("tensor index out of range");
    }

    std::size_t encode(int p, std::size_t i, int q, std::size_t j) const {
        std::size_t off = 0;
        for (int t = 0; t < p; ++t) off += lhs->dim(t) * rhs->dim(p + q - t);
        return off + i * rhs->dim(q) + j;
    }

    SparseRow mul(int da, std::size_t ia, int db, std::size_t ib) const {
        if (da == 0) return {{ib, Scalar::one(field)}};
        if (db == 0) return {{ia, Scalar::one(field)}};
        if (da + db > top()) return {};
        if (!is_tensor) {
            std::string key = std::to_string(da) + ":" + std::to_string(ia) + "*" +
                              std::to_string(db) + ":" + std::to_string(ib);
            if (unknown.count(key))
                throw ReplayError("witness reads unknown structure constant " + key);
            auto it = table.find(key);
            return it == table.end() ? SparseRow{} : it->second;
        }
        int p1, p2;
        std::size_t i1, j1, i2, j2;
        decode(da, ia, p1, i1, j1);
        decode(db, ib, p2, i2, j2);
        int q1 = da - p1, q2 = db - p2;
        SparseRow left = lhs->mul(p1, i1, p2, i2);
        SparseRow right = rhs->mul(q1, j1, q2, j2);
        bool negate = (q1 % 2 != 0) && (p2 % 2 != 0);
        std::map<std::size_t, Scalar> acc;
        for (const auto& [li, lc] : left)
            for (const auto& [rj, rc] : right) {
                Scalar c = lc * rc;
                if (negate) c = -c;
                std::size_t idx = encode(p1 + p2, li, q1 + q2, rj);
                auto it = acc.find(idx);
                if (it == acc.end())
                    acc.emplace(idx, c);
                else
                    it->second += c;
            }
        SparseRow out;
        for (const auto& [idx, c] : acc)
            if (!c.is_zero()) out.emplace_back(idx, c);
        return out;
    }
};

std::shared_ptr<RAlg> parse_algebra(const json& j, const FieldSpec& f) {
    auto a = std::make_shared<RAlg>();
    a->field = f;
    std::string type = j.at("type").get<std::string>();
    if (type == "tensor") {
        a->is_tensor = true;
        a->lhs = parse_algebra(j.at("lhs"), f);
        a->rhs = parse_algebra(j.at("rhs"), f);
        int top = a->lhs->top() + a->rhs->top();
        a->dims.assign(static_cast<std::size_t>(top) + 1, 0);
        for (int d = 0; d <= top; ++d)
            for (int p = 0; p <= d; ++p)
                a->dims[static_cast<std::size_t>(d)] += a->lhs->dim(p) * a->rhs->dim(d - p);
        return a;
    }
    if (type != "explicit") throw ReplayError("unrecognized algebra node type: " + type);
    a->dims = j.at("dims").get<std::vector<std::size_t>>();
    if (a->dims.empty() || a->dims[0] != 1)
        throw ReplayError("algebra description must be unital");
    for (const auto& [key, val] : j.at("products").items()) {
        SparseRow row;
        for (const auto& entry : val)
            row.emplace_back(entry.at(0).get<std::size_t>(),
                             Scalar::parse(f, entry.at(1).get<std::string>()));
        a->table.emplace(key, std::move(row));
    }
    for (const auto& key : j.at("unknown")) a->unknown.insert(key.get<std::string>());
    return a;
}

// Element of A (x) A: term (p, i, q, j) -> coefficient.
using TTerm = std::tuple<int, std::size_t, int, std::size_t>;
using TElem = std::map<TTerm, Scalar>;

TElem parse_terms(const json& terms, const FieldSpec& f) {
    TElem e;
    for (const auto& t : terms) {
        TTerm key{t.at(0).get<int>(), t.at(1).get<std::size_t>(), t.at(2).get<int>(),
                  t.at(3).get<std::size_t>()};
        Scalar c = Scalar::parse(f, t.at(4).get<std::string>());
        auto it = e.find(key);
        if (it == e.end())
            e.emplace(key, c);
        else
            it->second += c;
    }
    for (auto it = e.begin(); it != e.end();)
        it = it->second.is_zero() ? e.erase(it) : std::next(it);
    return e;
}

TElem mul_outer(const RAlg& a, const TElem& x, const TElem& y) {
    TElem acc;
    for (const auto& [tx, cx] : x)
        for (const auto& [ty, cy] : y) {
            auto [p1, i1, q1, j1] = tx;
            auto [p2, i2, q2, j2] = ty;
            SparseRow left = a.mul(p1, i1, p2, i2);
            SparseRow right = a.mul(q1, j1, q2, j2);
            if (left.empty() || right.empty()) continue;
            Scalar c = cx * cy;
            if (q1 % 2 != 0 && p2 % 2 != 0) c = -c;
            for (const auto& [li, lc] : left)
                for (const auto& [rj, rc] : right) {
                    TTerm key{p1 + p2, li, q1 + q2, rj};
                    Scalar v = c * lc * rc;
                    auto it = acc.find(key);
                    if (it == acc.end())
                        acc.emplace(key, v);
                    else
                        it->second += v;
                }
        }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

void check_witness_step(const json& step, const RAlg& a, const FieldSpec& f,
                        const std::set<std::string>& atoroidal_tagged) {
    std::string rule = step.at("rule").get<std::string>();
    int claimed = step.at("lower").get<int>();
    if (claimed == 0) return;  // nothing to witness
    if (!step.contains("witness"))
        throw ReplayError(rule + " claims lower " + std::to_string(claimed) +
                          " without a witness");
    const json& w = step.at("witness");
    auto validate_terms = [&](const TElem& e) {
        for (const auto& [t, c] : e) {
            (void)c;
            auto [p, i, q, j] = t;
            if (p < 0 || q < 0 || i >= a.dim(p) || j >= a.dim(q))
                throw ReplayError("witness term outside the algebra's graded basis");
        }
    };
    TElem prod;
    prod[{0, 0, 0, 0}] = Scalar::one(f);
    int weight_sum = 0;
    for (const auto& factor : w.at("factors")) {
        int weight = factor.at("weight").get<int>();
        if (weight != 1 && weight != 2) throw ReplayError("factor weight must be 1 or 2");
        std::string label = factor.at("label").get<std::string>();
        if (weight == 2) {
            // soundness gate: weight 2 only for atoroidal-tagged classes
            if (rule != "WEIGHTED_LOWER")
                throw ReplayError("weight-2 factor outside WEIGHTED_LOWER");
            std::string name = label.substr(3, label.size() - 4);  // zd(<name>)
            if (!atoroidal_tagged.count(name))
                throw ReplayError("weight-2 factor '" + name + "' lacks an atoroidal tag");
        }
        weight_sum += weight;
        TElem fe = parse_terms(factor.at("terms"), f);
        validate_terms(fe);
        prod = mul_outer(a, prod, fe);
        if (prod.empty()) throw ReplayError(rule + " witness product vanished mid-way");
    }
    if (prod.empty()) throw ReplayError(rule + " witness product is zero");
    if (weight_sum != claimed)
        throw ReplayError(rule + " claims lower " + std::to_string(claimed) +
                          " but factor weights sum to " + std::to_string(weight_sum));
    TElem stored = parse_terms(w.at("product_terms"), f);
    if (stored != prod)
        throw ReplayError(rule + " stored product does not match re-evaluation");
}

}  // namespace

ReplayResult replay_certificate(const json& cert) {
    try {
        if (cert.at("schema_version").get<int>() != 1)
            throw ReplayError("unsupported schema version");
        FieldSpec f(cert.at("field").at("characteristic").get<std::uint64_t>());
        auto a = parse_algebra(cert.at("algebra"), f);

        int lower = cert.at("lower").get<int>();
        int upper = cert.at("upper").get<int>();
        if (lower > upper) throw ReplayError("lower exceeds upper");
        if (cert.at("exact").get<bool>() != (lower == upper))
            throw ReplayError("exact flag inconsistent with bounds");

        const json& steps = cert.at("steps");

        std::set<std::string> asserted;
        for (const auto& s : steps)
            if (s.at("rule") == "USER_ASSERTION")
                asserted.insert(s.at("assertion").get<std::string>());

        std::set<std::string> atoroidal_tagged;
        int best_lower = 0;
        bool upper_seen = false;
        for (const auto& s : steps) {
            std::string rule = s.at("rule").get<std::string>();
            if (rule == "ATOROIDAL_PROMOTION") {
                for (const auto& h : s.at("hypotheses")) {
                    std::string hyp = h.get<std::string>();
                    // aspherical_space subsumes two_aspherical
                    if (hyp == "two_aspherical" && asserted.count("aspherical_space")) continue;
                    if (!asserted.count(hyp))
                        throw ReplayError("promotion hypothesis '" + hyp +
                                          "' not backed by an assertion step");
                }
                if (f.characteristic() != 0 &&
                    std::find(s.at("hypotheses").begin(), s.at("hypotheses").end(),
                              json("pi1_torsion_free")) == s.at("hypotheses").end())
                    throw ReplayError("positive-characteristic promotion lacks torsion-freeness");
                atoroidal_tagged.insert(s.at("class").get<std::string>());
            } else if (rule == "USER_ASSERTION") {
                std::string as = s.at("assertion").get<std::string>();
                const std::string prefix = "atoroidal_class:";
                if (as.rfind(prefix, 0) == 0) atoroidal_tagged.insert(as.substr(prefix.size()));
                const std::string direct_pre = "class '";
                const std::string direct_suf = "' asserted atoroidal";
                if (as.rfind(direct_pre, 0) == 0 && as.size() > direct_pre.size() + direct_suf.size() &&
                    as.compare(as.size() - direct_suf.size(), direct_suf.size(), direct_suf) == 0)
                    atoroidal_tagged.insert(as.substr(
                        direct_pre.size(), as.size() - direct_pre.size() - direct_suf.size()));
            } else if (rule == "DIM_UPPER") {
                if (s.at("upper").get<int>() != upper)
                    throw ReplayError("DIM_UPPER disagrees with certificate upper bound");
                if (s.at("upper").get<int>() != 2 * s.at("dimension").get<int>())
                    throw ReplayError("DIM_UPPER is not twice the dimension");
                upper_seen = true;
            } else if (rule == "WEIGHTED_LOWER" || rule == "ZD_PRODUCT_LOWER") {
                check_witness_step(s, *a, f, atoroidal_tagged);
                best_lower = std::max(best_lower, s.at("lower").get<int>());
            } else if (rule == "THM_SPECIAL") {
                if (f.characteristic() == 2)
                    throw ReplayError("THM_SPECIAL fired in characteristic 2");
            } else if (rule == "THM_MAIN") {
                unsigned n = s.at("n").get<unsigned>();
                if (f.characteristic() != 0 && f.characteristic() <= 2 * n)
                    throw ReplayError("THM_MAIN fired with 0 < char <= 2n");
            }
        }
        if (!upper_seen) throw ReplayError("no DIM_UPPER step");
        if (best_lower != lower)
            throw ReplayError("certificate lower bound " + std::to_string(lower) +
                              " not justified by steps (best " + std::to_string(best_lower) +
                              ")");
        return {true, ""};
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
}

}  // namespace tccert
