#include "tccert/core_verify.hpp"

#include "tccert/matrix.hpp"

#include <sstream>

namespace tccert {

void FormalChain::add(const std::vector<PrismVertex>& simplex, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(simplex);
    if (it == terms_.end()) {
        terms_[simplex] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalChain FormalChain::boundary() const {
    FormalChain out;
    for (const auto& [simplex, coeff] : terms_) {
        for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
            std::vector<PrismVertex> face;
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != drop) face.push_back(simplex[i]);
            out.add(face, (drop % 2 == 0 ? 1 : -1) * coeff);
        }
    }
    return out;
}

FormalChain FormalChain::operator+(const FormalChain& o) const {
    FormalChain r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, c);
    return r;
}

FormalChain FormalChain::operator-(const FormalChain& o) const {
    FormalChain r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
}

std::string FormalChain::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " ";
        first = false;
        os << (c >= 0 ? "+" : "") << c << "*[";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? "," : "") << "(" << s[i].first << "," << s[i].second << ")";
        os << "]";
    }
    return first ? "0" : os.str();
}

std::vector<std::vector<PrismVertex>> prism_simplices(int k) {
    if (k < 0) throw std::invalid_argument("prism dimension must be >= 0");
    std::vector<std::vector<PrismVertex>> out;
    for (int j = 0; j <= k; ++j) {
        std::vector<PrismVertex> s;
        for (int i = 0; i <= j; ++i) s.emplace_back(i, 0);
        for (int i = j; i <= k; ++i) s.emplace_back(i, 1);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// P applied to the face of Delta_k with the given (increasing) vertex
// labels: same prism formula on the sub-vertex-list.
FormalChain prism_of_face(const std::vector<int>& verts) {
    FormalChain out;
    int k = static_cast<int>(verts.size()) - 1;
    for (int j = 0; j <= k; ++j) {
        std::vector<PrismVertex> s;
        for (int i = 0; i <= j; ++i) s.emplace_back(verts[i], 0);
        for (int i = j; i <= k; ++i) s.emplace_back(verts[i], 1);
        out.add(s, j % 2 == 0 ? 1 : -1);
    }
    return out;
}

}  // namespace

PrismReport verify_prism_identity(int k) {
    std::vector<int> all;
    for (int i = 0; i <= k; ++i) all.push_back(i);

    FormalChain dP = prism_of_face(all).boundary();

    FormalChain PdD;  // P(d Delta_k)
    for (int drop = 0; drop <= k; ++drop) {
        if (k == 0) break;  // d Delta_0 = 0
        std::vector<int> face;
        for (int i = 0; i <= k; ++i)
            if (i != drop) face.push_back(i);
        FormalChain pf = prism_of_face(face);
        FormalChain signed_pf;
        for (const auto& [s, c] : pf.terms()) signed_pf.add(s, (drop % 2 == 0 ? 1 : -1) * c);
        PdD = PdD + signed_pf;
    }

    FormalChain expected;
    std::vector<PrismVertex> top, bottom;
    for (int i = 0; i <= k; ++i) {
        top.emplace_back(i, 1);
        bottom.emplace_back(i, 0);
    }
    expected.add(top, 1);
    expected.add(bottom, -1);

    FormalChain residual = dP + PdD - expected;
    if (residual.is_zero()) return {true, ""};
    return {false, "uncancelled terms: " + residual.str()};
}

PrismReport verify_prism_volumes(int k) {
    // embed Delta_k x [0,1] in Q^{k+1}: vertex (v_i, l) = (e_i, l) with e_0 = 0
    FieldSpec q = FieldSpec::rationals();
    auto coords = [&](const PrismVertex& v) {
        std::vector<BigRational> x(k + 1, BigRational(0));
        if (v.first > 0) x[v.first - 1] = 1;
        x[k] = v.second;
        return x;
    };
    auto det_of = [&](const std::vector<PrismVertex>& simplex) {
        // determinant of edge vectors from vertex 0; (k+1)x(k+1)
        Matrix m(q, k + 1, k + 1);
        auto base = coords(simplex[0]);
        for (int c = 0; c < k + 1; ++c) {
            auto pt = coords(simplex[c + 1]);
            for (int r = 0; r < k + 1; ++r) m.at(r, c) = Scalar(q, pt[r] - base[r]);
        }
        // exact determinant by fraction-free expansion is overkill; use
        // elimination with pivot tracking
        BigRational det(1);
        std::size_t n = k + 1;
        for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
            std::size_t sel = n;
            for (std::size_t r = row; r < n; ++r)
                if (!m.at(r, col).is_zero()) {
                    sel = r;
                    break;
                }
            if (sel == n) return BigRational(0);
            if (sel != row) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(row, j));
                det = -det;
            }
            det *= m.at(row, col).rational_value();
            Scalar inv = m.at(row, col).inverse();
            for (std::size_t j = col; j < n; ++j) m.at(row, j) *= inv;
            for (std::size_t r = row + 1; r < n; ++r) {
                Scalar f = m.at(r, col);
                if (f.is_zero()) continue;
                for (std::size_t j = col; j < n; ++j) m.at(r, j) -= f * m.at(row, j);
            }
            ++row;
        }
        return det;
    };

    auto simplices = prism_simplices(k);
    BigInt factorial_k1 = 1;
    for (int i = 2; i <= k + 1; ++i) factorial_k1 *= i;
    BigRational total(0);
    std::vector<BigRational> volumes;
    for (const auto& s : simplices) {
        BigRational v = abs(det_of(s)) / BigRational(factorial_k1);
        if (v.is_zero()) return {false, "degenerate prism simplex"};
        volumes.push_back(v);
        total += v;
    }
    BigInt factorial_k = 1;
    for (int i = 2; i <= k; ++i) factorial_k *= i;
    if (total != BigRational(1) / BigRational(factorial_k))
        return {false, "volumes do not sum to vol(prism)"};

    // barycenter of each simplex must lie in no other simplex (interiors
    // are pairwise disjoint)
    auto barycentric_inside = [&](const std::vector<PrismVertex>& simplex,
                                  const std::vector<BigRational>& pt) {
        // solve sum lambda_i vertex_i = pt, sum lambda_i = 1, all >= 0
        std::size_t n = k + 1;
        Matrix m(q, n + 1, simplex.size() + 1);
        for (std::size_t c = 0; c < simplex.size(); ++c) {
            auto v = coords(simplex[c]);
            for (std::size_t r = 0; r < n; ++r) m.at(r, c) = Scalar(q, v[r]);
            m.at(n, c) = Scalar::one(q);
        }
        for (std::size_t r = 0; r < n; ++r) m.at(r, simplex.size()) = Scalar(q, pt[r]);
        m.at(n, simplex.size()) = Scalar::one(q);
        auto ef = reduce_echelon(m);
        for (std::size_t p : ef.pivots)
            if (p == simplex.size()) return false;  // inconsistent
        std::vector<BigRational> lambda(simplex.size(), BigRational(0));
        for (std::size_t pr = 0; pr < ef.pivots.size(); ++pr)
            lambda[ef.pivots[pr]] = ef.rref.at(pr, simplex.size()).rational_value();
        for (const auto& l : lambda)
            if (l < 0) return false;
        return true;
    };
    for (std::size_t a = 0; a < simplices.size(); ++a) {
        std::vector<BigRational> bary(k + 1, BigRational(0));
        for (const auto& v : simplices[a]) {
            auto c = coords(v);
            for (int i = 0; i <= k; ++i) bary[i] += c[i];
        }
        for (auto& b : bary) b /= BigRational(static_cast<long long>(simplices[a].size()));
        for (std::size_t b = 0; b < simplices.size(); ++b) {
            if (a == b) continue;
            if (barycentric_inside(simplices[b], bary))
                return {false, "prism simplices " + std::to_string(a) + " and " +
                                   std::to_string(b) + " overlap"};
        }
    }
    return {true, ""};
}

bool AffineSimplexInTorus::operator==(const AffineSimplexInTorus& o) const {
    if (edges != o.edges) return false;
    for (int i = 0; i < 2; ++i) {
        BigRational diff = base[i] - o.base[i];
        if (denominator(diff) != 1) return false;  // not congruent mod Z
    }
    return true;
}

bool AffineSimplexInTorus::operator<(const AffineSimplexInTorus& o) const {
    auto frac = [](const BigRational& x) {
        BigInt n = numerator(x), d = denominator(x);
        BigInt f = n % d;
        if (f < 0) f += d;
        return BigRational(f, d);
    };
    std::vector<BigRational> a{frac(base[0]), frac(base[1])}, b{frac(o.base[0]), frac(o.base[1])};
    if (a != b) return a < b;
    return edges < o.edges;
}

TorusChain torus_cycle(int inject_sign_fault_at) {
    // vertex table, columns (j,k) = (1,0),(1,1),(2,0),(2,1)
    using P = std::vector<BigRational>;
    auto half = BigRational(1, 2);
    std::vector<std::array<P, 3>> verts = {
        {P{0, 0}, P{0, half}, P{1, half}},  // (1,0)
        {P{0, 0}, P{1, 0}, P{1, half}},     // (1,1)
        {P{0, 1}, P{0, half}, P{1, half}},  // (2,0)
        {P{0, 1}, P{1, 1}, P{1, half}},     // (2,1)
    };
    std::vector<long long> signs = {1, -1, -1, 1};  // (-1)^{j+1+k}
    TorusChain tau;
    for (int t = 0; t < 4; ++t) {
        AffineSimplexInTorus s;
        s.base = verts[t][0];
        s.edges = {{verts[t][1][0] - verts[t][0][0], verts[t][1][1] - verts[t][0][1]},
                   {verts[t][2][0] - verts[t][0][0], verts[t][2][1] - verts[t][0][1]}};
        long long c = signs[t];
        if (t == inject_sign_fault_at) c = -c;
        tau.terms.emplace_back(std::move(s), c);
    }
    return tau;
}

TorusReport verify_torus_cycle(const TorusChain& tau) {
    // boundary as formal sum of affine 1-simplices with mod-Z^2 equality
    std::map<AffineSimplexInTorus, long long> faces;
    auto add_face = [&](AffineSimplexInTorus f, long long c) {
        auto it = faces.find(f);
        if (it == faces.end()) {
            if (c != 0) faces[f] = c;
        } else {
            it->second += c;
            if (it->second == 0) faces.erase(it);
        }
    };
    BigRational degree(0);
    for (const auto& [s, c] : tau.terms) {
        // vertices: p0 = base, p1 = base+e0, p2 = base+e1
        std::vector<std::vector<BigRational>> pts = {
            s.base,
            {s.base[0] + s.edges[0][0], s.base[1] + s.edges[0][1]},
            {s.base[0] + s.edges[1][0], s.base[1] + s.edges[1][1]}};
        for (int drop = 0; drop < 3; ++drop) {
            std::vector<int> keep;
            for (int i = 0; i < 3; ++i)
                if (i != drop) keep.push_back(i);
            AffineSimplexInTorus f;
            f.base = pts[keep[0]];
            f.edges = {{pts[keep[1]][0] - pts[keep[0]][0], pts[keep[1]][1] - pts[keep[0]][1]}};
            add_face(std::move(f), (drop % 2 == 0 ? 1 : -1) * c);
        }
        // signed area: det(e0, e1) / 2
        BigRational det = s.edges[0][0] * s.edges[1][1] - s.edges[0][1] * s.edges[1][0];
        degree += BigRational(c) * det / 2;
    }
    if (!faces.empty()) {
        std::string d = "uncancelled boundary faces: " + std::to_string(faces.size());
        return {false, degree, d};
    }
    return {true, degree, ""};
}

}  // namespace tccert
