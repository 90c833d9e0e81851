#include "tccert/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tccert {

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<std::vector<int>> facets)
    : n_vertices_(n_vertices) {
    if (n_vertices <= 0) throw std::invalid_argument("complex needs at least one vertex");
    std::vector<std::set<std::vector<int>>> by_dim;
    // every vertex is a face, even if not covered by a facet
    by_dim.resize(1);
    for (int v = 0; v < n_vertices; ++v) by_dim[0].insert({v});
    for (const auto& facet : facets) {
        if (facet.empty()) throw std::invalid_argument("empty facet");
        for (std::size_t i = 0; i < facet.size(); ++i) {
            if (facet[i] < 0 || facet[i] >= n_vertices)
                throw std::invalid_argument("facet vertex out of range");
            if (i > 0 && facet[i] <= facet[i - 1])
                throw std::invalid_argument("facet vertices must be strictly increasing");
        }
        // all nonempty subsets
        std::size_t n = facet.size();
        if (by_dim.size() < n) by_dim.resize(n);
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(facet[i]);
            by_dim[face.size() - 1].insert(std::move(face));
        }
    }
    faces_.resize(by_dim.size());
    index_.resize(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        faces_[d].assign(by_dim[d].begin(), by_dim[d].end());  // set is lex sorted
        for (std::size_t i = 0; i < faces_[d].size(); ++i) index_[d][faces_[d][i]] = i;
    }
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int dim) const {
    static const std::vector<std::vector<int>> empty;
    if (dim < 0 || dim > dimension()) return empty;
    return faces_[dim];
}

std::size_t SimplicialComplex::face_count(int dim) const { return faces(dim).size(); }

long long SimplicialComplex::face_index(const std::vector<int>& verts) const {
    int d = static_cast<int>(verts.size()) - 1;
    if (d < 0 || d > dimension()) return -1;
    auto it = index_[d].find(verts);
    return it == index_[d].end() ? -1 : static_cast<long long>(it->second);
}

ChainComplexData to_chain_complex(const SimplicialComplex& sc) {
    ChainComplexData cc;
    int top = sc.dimension();
    for (int d = 0; d <= top; ++d) cc.dims.push_back(sc.face_count(d));
    cc.labels.resize(top + 1);
    for (int d = 0; d <= top; ++d)
        for (const auto& face : sc.faces(d)) {
            std::string l;
            for (int v : face) l += (l.empty() ? "" : ",") + std::to_string(v);
            cc.labels[d].push_back("(" + l + ")");
        }
    for (int d = 1; d <= top; ++d) {
        IntMatrix b(sc.face_count(d - 1), sc.face_count(d));
        const auto& faces = sc.faces(d);
        for (std::size_t j = 0; j < faces.size(); ++j) {
            for (std::size_t drop = 0; drop < faces[j].size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < faces[j].size(); ++i)
                    if (i != drop) sub.push_back(faces[j][i]);
                long long fi = sc.face_index(sub);
                if (fi < 0) throw std::logic_error("missing face in lattice");
                b.at(fi, j) += (drop % 2 == 0) ? 1 : -1;
            }
        }
        cc.boundaries.push_back(std::move(b));
    }
    validate(cc);
    return cc;
}

Cochain cup(const SimplicialComplex& sc, const Cochain& a, const Cochain& b) {
    if (a.field != b.field) throw FieldError("cup product field mismatch");
    int p = a.degree, q = b.degree;
    if (a.coeffs.size() != sc.face_count(p) || b.coeffs.size() != sc.face_count(q))
        throw std::invalid_argument("cochain length mismatch");
    Cochain out{p + q, a.field, {}};
    if (p + q > sc.dimension()) return out;  // zero cochain of an empty degree
    const auto& faces = sc.faces(p + q);
    out.coeffs.assign(faces.size(), Scalar::zero(a.field));
    for (std::size_t s = 0; s < faces.size(); ++s) {
        std::vector<int> front(faces[s].begin(), faces[s].begin() + p + 1);
        std::vector<int> back(faces[s].begin() + p, faces[s].end());
        long long fi = sc.face_index(front), bi = sc.face_index(back);
        out.coeffs[s] = a.coeffs[fi] * b.coeffs[bi];
    }
    return out;
}

Cochain coboundary(const SimplicialComplex& sc, const Cochain& a) {
    Cochain out{a.degree + 1, a.field, {}};
    if (a.degree + 1 > sc.dimension()) return out;
    const auto& faces = sc.faces(a.degree + 1);
    out.coeffs.assign(faces.size(), Scalar::zero(a.field));
    for (std::size_t s = 0; s < faces.size(); ++s) {
        for (std::size_t drop = 0; drop < faces[s].size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < faces[s].size(); ++i)
                if (i != drop) sub.push_back(faces[s][i]);
            Scalar c = a.coeffs[sc.face_index(sub)];
            out.coeffs[s] += (drop % 2 == 0) ? c : -c;
        }
    }
    return out;
}

std::shared_ptr<const GradedAlgebra> cohomology_ring(const SimplicialComplex& sc,
                                                     const FieldSpec& f) {
    ChainComplexData cc = to_chain_complex(sc);
    int top = sc.dimension();
    std::vector<CohomologyBasis> bases;
    std::vector<std::size_t> dims;
    for (int d = 0; d <= top; ++d) {
        bases.push_back(cohomology(cc, f, d));
        dims.push_back(bases.back().dim());
    }
    if (dims[0] != 1)
        throw std::invalid_argument("cohomology ring requires a connected complex");
    // normalize the unit: H^0 of a connected complex is spanned by the
    // all-ones cocycle, so the single representative projects any cocycle
    // consistently; structure constants below use the actual representatives.
    AlgebraBuilder builder(f, dims);
    for (int d = 1; d <= top; ++d)
        for (std::size_t i = 0; i < dims[d]; ++i)
            builder.set_label(d, i, "h" + std::to_string(d) + "_" + std::to_string(i));
    for (int p = 1; p <= top; ++p)
        for (int q = 1; p + q <= top; ++q)
            for (std::size_t i = 0; i < dims[p]; ++i)
                for (std::size_t j = 0; j < dims[q]; ++j) {
                    Cochain a{p, f, bases[p].representatives()[i]};
                    Cochain b{q, f, bases[q].representatives()[j]};
                    Cochain ab = cup(sc, a, b);
                    auto coords = bases[p + q].project(ab.coeffs);
                    SparseVec v;
                    for (std::size_t k = 0; k < coords.size(); ++k) v.add(k, coords[k]);
                    v.normalize();
                    builder.set_product(p, i, q, j, std::move(v));
                }
    return builder.build();
}

namespace {

// Minimal 7-vertex torus (Moebius-Kantor triangulation).
std::vector<std::vector<int>> torus_facets() {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> t1{i, (i + 1) % 7, (i + 3) % 7};
        std::vector<int> t2{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        out.push_back(t1);
        out.push_back(t2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal 6-vertex real projective plane (antipodal icosahedron quotient).
std::vector<std::vector<int>> rp2_facets() {
    return {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
}

// Genus-2 surface as the connected sum of two copies of the 7-vertex torus:
// remove one triangle from each and identify the boundary triangles.
std::vector<std::vector<int>> genus2_facets() {
    auto base = torus_facets();
    const std::vector<int> glue = base.front();
    // second copy: glued vertices keep their labels, the rest get 7..10
    std::vector<int> relabel(7, -1);
    for (int v : glue) relabel[v] = v;
    int next = 7;
    for (int v = 0; v < 7; ++v)
        if (relabel[v] < 0) relabel[v] = next++;
    std::vector<std::vector<int>> out;
    for (std::size_t copy = 0; copy < 2; ++copy) {
        for (const auto& f : base) {
            if (f == glue) continue;
            std::vector<int> g;
            for (int v : f) g.push_back(copy == 0 ? v : relabel[v]);
            std::sort(g.begin(), g.end());
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SimplicialComplex bundled_triangulation(const std::string& name) {
    if (name == "point") return SimplicialComplex(1, {});
    if (name == "circle") return SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}});
    if (name == "sphere")
        return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "torus") return SimplicialComplex(7, torus_facets());
    if (name == "rp2") return SimplicialComplex(6, rp2_facets());
    if (name == "genus2") return SimplicialComplex(11, genus2_facets());
    throw std::invalid_argument("unknown bundled triangulation: " + name);
}

}  // namespace tccert
