#include "doctest.h"

#include "tccert/simplicial.hpp"

#include <random>

using namespace tccert;

namespace {

Cochain random_cochain(const SimplicialComplex& sc, int degree, const FieldSpec& f,
                       std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    Cochain c{degree, f, std::vector<Scalar>(sc.face_count(degree), Scalar::zero(f))};
    for (auto& s : c.coeffs) s = Scalar(f, dist(rng));
    return c;
}

Cochain unit_cocycle(const SimplicialComplex& sc, const FieldSpec& f) {
    return Cochain{0, f, std::vector<Scalar>(sc.face_count(0), Scalar::one(f))};
}

bool cochain_equal(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != b.coeffs[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("face lattice of a single triangle") {
    SimplicialComplex tri(3, {{0, 1, 2}});
    auto cc = to_chain_complex(tri);
    CHECK(cc.dims == std::vector<std::size_t>{3, 3, 1});
    CHECK_THROWS(SimplicialComplex(3, {{1, 0}}));  // not strictly increasing
    CHECK_THROWS(SimplicialComplex(2, {{0, 5}}));  // vertex out of range
}

TEST_CASE("bundled triangulation shapes") {
    auto torus = to_chain_complex(bundled_triangulation("torus"));
    CHECK(torus.dims == std::vector<std::size_t>{7, 21, 14});
    CHECK(euler_characteristic(torus) == 0);

    auto sphere = to_chain_complex(bundled_triangulation("sphere"));
    CHECK(euler_characteristic(sphere) == 2);

    auto genus2 = to_chain_complex(bundled_triangulation("genus2"));
    CHECK(euler_characteristic(genus2) == -2);
    CHECK(betti_profile(genus2, FieldSpec::rationals()) == std::vector<std::size_t>{1, 4, 1});

    CHECK_THROWS(bundled_triangulation("nonexistent"));
}

TEST_CASE("bundled surfaces are closed: every edge lies in exactly two triangles") {
    for (const char* name : {"torus", "rp2", "genus2", "sphere"}) {
        auto sc = bundled_triangulation(name);
        for (const auto& edge : sc.faces(1)) {
            int count = 0;
            for (const auto& tri : sc.faces(2)) {
                int found = 0;
                for (int v : edge)
                    for (int w : tri)
                        if (v == w) ++found;
                if (found == 2) ++count;
            }
            CHECK(count == 2);
        }
    }
}

TEST_CASE("cup product unit law") {
    auto sc = bundled_triangulation("torus");
    FieldSpec q = FieldSpec::rationals();
    std::mt19937 rng(42);
    for (int degree = 0; degree <= 2; ++degree) {
        Cochain a = random_cochain(sc, degree, q, rng);
        CHECK(cochain_equal(cup(sc, a, unit_cocycle(sc, q)), a));
        CHECK(cochain_equal(cup(sc, unit_cocycle(sc, q), a), a));
    }
}

TEST_CASE("cup product Leibniz rule on random cochains") {
    auto sc = bundled_triangulation("torus");
    std::mt19937 rng(7);
    for (auto chr : {0ull, 3ull}) {
        FieldSpec f(chr);
        for (int trial = 0; trial < 5; ++trial) {
            Cochain a = random_cochain(sc, 1, f, rng);
            Cochain b = random_cochain(sc, 1, f, rng);
            Cochain lhs = coboundary(sc, cup(sc, a, b));
            Cochain r1 = cup(sc, coboundary(sc, a), b);
            Cochain r2 = cup(sc, a, coboundary(sc, b));
            // p = 1 so the sign is -1
            REQUIRE(lhs.coeffs.size() == r1.coeffs.size());
            for (std::size_t i = 0; i < lhs.coeffs.size(); ++i)
                CHECK(lhs.coeffs[i] == r1.coeffs[i] - r2.coeffs[i]);
        }
    }
}

TEST_CASE("cochain-level associativity is exact") {
    auto sc = bundled_triangulation("genus2");
    FieldSpec f = FieldSpec::prime(5);
    std::mt19937 rng(99);
    Cochain a = random_cochain(sc, 1, f, rng);
    Cochain b = random_cochain(sc, 0, f, rng);
    Cochain c = random_cochain(sc, 1, f, rng);
    CHECK(cochain_equal(cup(sc, cup(sc, a, b), c), cup(sc, a, cup(sc, b, c))));
}

TEST_CASE("circle ring has trivial positive products") {
    auto ring = cohomology_ring(bundled_triangulation("circle"), FieldSpec::rationals());
    CHECK(ring->dims() == std::vector<std::size_t>{1, 1});
    CHECK(ring->basis_product(1, 0, 1, 0).empty());
}

TEST_CASE("torus ring is the exterior algebra on two degree-1 classes") {
    FieldSpec q = FieldSpec::rationals();
    auto ring = cohomology_ring(bundled_triangulation("torus"), q);
    REQUIRE(ring->dims() == std::vector<std::size_t>{1, 2, 1});
    CHECK(ring->basis_product(1, 0, 1, 0).empty());  // a^2 = 0
    CHECK(ring->basis_product(1, 1, 1, 1).empty());  // b^2 = 0
    auto ab = ring->basis_product(1, 0, 1, 1);
    auto ba = ring->basis_product(1, 1, 1, 0);
    REQUIRE(ab.entries.size() == 1);
    REQUIRE(ba.entries.size() == 1);
    CHECK(ab.entries[0].second == -ba.entries[0].second);  // graded commutativity
}

TEST_CASE("torus H1 products pair nontrivially with the fundamental cycle") {
    auto sc = bundled_triangulation("torus");
    FieldSpec q = FieldSpec::rationals();
    auto cc = to_chain_complex(sc);
    auto h1 = cohomology(cc, q, 1);
    REQUIRE(h1.dim() == 2);
    // fundamental 2-cycle: kernel of d_2 over Q is 1-dimensional
    auto cycles = kernel_basis(cc.boundaries[1].over(q));
    REQUIRE(cycles.size() == 1);
    Cochain a{1, q, h1.representatives()[0]};
    Cochain b{1, q, h1.representatives()[1]};
    auto pair_with_cycle = [&](const Cochain& c) {
        Scalar acc = Scalar::zero(q);
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) acc += c.coeffs[i] * cycles[0][i];
        return acc;
    };
    CHECK(!pair_with_cycle(cup(sc, a, b)).is_zero());
    // [a cup a] and [b cup b] vanish in H^2
    auto h2 = cohomology(cc, q, 2);
    for (const Cochain& c : {cup(sc, a, a), cup(sc, b, b)})
        for (const Scalar& s : h2.project(c.coeffs)) CHECK(s.is_zero());
}

TEST_CASE("rp2 ring over F2 has a degree-1 class with nonzero square") {
    auto ring = cohomology_ring(bundled_triangulation("rp2"), FieldSpec::prime(2));
    REQUIRE(ring->dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(!ring->basis_product(1, 0, 1, 0).empty());  // w^2 != 0
}

TEST_CASE("graded commutativity holds on cohomology for random surfaces") {
    for (const char* name : {"torus", "genus2"}) {
        auto sc = bundled_triangulation(name);
        FieldSpec f = FieldSpec::prime(7);
        auto ring = cohomology_ring(sc, f);
        for (std::size_t i = 0; i < ring->dim(1); ++i)
            for (std::size_t j = 0; j < ring->dim(1); ++j) {
                auto xy = ring->basis_product(1, i, 1, j);
                auto yx = ring->basis_product(1, j, 1, i);
                REQUIRE(xy.entries.size() == yx.entries.size());
                for (std::size_t k = 0; k < xy.entries.size(); ++k) {
                    CHECK(xy.entries[k].first == yx.entries[k].first);
                    CHECK(xy.entries[k].second == -yx.entries[k].second);
                }
            }
    }
}
