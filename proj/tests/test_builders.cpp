#include "doctest.h"

#include "tccert/builders.hpp"

using namespace tccert;

namespace {

GroupPresentation genus2_presentation() {
    return {{"a", "b", "c", "d"}, {"abABcdCD"}};
}

Space genus2_space(const std::string& name = "g2") {
    AssertionSet a;
    a.two_aspherical = a.pi1_no_Z2 = a.pi1_torsion_free = true;
    return Space::presentation(name, genus2_presentation(), a, {{"u", 2, {}}});
}

std::string invert_word(const std::string& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(std::isupper(static_cast<unsigned char>(*it))
                          ? static_cast<char>(std::tolower(static_cast<unsigned char>(*it)))
                          : static_cast<char>(std::toupper(static_cast<unsigned char>(*it))));
    return out;
}

}  // namespace

TEST_CASE("exponent sums, including inverse letters") {
    GroupPresentation p{{"a", "b"}, {}};
    CHECK(p.exponent_sums("aaaaabbbbb") == std::vector<long long>{5, 5});
    CHECK(p.exponent_sums("abAB") == std::vector<long long>{0, 0});
    CHECK(p.exponent_sums("aBBB") == std::vector<long long>{1, -3});
    CHECK_THROWS_AS(p.exponent_sums("abc"), BuildError);
}

TEST_CASE("exponent sums of a word and its inverse negate") {
    GroupPresentation p{{"a", "b", "c"}, {}};
    for (const std::string w : {"abcABC", "aaBc", "Cab", "aAbB"}) {
        auto s = p.exponent_sums(w);
        auto si = p.exponent_sums(invert_word(w));
        REQUIRE(s.size() == si.size());
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == -si[i]);
    }
}

TEST_CASE("presentation chain complex shape") {
    auto cc = presentation_chain_complex(genus2_presentation());
    CHECK(cc.dims == std::vector<std::size_t>{1, 4, 1});
    for (std::size_t g = 0; g < 4; ++g) CHECK(cc.boundaries[1].at(g, 0) == 0);

    auto free_group = presentation_chain_complex({{"a"}, {}});
    CHECK(free_group.dims == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("presentation ring dimensions over various fields") {
    auto g2_q = presentation_ring(genus2_presentation(), FieldSpec::rationals());
    CHECK(g2_q->dims() == std::vector<std::size_t>{1, 4, 1});

    GroupPresentation a5b5{{"a", "b"}, {"aaaaabbbbb"}};
    auto r_q = presentation_ring(a5b5, FieldSpec::rationals());
    CHECK(r_q->dim(1) == 1);
    CHECK(r_q->dim(2) == 0);  // exponent sums (5,5) have full rank over Q
    auto r_5 = presentation_ring(a5b5, FieldSpec::prime(5));
    CHECK(r_5->dim(1) == 2);
    CHECK(r_5->dim(2) == 1);  // boundary vanishes mod 5
    auto r_3 = presentation_ring(a5b5, FieldSpec::prime(3));
    CHECK(r_3->dim(2) == 0);
}

TEST_CASE("presentation H1 products are unknown, H2 pairings known") {
    auto r = presentation_ring(genus2_presentation(), FieldSpec::rationals());
    CHECK(!r->basis_product_opt(1, 0, 1, 1).has_value());
    AlgebraElement u = AlgebraElement::basis(r, 2, 0);
    CHECK(multiply(u, u).is_zero());  // degree 4 > 2, forced
}

TEST_CASE("marked class resolution") {
    FieldSpec q = FieldSpec::rationals();
    auto s = genus2_space();
    auto classes = s.marked_classes(q);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].name == "u");
    CHECK(classes[0].degree == 2);
    CHECK(!classes[0].element.is_zero());
    CHECK(!classes[0].is_pullback);
    CHECK(classes[0].source_assertions.pi1_no_Z2);

    // "generator" shorthand needs a one-dimensional degree
    AssertionSet a;
    Space bad = Space::presentation("bad", genus2_presentation(), a, {{"w", 1, {}}});
    CHECK_THROWS_AS((void)bad.marked_classes(q), BuildError);

    // explicit coordinates must match the basis size and be nonzero
    Space wrong_len =
        Space::presentation("w", genus2_presentation(), a, {{"x", 1, {"1", "0"}}});
    CHECK_THROWS_AS((void)wrong_len.marked_classes(q), BuildError);
    Space zero =
        Space::presentation("z", genus2_presentation(), a, {{"x", 1, {"0", "0", "0", "0"}}});
    CHECK_THROWS_AS((void)zero.marked_classes(q), BuildError);
    Space coords =
        Space::presentation("c", genus2_presentation(), a, {{"x", 1, {"1", "0", "2", "0"}}});
    auto got = coords.marked_classes(q);
    REQUIRE(got.size() == 1);
    CHECK(got[0].element.coeff(1, 2) == Scalar(q, 2));
}

TEST_CASE("products: dimension, ring dims, pullback classes") {
    FieldSpec q = FieldSpec::rationals();
    Space p = Space::product("p2", {genus2_space("g2a"), genus2_space("g2b")});
    CHECK(p.dimension() == 4);
    auto r = p.ring(q);
    CHECK(r->dims() == std::vector<std::size_t>{1, 8, 18, 8, 1});

    auto classes = p.marked_classes(q);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].name == "u_1");
    CHECK(classes[1].name == "u_2");
    CHECK(classes[0].is_pullback);
    // pullbacks multiply to something nonzero even though factor H1
    // products stay unknown
    AlgebraElement u1u2 = multiply(classes[0].element, classes[1].element);
    CHECK(!u1u2.is_zero());
    CHECK(multiply(classes[0].element, classes[0].element).is_zero());

    // the product space itself inherits no pi1 assertions
    CHECK(!p.assertions().pi1_no_Z2);
    CHECK(classes[0].source_assertions.pi1_no_Z2);  // factor-level survives
}

TEST_CASE("product of one space is that space") {
    Space s = genus2_space();
    Space p = Space::product("ignored", {s});
    CHECK(p.name() == s.name());
    CHECK(p.dimension() == 2);
    CHECK(!p.is_product());
}

TEST_CASE("Euler characteristic is multiplicative across products") {
    FieldSpec f = FieldSpec::prime(7);
    Space g2 = genus2_space();
    auto euler = [&](const Space& s) {
        long long chi = 0;
        auto r = s.ring(f);
        for (int d = 0; d <= r->top_degree(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r->dim(d));
        return chi;
    };
    long long chi1 = euler(g2);
    CHECK(chi1 == -2);
    Space p2 = Space::product("p2", {genus2_space("a"), genus2_space("b")});
    CHECK(euler(p2) == chi1 * chi1);
    Space p3 = Space::product("p3", {genus2_space("a"), genus2_space("b"), genus2_space("c")});
    CHECK(euler(p3) == chi1 * chi1 * chi1);
}

TEST_CASE("bundled spaces and errors") {
    Space t = Space::bundled("torus");
    CHECK(t.dimension() == 2);
    CHECK(t.ring(FieldSpec::rationals())->dims() == std::vector<std::size_t>{1, 2, 1});
    CHECK_THROWS(Space::bundled("nonexistent"));
    CHECK_THROWS(Space::product("empty", {}));
}

TEST_CASE("ring cache returns the same instance per characteristic") {
    Space s = genus2_space();
    FieldSpec q = FieldSpec::rationals();
    CHECK(s.ring(q).get() == s.ring(q).get());
    CHECK(s.ring(q).get() != s.ring(FieldSpec::prime(3)).get());
}
