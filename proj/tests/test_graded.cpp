#include <doctest.h>

#include "dgalg/graded.hpp"

using namespace dgalg;

TEST_CASE("window parsing and arithmetic") {
    Window w = Window::parse("-3:12");
    CHECK(w.lo == -3);
    CHECK(w.hi == 12);
    CHECK(w.contains(0));
    CHECK(!w.contains(13));
    CHECK(Window::all().covers(w));
    CHECK(w.intersect(Window{0, 20}) == Window::span(0, 12));
    CHECK(w.shrink(1, 1) == Window::span(-2, 11));
    CHECK_THROWS_AS(Window::parse("5:1"), InputError);
    CHECK_THROWS_AS(Window::parse("abc"), InputError);
}

namespace {
// 0 -> k^2 --d--> k -> 0 in degrees 0, 1 with d(e0) = f, d(e1) = 2f
CochainComplex two_one() {
    Field q = Field::rationals();
    GradedVectorSpace sp(q, Window::all());
    sp.add_basis_element(0, "e0");
    sp.add_basis_element(0, "e1");
    sp.add_basis_element(1, "f");
    GradedMap d(sp, sp, 1);
    d.add_entry(0, 0, 0, Scalar(q, 1));
    d.add_entry(0, 1, 0, Scalar(q, 2));
    return CochainComplex(sp, d);
}
}  // namespace

TEST_CASE("cohomology of a small complex") {
    CochainComplex c = two_one();
    auto h = cohomology(c, Window{-1, 2});
    REQUIRE(h.size() == 4);
    CHECK(h[0].dimension == 0);  // degree -1
    CHECK(h[1].dimension == 1);  // degree 0: ker is spanned by 2e0 - e1
    CHECK(h[2].dimension == 0);  // degree 1: f is a coboundary
    CHECK(h[3].dimension == 0);
    // the representative is a cocycle
    REQUIRE(h[1].representatives.size() == 1);
    CHECK(c.d().block(0).apply(h[1].representatives[0]).empty());
}

TEST_CASE("d^2 != 0 is rejected at construction") {
    Field q = Field::rationals();
    GradedVectorSpace sp(q, Window::all());
    sp.add_basis_element(0, "a");
    sp.add_basis_element(1, "b");
    sp.add_basis_element(2, "c");
    GradedMap d(sp, sp, 1);
    d.add_entry(0, 0, 0, Scalar(q, 1));
    d.add_entry(1, 0, 0, Scalar(q, 1));
    CHECK_THROWS_AS(CochainComplex(sp, d), InputError);
}

TEST_CASE("cohomology refuses an untrusted boundary") {
    Field q = Field::rationals();
    GradedVectorSpace sp(q, Window{0, 3});
    sp.add_basis_element(1, "a");
    GradedMap d(sp, sp, 1);
    CochainComplex c(sp, d);
    CHECK_THROWS_AS(cohomology(c, Window{0, 3}), InsufficientTruncation);
    CHECK_NOTHROW(cohomology(c, Window{1, 2}));
}

TEST_CASE("tensor product multiplies dimensions and Euler characteristics") {
    CochainComplex a = two_one();
    CochainComplex t = tensor(a, a);
    CHECK(t.space().dim(0) == 4);
    CHECK(t.space().dim(1) == 4);
    CHECK(t.space().dim(2) == 1);
    auto h = cohomology(t, Window{-1, 3});
    int euler_h = 0, euler_c = 0;
    for (const auto& hd : h)
        euler_h += (hd.degree % 2 != 0 ? -1 : 1) * hd.dimension;
    for (int deg = -1; deg <= 3; ++deg)
        euler_c += (deg % 2 != 0 ? -1 : 1) * t.space().dim(deg);
    CHECK(euler_c == euler_h);
    CHECK(euler_h == 1);  // (2 - 1)^2
    // Kuenneth: H(a) has dims (1, 0), so H(a (x) a) = (1, 0, 0)
    CHECK(h[1].dimension == 1);
    CHECK(h[2].dimension == 0);
    CHECK(h[3].dimension == 0);
}

TEST_CASE("dual complex mirrors cohomology") {
    CochainComplex c = two_one();
    CochainComplex dc = dual_complex(c);
    CHECK(dc.space().dim(0) == 2);
    CHECK(dc.space().dim(-1) == 1);
    auto h = cohomology(dc, Window{-2, 1});
    CHECK(h[0].dimension == 0);  // -2
    CHECK(h[1].dimension == 0);  // -1
    CHECK(h[2].dimension == 1);  // 0
}

TEST_CASE("double dual negates a degree-1 map") {
    // with f^(z) = (-1)^{d|z|} z o f, the double dual of a degree-d map is
    // (-1)^d times the original
    CochainComplex c = two_one();
    CochainComplex dd = dual_complex(dual_complex(c));
    CHECK(dd.space().dim(0) == 2);
    CHECK(dd.space().dim(1) == 1);
    Field q = Field::rationals();
    for (int col = 0; col < 2; ++col) {
        SVec e{{col, Scalar::one(q)}};
        SVec a = dd.d().block(0).apply(e), b = c.d().block(0).apply(e);
        for (auto& [i, x] : b) x = -x;
        CHECK(a == b);
    }
}

TEST_CASE("coboundary membership") {
    CochainComplex c = two_one();
    Field q = Field::rationals();
    SVec f{{0, Scalar(q, 3)}};
    CHECK(is_coboundary(c, 1, f));
    SVec e{{0, Scalar(q, 1)}};
    CHECK(!is_coboundary(c, 0, e));
    CHECK(is_coboundary(c, 0, SVec{}));
}
