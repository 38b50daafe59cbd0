#include <doctest.h>

#include "helpers.hpp"

using namespace dgalg;
using namespace testutil;

namespace {
std::vector<int> h_dims(const CochainComplex& c, Window w) {
    std::vector<int> out;
    for (const auto& hd : cohomology(c, w)) out.push_back(hd.dimension);
    return out;
}
}  // namespace

TEST_CASE("bar of an exterior generator in degree -1 has divided-power "
          "cohomology") {
    auto a = std::make_shared<DGAlgebra>(
        exterior_algebra(Field::rationals(), {{"a", -1}}));
    BarComplex b = bar(nullptr, a, nullptr, Window{-8, 0});
    // one word [a|...|a] of length n in degree -2n
    auto dims = h_dims(b.cx, Window{-8, 0});
    CHECK(dims == std::vector<int>{1, 0, 1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("bar of a polynomial generator in degree 2 is small") {
    auto p = std::make_shared<DGAlgebra>(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 8, false));
    BarComplex b = bar(nullptr, p, nullptr, Window{0, 4});
    auto dims = h_dims(b.cx, Window{0, 4});
    CHECK(dims == std::vector<int>{1, 1, 0, 0, 0});
}

TEST_CASE("bar with the algebra itself as coefficients is a resolution "
          "of k") {
    auto a = std::make_shared<DGAlgebra>(
        exterior_algebra(Field::prime_field(5), {{"a", -1}}));
    auto m = std::make_shared<DGBimodule>(DGBimodule::over_self(a));
    BarComplex b = bar(m, a, nullptr, Window{-8, 0});
    auto dims = h_dims(b.cx, Window{-8, 0});
    CHECK(dims == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("bar refuses an insufficient truncation or mixed letter signs") {
    auto shallow = std::make_shared<DGAlgebra>(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 4, false));
    CHECK_THROWS_AS(bar(nullptr, shallow, nullptr, Window{0, 6}),
                    InsufficientTruncation);
    auto mixed = std::make_shared<DGAlgebra>(
        tensor_product(exterior_algebra(Field::rationals(), {{"a", -1}}),
                       exterior_algebra(Field::rationals(), {{"b", 3}})));
    CHECK_THROWS_AS(bar(nullptr, mixed, nullptr, Window{-4, 4}), InputError);
}

TEST_CASE("bar coalgebra is a valid dg coalgebra") {
    auto a = std::make_shared<DGAlgebra>(
        exterior_algebra(Field::rationals(), {{"a", -3}}));
    BarComplex b = bar(nullptr, a, nullptr, Window{-10, 0});
    DGCoalgebra s = b.to_coalgebra();
    CHECK(validate(s).ok);
    CHECK(s.deg(s.grouplike) == 0);
}

TEST_CASE("cobar of truncated divided powers recovers an exterior line") {
    auto s = std::make_shared<DGCoalgebra>(dualize_algebra(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 12, true)));
    CHECK(validate(*s).ok);
    CobarComplex c = cobar(nullptr, s, nullptr, Window{-6, 0});
    auto dims = h_dims(c.cx, Window{-6, 0});
    CHECK(dims == std::vector<int>{0, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("cobar on a primitive letter is a free algebra") {
    auto s = std::make_shared<DGCoalgebra>(
        dualize_algebra(exterior_algebra(Field::rationals(), {{"a", -1}})));
    CobarComplex c = cobar(nullptr, s, nullptr, Window{0, 6});
    auto dims = h_dims(c.cx, Window{0, 6});
    CHECK(dims == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
    DGAlgebra free = c.to_algebra();
    CHECK(validate(free).ok);
}

TEST_CASE("cobar requires a conilpotency certificate") {
    // a fake coalgebra whose reduced comultiplication loops: Delta(g) has a
    // g (x) g term on a degree-0 "grouplike-like" second element is not
    // possible in a connected setting, so use a bound of 1 to force failure
    auto s = std::make_shared<DGCoalgebra>(dualize_algebra(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 12, true)));
    CHECK_THROWS_AS(cobar(nullptr, s, nullptr, Window{-4, 0}, 2), InputError);
}

TEST_CASE("Koszul dual of an exterior line is a polynomial line") {
    DGAlgebra kd =
        koszul_dual(exterior_algebra(Field::rationals(), {{"a", -1}}),
                    Window{0, 8});
    CHECK(validate(kd).ok);
    auto dims = h_dims(kd.complex(), Window{0, 8});
    CHECK(dims == std::vector<int>{1, 0, 1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("Koszul dual of a polynomial line is an exterior line") {
    DGAlgebra kd = koszul_dual(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 12, false),
        Window{-8, 0});
    auto dims = h_dims(kd.complex(), Window{-8, 0});
    CHECK(dims == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("bar-cobar duality witness on the circle coalgebra") {
    DGCoalgebra s =
        dualize_algebra(exterior_algebra(Field::rationals(), {{"a", -1}}));
    DualityReport rep = check_bar_cobar_duality(s, Window{0, 10});
    CHECK(rep.ok);
    CHECK(rep.bar_dim == rep.cobar_dim);
    CHECK(rep.bar_dim >= 6);  // words of length 0..5 in the range
}

TEST_CASE("bar-cobar duality witness on the 3-sphere coalgebra") {
    DGCoalgebra s =
        dualize_algebra(exterior_algebra(Field::prime_field(7), {{"a", -3}}));
    DualityReport rep = check_bar_cobar_duality(s, Window{0, 12});
    CHECK(rep.ok);
}

TEST_CASE("an injected sign flip in the duality witness is detected") {
    DGCoalgebra s =
        dualize_algebra(exterior_algebra(Field::rationals(), {{"a", -1}}));
    // flip the witness on a word of length >= 2 (flipping a single letter
    // is just a generator rescaling and still an isomorphism)
    DualityReport rep = check_bar_cobar_duality(s, Window{0, 8}, 2);
    CHECK(!rep.ok);
    CHECK(!rep.failure.empty());
}

TEST_CASE("bar-cobar unit for an exterior line") {
    UnitMapReport rep = bar_cobar_unit(
        exterior_algebra(Field::rationals(), {{"a", -1}}), Window{-4, 2});
    CHECK(rep.ok);
    CHECK(rep.chain_map_ok);
    CHECK(rep.multiplicative_up_to_coboundary);
    CHECK(rep.induced_iso);
    CHECK(rep.h_dims.at(0) == std::pair<int, int>{1, 1});
    CHECK(rep.h_dims.at(-1) == std::pair<int, int>{1, 1});
}

TEST_CASE("bar-cobar unit for a polynomial line") {
    UnitMapReport rep = bar_cobar_unit(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 16, false),
        Window{0, 6});
    CHECK(rep.ok);
    CHECK(rep.h_dims.at(2) == std::pair<int, int>{1, 1});
    CHECK(rep.h_dims.at(3) == std::pair<int, int>{0, 0});
}

TEST_CASE("bar applies to every randomly sampled model") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        DGAlgebra a = random_model(rng);
        CAPTURE(trial);
        auto ap = std::make_shared<DGAlgebra>(a);
        Window w = safe_window(a);
        // construction itself checks d^2 = 0 on the populated range
        BarComplex b = bar(nullptr, ap, nullptr, w);
        CHECK(b.cx.space().total_dim() >= 1);
        DGCoalgebra s = b.to_coalgebra();
        CHECK(validate(s).ok);
    }
}
