#include <doctest.h>

#include "dgalg/hochschild.hpp"
#include "dgalg/io.hpp"
#include "helpers.hpp"

using namespace dgalg;
using namespace testutil;

TEST_CASE("built-in group models satisfy the pairing and validate") {
    for (const char* name : {"s1", "t2", "su2", "su3"}) {
        GroupModel g = model_group(name, Field::rationals(), 12);
        CHECK(validate(*g.exterior).ok);
        CHECK(validate(*g.polynomial).ok);
        CHECK(g.exterior_degrees.size() == g.polynomial_degrees.size());
        CHECK(g.exterior->differentials.empty());
        CHECK(g.polynomial->differentials.empty());
    }
    CHECK(model_group("SU2", Field::rationals(), 8).name == "su2");
    CHECK_THROWS_AS(model_group("so5", Field::rationals(), 8), InputError);
    // pairing violations
    CHECK_THROWS_AS(model_group({-1}, {4}, Field::rationals(), 8), InputError);
    CHECK_THROWS_AS(model_group({-2}, {3}, Field::rationals(), 8), InputError);
    CHECK_THROWS_AS(model_group({-1, -3}, {2}, Field::rationals(), 8),
                    InputError);
}

TEST_CASE("stage modules form a surjective tower of quotients") {
    GroupModel g = model_group("s1", Field::rationals(), 16);
    DGBimodule m1 = stage_module(g, 1);
    CHECK(m1.basis.size() == 2);  // 1, x
    CHECK(m1.basis.index_of("x") >= 0);
    CHECK(m1.window.hi == INT_MAX);

    Tower t = stage_tower(g, 4);
    REQUIRE(t.stages.size() == 4);
    for (size_t i = 0; i + 1 < t.stages.size(); ++i)
        for (int d : t.stages[i]->space().populated_degrees()) {
            // surjective per degree: full rank onto the smaller stage
            CHECK(rank(t.maps[i].block(d)) == t.stages[i]->space().dim(d));
        }
}

TEST_CASE("koszul verification passes for the circle model") {
    GroupModel g = model_group("s1", Field::rationals(), 8);
    VerificationReport r = verify_theorem3(g, Window{-1, 6});
    CHECK(r.verdict == "pass");
    CHECK(r.dims_match);
    CHECK(r.pattern_match);
    CHECK(r.koszul_dual_match);
    CHECK(r.unstabilized.empty());
}

TEST_CASE("a mismatched model pair fails with a named discrepancy") {
    // exterior side of su2 against the polynomial side of s1
    GroupModel bad = model_group("s1", Field::rationals(), 8);
    GroupModel su2 = model_group("su2", Field::rationals(), 8);
    bad.exterior = su2.exterior;
    bad.exterior_degrees = su2.exterior_degrees;
    bad.name = "mismatch";
    VerificationReport r = verify_theorem3(bad, Window{-3, 4});
    CHECK(r.verdict == "fail");
    CHECK(!r.first_discrepancy.empty());
    CHECK(!r.mismatched_degrees.empty());
}

TEST_CASE("algebra json round trip is lossless and deterministic") {
    DGAlgebra a = koszul_model(Field::prime_field(13));
    std::string text = export_algebra(a);
    DGAlgebra b = import_algebra(text);
    CHECK(validate(b).ok);
    CHECK(b.basis.size() == a.basis.size());
    CHECK(b.field == a.field);
    CHECK(b.window == a.window);
    for (int i = 0; i < a.basis.size(); ++i) {
        CHECK(b.basis.name(i) == a.basis.name(i));
        CHECK(b.basis.degree(i) == a.basis.degree(i));
        CHECK(b.d(i) == a.d(i));
        for (int j = 0; j < a.basis.size(); ++j) CHECK(b.mul(i, j) == a.mul(i, j));
    }
    CHECK(export_algebra(b) == text);

    // computation results agree after the round trip
    Window w{0, 6};
    auto ha = hh_cohomology(std::make_shared<const DGAlgebra>(a),
                            std::make_shared<const DGBimodule>(
                                DGBimodule::over_self(
                                    std::make_shared<const DGAlgebra>(a))),
                            w);
    auto sb = std::make_shared<const DGAlgebra>(b);
    auto hb = hh_cohomology(
        sb, std::make_shared<const DGBimodule>(DGBimodule::over_self(sb)), w);
    CHECK(ha.hilbert(w) == hb.hilbert(w));
    CHECK(ha.product_pattern() == hb.product_pattern());
}

TEST_CASE("import rejects malformed inputs with diagnostics") {
    CHECK_THROWS_AS(import_algebra("{"), InputError);
    CHECK_THROWS_AS(import_algebra("{\"field\": \"R\"}"), InputError);
    // missing unit
    CHECK_THROWS_AS(import_algebra(R"({"field": "Q",
        "basis": [{"name": "1", "degree": 0}]})"),
                    InputError);
    // unit outside degree 0
    CHECK_THROWS_AS(import_algebra(R"({"field": "Q", "unit": "e",
        "basis": [{"name": "e", "degree": 2}]})"),
                    InputError);
    // unknown name in a product
    CHECK_THROWS_AS(import_algebra(R"({"field": "Q", "unit": "1",
        "basis": [{"name": "1", "degree": 0}],
        "products": [{"left": "1", "right": "zz", "result": []}]})"),
                    InputError);
    // duplicate basis name
    CHECK_THROWS_AS(import_algebra(R"({"field": "Q", "unit": "1",
        "basis": [{"name": "1", "degree": 0}, {"name": "1", "degree": 1}]})"),
                    InputError);
    // bad scalar
    CHECK_THROWS_AS(import_algebra(R"({"field": "Fp:5", "unit": "1",
        "basis": [{"name": "1", "degree": 0}],
        "differential": [{"source": "1", "result": [["1", "x"]]}]})"),
                    InputError);
}

TEST_CASE("module import: trivial coefficients give the dual numbers Ext") {
    auto a = std::make_shared<const DGAlgebra>(
        exterior_algebra(Field::rationals(), {{"a", -1}}));
    DGBimodule k = import_module(R"({
        "basis": [{"name": "e", "degree": 0}],
        "left_action": [], "right_action": [], "differential": []
    })",
                                 a);
    CHECK(validate(k).ok);
    auto r = hh_cohomology(a, std::make_shared<const DGBimodule>(k),
                           Window{-2, 4});
    CHECK(r.hilbert(Window{-2, 4}) == std::vector<int>{0, 0, 1, 0, 1, 0, 1});
}
