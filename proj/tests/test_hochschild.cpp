#include <doctest.h>

#include "dgalg/hochschild.hpp"
#include "helpers.hpp"

using namespace dgalg;
using namespace testutil;

namespace {

std::shared_ptr<const DGAlgebra> share(DGAlgebra a) {
    return std::make_shared<const DGAlgebra>(std::move(a));
}

std::shared_ptr<const DGBimodule> self_module(
    const std::shared_ptr<const DGAlgebra>& a) {
    return std::make_shared<const DGBimodule>(DGBimodule::over_self(a));
}

void add_to(HVec& v, const HKey& k, const Scalar& c) {
    auto it = v.find(k);
    if (it == v.end()) {
        if (!c.is_zero()) v.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

HVec d_simp_of(const HochschildComplex& h, const HVec& f) {
    HVec out;
    for (const auto& [k, c] : f)
        for (const auto& [k2, c2] : h.d_key_simplicial(k))
            add_to(out, k2, c * c2);
    return out;
}

HVec d_of(const HochschildComplex& h, const HVec& f) {
    HVec out;
    for (const auto& [k, c] : f)
        for (const auto& [k2, c2] : h.d_key(k)) add_to(out, k2, c * c2);
    return out;
}

HVec scaled(const HVec& f, const Scalar& c) {
    HVec out;
    for (const auto& [k, v] : f) add_to(out, k, v * c);
    return out;
}

HVec minus(const HVec& f, const HVec& g) {
    HVec out = f;
    for (const auto& [k, v] : g) add_to(out, k, -v);
    return out;
}

Scalar sign(const Field& f, int e) { return Scalar(f, e % 2 != 0 ? -1 : 1); }

// a few homogeneous single-key cochains spread over the populated degrees
std::vector<HVec> sample_cochains(const HochschildComplex& h) {
    std::vector<HVec> out;
    for (const auto& [t, ks] : h.keys_by_degree) {
        if (ks.empty()) continue;
        out.push_back(HVec{{ks.front(), Scalar::one(h.algebra->field)}});
        if (ks.size() > 2)
            out.push_back(
                HVec{{ks[ks.size() / 2], Scalar::one(h.algebra->field)}});
    }
    return out;
}

}  // namespace

TEST_CASE("hochschild cohomology of the exterior line") {
    for (Field f : {Field::rationals(), Field::prime_field(5)}) {
        auto a = share(exterior_algebra(f, {{"a", -1}}));
        auto r = hh_cohomology(a, self_module(a), Window{-1, 6});
        CHECK(r.hilbert(Window{-1, 6}) ==
              std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1});
        // ring is Lambda(v) (x) k[t] with |v| = -1, |t| = 2: the odd degree 1
        // class squares to zero, while t is polynomial and acts freely
        CHECK(r.products.at({1, 0, 1, 0}).empty());
        CHECK(!r.products.at({2, 0, 2, 0}).empty());
        CHECK(!r.products.at({1, 0, 2, 0}).empty());
        CHECK(!r.products.at({-1, 0, 2, 0}).empty());
        // the degree 0 class is the unit of the ring
        for (int t = -1; t <= 6; ++t) {
            auto it = r.products.find({0, 0, t, 0});
            if (it != r.products.end()) CHECK(!it->second.empty());
        }
    }
}

TEST_CASE("hochschild cohomology of truncated polynomial coefficients") {
    auto a = share(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 8, false));
    auto m0 = DGBimodule::over_self(a);

    SUBCASE("the algebra over itself is refused: actions escape the window") {
        CHECK_THROWS_AS(
            hochschild_complex(a, std::make_shared<const DGBimodule>(m0),
                               Window{-1, 4}),
            InsufficientTruncation);
    }
    SUBCASE("honest quotient stages match the expected pattern") {
        for (int n : {1, 2}) {
            auto m = std::make_shared<const DGBimodule>(
                truncate_module(m0, 2 * n).module);
            auto r = hh_cohomology(a, m, Window{-1, 4});
            // dims 1 exactly in {0,2,...,2n} and {-1,1,...,2n-1}
            std::vector<int> want;
            for (int t = -1; t <= 4; ++t)
                want.push_back(t <= 2 * n ? 1 : 0);
            CHECK(r.hilbert(Window{-1, 4}) == want);
        }
    }
}

TEST_CASE("insufficient algebra range is reported, not silently wrong") {
    auto a = share(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 4, false));
    auto m = std::make_shared<const DGBimodule>(
        truncate_module(DGBimodule::over_self(a), 4).module);
    // needs the algebra complete up to degree 4 - (-2) + 1 = 7 > 4
    CHECK_THROWS_AS(hochschild_complex(a, m, Window{-1, 4}),
                    InsufficientTruncation);
}

TEST_CASE("mixed-sign letters are rejected") {
    auto a = share(
        exterior_algebra(Field::rationals(), {{"a", -1}, {"b", 3}}));
    CHECK_THROWS_AS(hochschild_complex(a, self_module(a), Window{-2, 2}),
                    InputError);
    CHECK_THROWS_AS(hh_homology(a, self_module(a), Window{-2, 2}), InputError);
}

TEST_CASE("degree zero part is the graded center") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = share(random_model(rng));
        auto m = self_module(a);
        Window w = safe_window(*a);
        auto h = hochschild_complex(a, m, w);
        for (int mi = 0; mi < m->basis.size(); ++mi) {
            bool cocycle = d_of(h, HVec{{HKey{{}, mi}, Scalar::one(a->field)}})
                               .empty();
            bool central = m->d(mi).empty();
            for (int ai : a->aug_ideal()) {
                SVec lhs = m->act_right(mi, ai);
                SVec rhs = m->act_left(ai, mi);
                Scalar s = sign(a->field, m->deg(mi) * a->deg(ai));
                for (auto& [j, c] : rhs) c = c * s;
                if (lhs != rhs) central = false;
            }
            CHECK(cocycle == central);
        }
    }
}

TEST_CASE("cup product: Leibniz and associativity hold exactly") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = share(random_model(rng));
        auto m = self_module(a);
        auto h = hochschild_complex(a, m, safe_window(*a));
        auto samples = sample_cochains(h);
        for (size_t i = 0; i < samples.size(); ++i)
            for (size_t j = 0; j < samples.size(); ++j) {
                const HVec& f = samples[i];
                const HVec& g = samples[j];
                int tf = h.total_degree(f.begin()->first);
                HVec lhs = d_of(h, cup(h, f, g));
                HVec rhs = cup(h, d_of(h, f), g);
                for (const auto& [k, c] :
                     scaled(cup(h, f, d_of(h, g)), sign(a->field, tf)))
                    add_to(rhs, k, c);
                CHECK(lhs == rhs);
                if (i < 3 && j < 3)
                    for (const HVec& e : samples)
                        CHECK(cup(h, cup(h, f, g), e) ==
                              cup(h, f, cup(h, g, e)));
            }
    }
}

TEST_CASE("cup product is graded commutative in cohomology") {
    auto a = share(exterior_algebra(Field::rationals(), {{"a", 3}, {"b", 5}}));
    Window w{0, 6};
    auto h = hochschild_complex(a, self_module(a), w);
    auto r = ring_of(h);
    for (const auto& [ti, ri] : r.representatives)
        for (const auto& [tj, rj] : r.representatives) {
            if (!w.contains(ti + tj)) continue;
            for (const auto& vi : ri)
                for (const auto& vj : rj) {
                    HVec f = h.from_coords(ti, vi), g = h.from_coords(tj, vj);
                    HVec comm = minus(cup(h, f, g),
                                      scaled(cup(h, g, f),
                                             sign(a->field, ti * tj)));
                    if (comm.empty()) continue;
                    CHECK(is_coboundary(h.cx, ti + tj,
                                        h.to_coords(ti + tj, comm)));
                }
        }
}

TEST_CASE("simplicial differential equals minus the multiplication bracket") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = share(random_model(rng));
        auto h = hochschild_complex(a, self_module(a), safe_window(*a));
        for (const HVec& f : sample_cochains(h))
            CHECK(delta_via_bracket(h, f) == d_simp_of(h, f));
    }
}

TEST_CASE("bracket antisymmetry and squared simplicial differential") {
    auto a = share(exterior_algebra(Field::rationals(), {{"a", -1}, {"b", -3}}));
    auto h = hochschild_complex(a, self_module(a), Window{-5, 0});
    auto samples = sample_cochains(h);
    for (const HVec& f : samples) {
        int tf = h.total_degree(f.begin()->first);
        for (const HVec& g : samples) {
            int tg = h.total_degree(g.begin()->first);
            HVec lhs = bracket(h, f, g);
            HVec rhs = scaled(bracket(h, g, f),
                              -sign(a->field, (tf - 1) * (tg - 1)));
            CHECK(lhs == rhs);
        }
        // zero internal differential: delta is the whole differential, so
        // applying it twice through the bracket formula must vanish
        CHECK(delta_via_bracket(h, delta_via_bracket(h, f)).empty());
    }
}

TEST_CASE("hochschild homology of exterior lines") {
    SUBCASE("generator in degree -1: one class in every degree <= 0") {
        auto a = share(exterior_algebra(Field::rationals(), {{"a", -1}}));
        auto dims = hh_homology(a, self_module(a), Window{-4, 0});
        for (int t = -4; t <= 0; ++t) CHECK(dims[t] == 1);
    }
    SUBCASE("generator in degree 3: gap exactly in degree 1") {
        auto a = share(exterior_algebra(Field::prime_field(13), {{"a", 3}}));
        auto dims = hh_homology(a, self_module(a), Window{0, 6});
        for (int t = 0; t <= 6; ++t) CHECK(dims[t] == (t == 1 ? 0 : 1));
    }
}

TEST_CASE("dualization map is a certified isomorphism") {
    auto a = share(
        exterior_algebra(Field::rationals(), {{"a", -1}, {"b", -3}}));
    auto m = self_module(a);
    for (int k = 0; k <= 3; ++k) {
        auto res = dualization_map(*a, *m, k);
        CHECK(res.iso);
        CHECK(res.failing_degrees.empty());
    }
    auto km = share(koszul_model(Field::rationals()));
    auto res = dualization_map(*km, DGBimodule::over_self(km), 2);
    CHECK(res.iso);
}

TEST_CASE("random models build valid hochschild complexes") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = share(random_model(rng));
        Window w = safe_window(*a);
        // construction itself verifies d^2 = 0 over the populated window
        auto h = hochschild_complex(a, self_module(a), w);
        auto r = ring_of(h);
        for (const auto& [t, d] : r.dims) CHECK(d >= 0);
        // the unit class multiplies as the identity
        auto u = r.representatives.find(0);
        if (u != r.representatives.end() && !u->second.empty())
            for (const auto& [key, v] : r.products) {
                auto [ti, i, tj, j] = key;
                if (ti == 0 && i == 0 && r.dims.at(tj) > 0)
                    CHECK(!v.empty());
            }
    }
}
