// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "dgalg/hochschild.hpp"
#include "dgalg/io.hpp"
#include "dgalg/models.hpp"
#include "helpers.hpp"

using namespace dgalg;
using namespace testutil;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << n << "  " << what;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::shared_ptr<const DGAlgebra> share(DGAlgebra a) {
    return std::make_shared<const DGAlgebra>(std::move(a));
}

std::shared_ptr<const DGBimodule> self_module(
    const std::shared_ptr<const DGAlgebra>& a) {
    return std::make_shared<const DGBimodule>(DGBimodule::over_self(a));
}

int cli(const std::string& args) {
    std::string cmd = std::string(DGALG_CLI) + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
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

HVec d_of(const HochschildComplex& h, const HVec& f, bool simplicial) {
    HVec out;
    for (const auto& [k, c] : f)
        for (const auto& [k2, c2] :
             simplicial ? h.d_key_simplicial(k) : h.d_key(k))
            add_to(out, k2, c * c2);
    return out;
}

HVec scaled(const HVec& f, const Scalar& c) {
    HVec out;
    for (const auto& [k, v] : f) add_to(out, k, v * c);
    return out;
}

Scalar sgn(const Field& f, int e) {
    return Scalar(f, e % 2 != 0 ? -1 : 1);
}

// ---- criteria ----

void criterion1() {
    bool ok = cli("verify-koszul --group s1 --window -1:8") == 0 &&
              cli("verify-koszul --group su2 --window -3:12") == 0;
    report(1, "Koszul duality: HH* of exterior and polynomial sides agree "
              "(s1 on [-1,8], su2 on [-3,12])", ok);
}

void criterion2() {
    std::string detail;
    bool ok = true;
    auto a = share(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 16, false));
    Tower t = truncation_tower(a, DGBimodule::over_self(a),
                               {2, 4, 6, 8, 10, 12});
    Window w{-1, 8};
    LimitReport rep = hh_inverse_limit(a, t, w);
    if (!rep.mittag_leffler || !rep.unstabilized.empty()) {
        ok = false;
        detail = "honest tower did not stabilize";
    }
    for (int d = w.lo; ok && d <= w.hi; ++d) {
        if (rep.n0.count(d) == 0 || rep.n0.at(d) > 8) {
            ok = false;
            detail = "n0 exceeds 8 in degree " + std::to_string(d);
        }
        auto it = rep.limit.dims.find(d);
        if (it == rep.limit.dims.end() || it->second != 1) {
            ok = false;
            detail = "limit dim != 1 in degree " + std::to_string(d);
        }
    }
    if (ok) {
        Tower bad = t;
        bad.maps[2] =
            GradedMap(bad.stages[3]->space(), bad.stages[2]->space(), 0);
        LimitReport rep2 = hh_inverse_limit(a, bad, w);
        if (rep2.mittag_leffler || rep2.non_surjective.empty()) {
            ok = false;
            detail = "injected non-surjective stage not detected";
        }
    }
    report(2, "inverse limit over Q[x]/x^{n+1}: stabilization with n0 <= 8 "
              "on [-1,8], oracle dims, Mittag-Leffler failure detection",
           ok, detail);
}

void criterion3() {
    auto s1 = dualize_algebra(exterior_algebra(Field::rationals(), {{"a", -1}}));
    auto su2 = dualize_algebra(exterior_algebra(Field::rationals(), {{"a", -3}}));
    DualityReport r1 = check_bar_cobar_duality(s1, Window{0, 10});
    DualityReport r2 = check_bar_cobar_duality(su2, Window{0, 12});
    DualityReport flipped = check_bar_cobar_duality(s1, Window{0, 10}, 2);
    report(3, "bar-cobar duality B(S~) = (Omega S)~ on the s1 and su2 "
              "coalgebras; injected sign flip detected",
           r1.ok && r2.ok && !flipped.ok,
           !r1.ok ? r1.failure : !r2.ok ? r2.failure
                                        : "flip not detected");
}

void criterion4() {
    bool ok = true;
    std::string detail;
    auto check = [&](const DGAlgebra& r, Window w, const std::string& name) {
        UnitMapReport rep = bar_cobar_unit(r, w);
        if (!(rep.ok && rep.induced_iso)) {
            ok = false;
            detail = name + ": " + rep.failure;
        }
    };
    check(exterior_algebra(Field::rationals(), {{"a", -1}}), Window{-8, 0},
          "exterior a_-1");
    check(exterior_algebra(Field::rationals(), {{"a", -3}}), Window{-8, 0},
          "exterior a_-3");
    check(polynomial_algebra(Field::rationals(), {{"x", 2}}, 20, false),
          Window{0, 8}, "polynomial x_2");
    report(4, "unit R -> Omega(B(R)) induces a cohomology isomorphism for "
              "exterior a_-1, a_-3 and polynomial x_2 on [0,8]",
           ok, detail);
}

void criterion5() {
    auto dims = [](const DGAlgebra& a, Window w) {
        std::vector<int> out;
        auto coh = cohomology(a.complex(), w);
        for (const auto& hd : coh) out.push_back(hd.dimension);
        return out;
    };
    DGAlgebra kd_e = koszul_dual(
        exterior_algebra(Field::rationals(), {{"a", -1}}), Window{0, 8});
    DGAlgebra kd_p = koszul_dual(
        polynomial_algebra(Field::rationals(), {{"x", 2}}, 12, false),
        Window{-8, 0});
    bool ok =
        dims(kd_e, Window{0, 8}) ==
            std::vector<int>{1, 0, 1, 0, 1, 0, 1, 0, 1} &&
        dims(kd_p, Window{-8, 0}) ==
            std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1, 1};
    report(5, "Koszul-dual cohomology: H(dual of exterior) = 1 + t^2 + t^4 + "
              "..., H(dual of polynomial) = k in degrees 0 and -1", ok);
}

bool axioms_on(const std::shared_ptr<const DGAlgebra>& a, std::string& detail) {
    auto m = self_module(a);
    Window w = safe_window(*a);
    HochschildComplex h = hochschild_complex(a, m, w);  // checks d^2 = 0
    const Field f = a->field;

    std::vector<HVec> samples;
    for (const auto& [t, ks] : h.keys_by_degree) {
        if (ks.empty()) continue;
        samples.push_back(HVec{{ks.front(), Scalar::one(f)}});
        if (ks.size() > 1)
            samples.push_back(HVec{{ks.back(), Scalar::one(f)}});
    }
    for (size_t i = 0; i < samples.size(); ++i) {
        const HVec& fa = samples[i];
        int tf = h.total_degree(fa.begin()->first);
        // delta = -[mu, .]
        if (delta_via_bracket(h, fa) != d_of(h, fa, true)) {
            detail = "delta != -[mu, f]";
            return false;
        }
        for (size_t j = 0; j < samples.size(); ++j) {
            const HVec& ga = samples[j];
            int tg = h.total_degree(ga.begin()->first);
            // Leibniz
            HVec lhs = d_of(h, cup(h, fa, ga), false);
            HVec rhs = cup(h, d_of(h, fa, false), ga);
            for (const auto& [k, c] :
                 scaled(cup(h, fa, d_of(h, ga, false)), sgn(f, tf)))
                add_to(rhs, k, c);
            if (lhs != rhs) {
                detail = "cup Leibniz fails";
                return false;
            }
            // antisymmetry of the bracket
            HVec br = bracket(h, fa, ga);
            HVec br2 = scaled(bracket(h, ga, fa),
                              -sgn(f, (tf - 1) * (tg - 1)));
            if (br != br2) {
                detail = "bracket antisymmetry fails";
                return false;
            }
            // associativity on a subset of triples
            if (i < 2 && j < 2)
                for (const HVec& e : samples)
                    if (cup(h, cup(h, fa, ga), e) != cup(h, fa, cup(h, ga, e))) {
                        detail = "cup associativity fails";
                        return false;
                    }
        }
    }
    // HH^0 = graded center, via the cocycle criterion in word length 0
    for (int mi = 0; mi < m->basis.size(); ++mi) {
        bool cocycle =
            d_of(h, HVec{{HKey{{}, mi}, Scalar::one(f)}}, false).empty();
        bool central = m->d(mi).empty();
        for (int ai : a->aug_ideal()) {
            SVec lhs = m->act_right(mi, ai);
            SVec rhs = m->act_left(ai, mi);
            Scalar s = sgn(f, m->deg(mi) * a->deg(ai));
            for (auto& [x, c] : rhs) c = c * s;
            if (lhs != rhs) central = false;
        }
        if (cocycle != central) {
            detail = "HH^0 != graded center";
            return false;
        }
    }
    // graded commutativity in cohomology
    GradedRingPresentation r = ring_of(h);
    for (const auto& [ti, ri] : r.representatives)
        for (const auto& [tj, rj] : r.representatives) {
            if (!w.contains(ti + tj)) continue;
            for (const auto& vi : ri)
                for (const auto& vj : rj) {
                    HVec fa = h.from_coords(ti, vi);
                    HVec ga = h.from_coords(tj, vj);
                    HVec comm = cup(h, fa, ga);
                    for (const auto& [k, c] :
                         scaled(cup(h, ga, fa), -sgn(f, ti * tj)))
                        add_to(comm, k, c);
                    if (!comm.empty() &&
                        !is_coboundary(h.cx, ti + tj,
                                       h.to_coords(ti + tj, comm))) {
                        detail = "graded commutativity fails in cohomology";
                        return false;
                    }
                }
        }
    // dualization certificates
    for (int k = 0; k <= 2; ++k) {
        DualizationResult dr = dualization_map(*a, *m, k);
        if (!dr.iso) {
            detail = "dualization certificate fails at k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

void criterion6() {
    bool ok = true;
    std::string detail;
    std::vector<std::shared_ptr<const DGAlgebra>> pool;
    for (const char* g : {"s1", "su2", "su3", "t2"}) {
        GroupModel gm = model_group(g, Field::rationals(), 8);
        pool.push_back(gm.exterior);
    }
    std::mt19937 rng(20260823);
    for (int i = 0; i < 20; ++i) pool.push_back(share(random_model(rng)));
    for (size_t i = 0; ok && i < pool.size(); ++i) {
        std::string d;
        if (!axioms_on(pool[i], d)) {
            ok = false;
            detail = "model " + std::to_string(i) + ": " + d;
        }
    }
    report(6, "Hochschild axiom suite (cup Leibniz/associativity, graded "
              "commutativity, HH^0 = center, bracket antisymmetry, "
              "delta = -[mu,.], dualization certificates) on built-ins and "
              "20 random algebras", ok, detail);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<std::string, DGAlgebra>> models;
    models.emplace_back("exterior a_3 b_5",
                        exterior_algebra(Field::rationals(), {{"a", 3}, {"b", 5}}));
    models.emplace_back("truncated polynomial",
                        polynomial_algebra(Field::rationals(), {{"x", 2}}, 6, true));
    models.emplace_back("koszul model", koszul_model(Field::rationals()));
    for (auto& [name, alg] : models) {
        auto a = share(std::move(alg));
        auto m = self_module(a);
        int top = a->basis.degree(0);
        for (int i = 0; i < a->basis.size(); ++i)
            top = std::max(top, a->deg(i));
        Window w{0, 4};
        Tower t = truncation_tower(a, *m, {top / 2, top, top + 1});
        LimitReport rep = hh_inverse_limit(a, t, w);
        GradedRingPresentation direct = hh_cohomology(a, m, w);
        if (!rep.unstabilized.empty() ||
            rep.limit.hilbert(w) != direct.hilbert(w) ||
            rep.limit.product_pattern() != direct.product_pattern()) {
            ok = false;
            detail = name;
        }
    }
    report(7, "limit over the truncation tower of a finite-dimensional "
              "algebra equals the direct Hochschild computation", ok, detail);
}

void criterion8() {
    auto a = share(exterior_algebra(Field::rationals(), {{"a", -1}}));
    auto dims = hh_homology(a, self_module(a), Window{-6, 0});
    bool ok = true;
    for (int t = -6; t <= 0; ++t)
        if (dims[t] != 1) ok = false;
    report(8, "Hochschild homology of exterior a_-1: dim 1 in every degree "
              "-n (loop space of BS^1 pattern)", ok);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
