#include "dgalg/models.hpp"

#include <algorithm>
#include <functional>

namespace dgalg {

DGAlgebra exterior_algebra(
    const Field& f,
    const std::vector<std::pair<std::string, int>>& generators) {
    const int n = static_cast<int>(generators.size());
    if (n > 20) throw InputError("exterior_algebra: too many generators");
    for (const auto& [name, d] : generators)
        if (d % 2 == 0)
            throw InputError("exterior_algebra: generator '" + name +
                             "' must have odd degree");
    DGAlgebra A;
    A.field = f;
    A.window = Window::all();
    std::vector<int> index_of_mask(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int deg = 0;
        std::string name;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                deg += generators[i].second;
                if (!name.empty()) name += "*";
                name += generators[i].first;
            }
        if (name.empty()) name = "1";
        index_of_mask[mask] = A.basis.add(deg, name);
    }
    A.unit = index_of_mask[0];
    for (unsigned s = 0; s < (1u << n); ++s)
        for (unsigned t = 0; t < (1u << n); ++t) {
            if (s == 0 || t == 0) continue;  // unit handled implicitly
            if (s & t) continue;             // squares vanish
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                if (t & (1u << i))
                    for (int j = i + 1; j < n; ++j)
                        if (s & (1u << j)) ++inversions;
            Scalar c(f, inversions % 2 != 0 ? -1 : 1);
            A.products[{index_of_mask[s], index_of_mask[t]}] =
                SVec{{index_of_mask[s | t], c}};
        }
    return A;
}

DGAlgebra polynomial_algebra(
    const Field& f,
    const std::vector<std::pair<std::string, int>>& generators,
    int top_degree, bool as_quotient) {
    const int n = static_cast<int>(generators.size());
    for (const auto& [name, d] : generators)
        if (d <= 0 || d % 2 != 0)
            throw InputError("polynomial_algebra: generator '" + name +
                             "' must have positive even degree");
    DGAlgebra A;
    A.field = f;
    A.window = as_quotient ? Window::all() : Window{INT_MIN, top_degree};

    std::vector<std::vector<int>> exps;  // exponent vectors, with degree
    std::map<std::vector<int>, int> index_of;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int deg) {
        if (i == n) {
            exps.push_back(cur);
            return;
        }
        for (int e = 0;; ++e) {
            int d2 = deg + e * generators[i].second;
            if (d2 > top_degree) break;
            cur[i] = e;
            rec(i + 1, d2);
        }
        cur[i] = 0;
    };
    rec(0, 0);
    auto name_of = [&](const std::vector<int>& e) {
        std::string name;
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (!name.empty()) name += "*";
            name += generators[i].first;
            if (e[i] > 1) name += "^" + std::to_string(e[i]);
        }
        return name.empty() ? std::string("1") : name;
    };
    auto degree_of = [&](const std::vector<int>& e) {
        int d = 0;
        for (int i = 0; i < n; ++i) d += e[i] * generators[i].second;
        return d;
    };
    for (const auto& e : exps) index_of[e] = A.basis.add(degree_of(e), name_of(e));
    A.unit = index_of.at(std::vector<int>(n, 0));
    for (const auto& [e1, i1] : index_of)
        for (const auto& [e2, i2] : index_of) {
            if (i1 == A.unit || i2 == A.unit) continue;
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
            auto it = index_of.find(e);
            if (it != index_of.end())
                A.products[{i1, i2}] = SVec{{it->second, Scalar::one(f)}};
            // above top_degree: zero in the quotient, untrusted otherwise --
            // either way the table stays empty
        }
    return A;
}

namespace {
// trusted bound arithmetic with INT_MIN/INT_MAX as -inf/+inf
int bound_add(int a, int b, int inf) {
    if (a == inf || b == inf) return inf;
    long s = static_cast<long>(a) + b;
    return static_cast<int>(std::clamp<long>(s, INT_MIN + 1, INT_MAX - 1));
}
}  // namespace

DGAlgebra tensor_product(const DGAlgebra& a, const DGAlgebra& b) {
    if (!(a.field == b.field))
        throw InputError("tensor_product: mismatched ground fields");
    if (a.unit < 0 || b.unit < 0)
        throw InputError("tensor_product: both factors need units");
    DGAlgebra out;
    out.field = a.field;

    auto degs_a = a.basis.populated_degrees();
    auto degs_b = b.basis.populated_degrees();
    if (degs_a.empty() || degs_b.empty())
        throw InputError("tensor_product: empty factor");
    // a product of two tensor basis elements is trusted at total degree t
    // when both component products are; the components of a degree-t pair
    // are bounded using the factors' populated degree ranges
    int hi = std::min(bound_add(a.window.hi, 2 * degs_b.front(), INT_MAX),
                      bound_add(b.window.hi, 2 * degs_a.front(), INT_MAX));
    int lo = std::max(bound_add(a.window.lo, 2 * degs_b.back(), INT_MIN),
                      bound_add(b.window.lo, 2 * degs_a.back(), INT_MIN));
    out.window = Window{lo, hi};

    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i < a.basis.size(); ++i)
        for (int j = 0; j < b.basis.size(); ++j) {
            std::string name = a.basis.name(i) + "(x)" + b.basis.name(j);
            idx[{i, j}] = out.basis.add(a.deg(i) + b.deg(j), name);
        }
    out.unit = idx.at({a.unit, b.unit});

    for (const auto& [p1, i1] : idx)
        for (const auto& [p2, i2] : idx) {
            if (i1 == out.unit || i2 == out.unit) continue;
            auto [x1, y1] = p1;
            auto [x2, y2] = p2;
            int t = out.deg(i1) + out.deg(i2);
            if (!out.window.contains(t)) continue;
            // (x1 (x) y1)(x2 (x) y2) = (-1)^{|y1||x2|} x1 x2 (x) y1 y2
            Scalar sign(out.field,
                        (b.deg(y1) * a.deg(x2)) % 2 != 0 ? -1 : 1);
            SVec v;
            for (const auto& [xa, ca] : a.mul(x1, x2))
                for (const auto& [yb, cb] : b.mul(y1, y2))
                    svec_add(v, idx.at({xa, yb}), sign * ca * cb);
            if (!v.empty()) out.products[{i1, i2}] = std::move(v);
        }
    // d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy
    for (const auto& [p, i] : idx) {
        auto [x, y] = p;
        SVec v;
        for (const auto& [x2, c] : a.d(x)) svec_add(v, idx.at({x2, y}), c);
        Scalar sign(out.field, a.deg(x) % 2 != 0 ? -1 : 1);
        for (const auto& [y2, c] : b.d(y)) svec_add(v, idx.at({x, y2}), sign * c);
        if (!v.empty()) out.differentials[i] = std::move(v);
    }
    return out;
}

namespace {
const char* kExteriorNames = "abcdefgh";
const char* kPolynomialNames = "xyzuvw";

std::vector<std::pair<std::string, int>> named(const std::vector<int>& degs,
                                               const char* names) {
    std::vector<std::pair<std::string, int>> out;
    for (size_t i = 0; i < degs.size(); ++i)
        out.emplace_back(std::string(1, names[i % 8]), degs[i]);
    return out;
}

std::map<int, int> h_dims_of(const CochainComplex& c, Window w) {
    std::map<int, int> out;
    for (const auto& hd : cohomology(c, w)) out[hd.degree] = hd.dimension;
    return out;
}
}  // namespace

GroupModel model_group(const std::vector<int>& exterior_degrees,
                       const std::vector<int>& polynomial_degrees,
                       const Field& f, int top_degree,
                       const std::string& name) {
    if (exterior_degrees.empty() ||
        exterior_degrees.size() != polynomial_degrees.size())
        throw InputError("model_group: generator lists must be nonempty and "
                         "of equal length");
    std::vector<int> e = exterior_degrees, p = polynomial_degrees;
    std::sort(e.begin(), e.end());
    std::sort(p.begin(), p.end());
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= 0 || e[i] % 2 == 0)
            throw InputError("model_group: exterior degrees must be negative "
                             "odd, got " + std::to_string(e[i]));
        // degree -d pairs with d + 1: smallest exterior with largest poly
        int want = -e[e.size() - 1 - i] + 1;
        if (p[i] != want)
            throw InputError(
                "model_group: polynomial degree " + std::to_string(p[i]) +
                " does not pair with exterior degree " +
                std::to_string(e[e.size() - 1 - i]) + " (needs " +
                std::to_string(want) + ")");
    }
    GroupModel g;
    g.name = name;
    g.exterior_degrees = e;
    g.polynomial_degrees = p;
    g.top_degree = top_degree;
    g.exterior = std::make_shared<const DGAlgebra>(
        exterior_algebra(f, named(e, kExteriorNames)));
    g.polynomial = std::make_shared<const DGAlgebra>(
        polynomial_algebra(f, named(p, kPolynomialNames), top_degree, false));
    return g;
}

GroupModel model_group(const std::string& name, const Field& f,
                       int top_degree) {
    std::string n;
    for (char c : name) n += static_cast<char>(std::tolower(c));
    if (n == "s1") return model_group({-1}, {2}, f, top_degree, "s1");
    if (n == "t2") return model_group({-1, -1}, {2, 2}, f, top_degree, "t2");
    if (n == "su2") return model_group({-3}, {4}, f, top_degree, "su2");
    if (n == "su3")
        return model_group({-3, -5}, {4, 6}, f, top_degree, "su3");
    throw InputError("model_group: unknown group '" + name +
                     "' (built-ins: s1, t2, su2, su3)");
}

DGBimodule stage_module(const GroupModel& g, int n) {
    if (n < 1) throw InputError("stage_module: stage index must be >= 1");
    int maxd = g.polynomial_degrees.back();
    return truncate_module(DGBimodule::over_self(g.polynomial), n * maxd)
        .module;
}

Tower stage_tower(const GroupModel& g, int stages) {
    if (stages < 1) throw InputError("stage_tower: need at least one stage");
    int maxd = g.polynomial_degrees.back();
    std::vector<int> tops;
    for (int n = 1; n <= stages; ++n) tops.push_back(n * maxd);
    return truncation_tower(g.polynomial, DGBimodule::over_self(g.polynomial),
                            tops);
}

VerificationReport verify_theorem3(const GroupModel& g, Window window) {
    if (window.lo == INT_MIN || window.hi == INT_MAX || window.empty())
        throw InputError("verify_theorem3 requires a finite nonempty window");
    VerificationReport r;
    r.group = g.name;
    r.window = window;
    const Field f = g.exterior->field;
    const int maxd = g.polynomial_degrees.back();

    // enough stages for every window degree to have a chance to stabilize,
    // plus slack so the final connecting maps can certify isomorphy
    const int K = std::max(3, (std::max(window.hi, 0) + maxd) / maxd + 1);
    std::vector<int> tops;
    for (int n = 1; n <= K; ++n) tops.push_back(n * maxd);
    // the polynomial algebra itself must be listed far enough for the
    // largest stage: letters and their products up to tops.back() - (lo - 1)
    const int big_top = tops.back() - (window.lo - 1) + 1;
    auto poly = std::make_shared<const DGAlgebra>(polynomial_algebra(
        f, named(g.polynomial_degrees, kPolynomialNames), big_top, false));

    auto direct = hh_cohomology(
        g.exterior,
        std::make_shared<const DGBimodule>(DGBimodule::over_self(g.exterior)),
        window);
    Tower tower =
        truncation_tower(poly, DGBimodule::over_self(poly), tops);
    LimitReport limit = hh_inverse_limit(poly, tower, window);
    r.direct_ring = direct;
    r.limit_ring = limit.limit;
    r.unstabilized = limit.unstabilized;

    auto dim_at = [](const GradedRingPresentation& p, int t) {
        auto it = p.dims.find(t);
        return it == p.dims.end() ? 0 : it->second;
    };
    r.dims_match = true;
    for (int t = window.lo; t <= window.hi; ++t) {
        if (std::find(r.unstabilized.begin(), r.unstabilized.end(), t) !=
            r.unstabilized.end())
            continue;
        if (dim_at(direct, t) != dim_at(limit.limit, t)) {
            r.dims_match = false;
            r.mismatched_degrees.push_back(t);
            if (r.first_discrepancy.empty())
                r.first_discrepancy =
                    "degree " + std::to_string(t) + ": direct dim " +
                    std::to_string(dim_at(direct, t)) + " vs limit dim " +
                    std::to_string(dim_at(limit.limit, t));
        }
    }

    // product patterns, restricted to the range where both sides have
    // per-degree dimension <= 1 (there the pattern is basis-independent)
    auto pattern = [&](const GradedRingPresentation& p,
                       const GradedRingPresentation& q) {
        std::vector<std::pair<int, int>> out;
        for (const auto& [key, v] : p.products) {
            auto [ti, i, tj, j] = key;
            if (i != 0 || j != 0) continue;
            bool small = true;
            for (int t : {ti, tj, ti + tj})
                if (dim_at(p, t) > 1 || dim_at(q, t) > 1) small = false;
            if (small && !v.empty()) out.emplace_back(ti, tj);
        }
        return out;
    };
    auto pa = pattern(direct, limit.limit);
    auto pb = pattern(limit.limit, direct);
    r.pattern_match = (pa == pb);
    if (!r.pattern_match && r.first_discrepancy.empty())
        r.first_discrepancy = "nonzero-product patterns differ";

    // Koszul duality at cohomology level, both directions
    r.koszul_dual_match = true;
    {
        Window wpos{0, std::max(window.hi, maxd)};
        auto kd = koszul_dual(*g.exterior, wpos);
        auto kdd = h_dims_of(kd.complex(), wpos);
        for (int t = wpos.lo; t <= wpos.hi; ++t) {
            int want = static_cast<int>(poly->basis.in_degree(t).size());
            if (kdd.count(t) ? kdd[t] != want : want != 0) {
                r.koszul_dual_match = false;
                if (r.first_discrepancy.empty())
                    r.first_discrepancy =
                        "koszul dual of the exterior model has wrong "
                        "cohomology in degree " + std::to_string(t);
            }
        }
    }
    {
        Window wneg{std::min(window.lo, g.exterior_degrees.front()), 0};
        auto kd = koszul_dual(*poly, wneg);
        auto kdd = h_dims_of(kd.complex(), wneg);
        for (int t = wneg.lo; t <= wneg.hi; ++t) {
            int want =
                static_cast<int>(g.exterior->basis.in_degree(t).size());
            if (kdd.count(t) ? kdd[t] != want : want != 0) {
                r.koszul_dual_match = false;
                if (r.first_discrepancy.empty())
                    r.first_discrepancy =
                        "koszul dual of the polynomial model has wrong "
                        "cohomology in degree " + std::to_string(t);
            }
        }
    }

    bool clean = r.dims_match && r.pattern_match && r.koszul_dual_match;
    r.verdict = !clean                    ? "fail"
                : r.unstabilized.empty()  ? "pass"
                                          : "inconclusive";
    return r;
}

}  // namespace dgalg
