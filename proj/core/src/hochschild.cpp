#include "dgalg/hochschild.hpp"

#include <algorithm>
#include <functional>

namespace dgalg {

namespace {
const std::vector<HKey> kNoKeys;

void hv_add(HVec& v, const HKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(k);
    if (it == v.end()) {
        v.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

int letter_sign(const std::vector<int>& shifted, const std::string& what) {
    bool pos = true, neg = true;
    for (int s : shifted) {
        if (s < 1) pos = false;
        if (s > -1) neg = false;
    }
    if (pos) return 1;
    if (neg) return -1;
    throw InputError(what +
                     " requires shifted letter degrees of one strict sign; "
                     "mixed or zero shifts make degree components "
                     "infinite-dimensional");
}

int require_finite(Window w, const std::string& what) {
    if (w.lo == INT_MIN || w.hi == INT_MAX || w.empty())
        throw InputError(what + " requires a finite nonempty window, got " +
                         w.to_string());
    return 0;
}

struct Pool {
    std::vector<int> ids;
    std::vector<int> shifted;
    int sigma = 1;
};

Pool make_pool(const DGAlgebra& a, const std::string& what) {
    Pool p;
    for (int i : a.aug_ideal()) {
        p.ids.push_back(i);
        p.shifted.push_back(a.deg(i) - 1);
    }
    p.sigma = p.ids.empty() ? 1 : letter_sign(p.shifted, what);
    return p;
}

void enumerate_words(const Pool& pool, int lo, int hi, std::vector<int>& cur,
                     int sum,
                     const std::function<void(const std::vector<int>&, int)>& f) {
    f(cur, sum);
    for (size_t i = 0; i < pool.ids.size(); ++i) {
        int s = sum + pool.shifted[i];
        if (pool.sigma > 0 ? s > hi : s < lo) continue;
        cur.push_back(pool.ids[i]);
        enumerate_words(pool, lo, hi, cur, s, f);
        cur.pop_back();
    }
}

int sdeg_of(const DGAlgebra& a, const std::vector<int>& w, size_t upto) {
    int s = 0;
    for (size_t i = 0; i < upto && i < w.size(); ++i) s += a.deg(w[i]) - 1;
    return s;
}

// shared construction guards: one-signed letters, module completeness on the
// action side, algebra completeness on the letter range
void check_guards(const DGAlgebra& a, const DGBimodule& m, const Pool& pool,
                  int smin, int smax, const std::string& what) {
    for (const auto& [i, v] : a.differentials)
        if (v.count(a.unit))
            throw InputError(what + ": differential hits the unit");
    if (pool.sigma > 0) {
        if (m.window.hi != INT_MAX)
            throw InsufficientTruncation(
                what +
                ": module actions land above its trusted window " +
                m.window.to_string() +
                "; use a completed quotient or the inverse-limit engine");
        if (smax >= 1) {
            Window need{2, smax + 1};
            if (!a.window.covers(need))
                throw InsufficientTruncation(
                    what + " needs the algebra complete on " +
                    need.to_string() + " but it is trusted on " +
                    a.window.to_string());
        }
    } else {
        if (m.window.lo != INT_MIN)
            throw InsufficientTruncation(
                what +
                ": module actions land below its trusted window " +
                m.window.to_string() +
                "; use a completed quotient or the inverse-limit engine");
        if (smin <= -1) {
            Window need{smin, 0};
            if (!a.window.covers(need))
                throw InsufficientTruncation(
                    what + " needs the algebra complete on " +
                    need.to_string() + " but it is trusted on " +
                    a.window.to_string());
        }
    }
}
}  // namespace

int HochschildComplex::total_degree(const HKey& key) const {
    return module->deg(key.m) - sdeg_of(*algebra, key.word, key.word.size());
}

std::string HochschildComplex::label(const HKey& key) const {
    std::string s = "[";
    for (size_t i = 0; i < key.word.size(); ++i) {
        if (i) s += "|";
        s += algebra->basis.name(key.word[i]);
    }
    s += "]->" + module->basis.name(key.m);
    return s;
}

const std::vector<HKey>& HochschildComplex::keys(int degree) const {
    auto it = keys_by_degree.find(degree);
    return it == keys_by_degree.end() ? kNoKeys : it->second;
}

int HochschildComplex::key_index(const HKey& key) const {
    auto it = index_in_degree.find(key);
    return it == index_in_degree.end() ? -1 : it->second;
}

HVec HochschildComplex::d_key_simplicial(const HKey& key) const {
    const DGAlgebra& A = *algebra;
    const DGBimodule& M = *module;
    const auto& w = key.word;
    const int k = static_cast<int>(w.size());
    const int t = total_degree(key);
    HVec out;
    auto sgn = [&](int e) { return Scalar(A.field, e % 2 != 0 ? -1 : 1); };

    // left action: -(-1)^{t(1+|a|)} on ((a,) + w, a.m)
    for (int a : A.aug_ideal()) {
        Scalar s = -sgn(t * (1 + A.deg(a)));
        for (const auto& [m2, c] : M.act_left(a, key.m)) {
            HKey nk{{a}, m2};
            nk.word.insert(nk.word.end(), w.begin(), w.end());
            hv_add(out, nk, s * c);
        }
    }
    // merges: -(-1)^{t + sdeg(w[:i]) + |x| - 1} on (..., x, y, ..., m) for
    // every pair with x*y hitting w[i] (units excluded by normalization)
    for (int i = 0; i < k; ++i) {
        int prefix = sdeg_of(A, w, i);
        if (!A.window.contains(A.deg(w[i])))
            throw InsufficientTruncation(
                "hochschild: merge source degree outside algebra window");
        for (int x : A.aug_ideal()) {
            for (int y : A.aug_ideal()) {
                if (A.deg(x) + A.deg(y) != A.deg(w[i])) continue;
                auto p = A.mul(x, y);
                auto it = p.find(w[i]);
                if (it == p.end()) continue;
                Scalar s = -sgn(t + prefix + A.deg(x) - 1);
                HKey nk{{}, key.m};
                nk.word.assign(w.begin(), w.begin() + i);
                nk.word.push_back(x);
                nk.word.push_back(y);
                nk.word.insert(nk.word.end(), w.begin() + i + 1, w.end());
                hv_add(out, nk, s * it->second);
            }
        }
    }
    // right action: +(-1)^{t + sdeg(w)} on (w + (a,), m.a)
    {
        Scalar s = sgn(t + sdeg_of(A, w, w.size()));
        for (int a : A.aug_ideal())
            for (const auto& [m2, c] : M.act_right(key.m, a)) {
                HKey nk{w, m2};
                nk.word.push_back(a);
                hv_add(out, nk, s * c);
            }
    }
    return out;
}

HVec HochschildComplex::d_key(const HKey& key) const {
    const DGAlgebra& A = *algebra;
    const DGBimodule& M = *module;
    const auto& w = key.word;
    const int t = total_degree(key);
    HVec out = d_key_simplicial(key);
    auto sgn = [&](int e) { return Scalar(A.field, e % 2 != 0 ? -1 : 1); };

    // internal: post-compose with d_M
    for (const auto& [m2, c] : M.d(key.m)) hv_add(out, HKey{w, m2}, c);
    // internal: pre-compose with d in argument i; the coefficient of w[i]
    // in d(b) contributes the key with b in place of w[i]
    for (size_t i = 0; i < w.size(); ++i) {
        Scalar s = sgn(t + sdeg_of(A, w, i));
        for (int b : A.aug_ideal()) {
            if (A.deg(b) + 1 != A.deg(w[i])) continue;
            if (!A.window.contains(A.deg(b) + 1))
                throw InsufficientTruncation(
                    "hochschild: differential of a letter outside the "
                    "algebra window");
            auto db = A.d(b);
            auto it = db.find(w[i]);
            if (it == db.end()) continue;
            HKey nk = key;
            nk.word[i] = b;
            hv_add(out, nk, s * it->second);
        }
    }
    return out;
}

HVec HochschildComplex::from_coords(int degree, const SVec& v) const {
    HVec out;
    const auto& ks = keys(degree);
    for (const auto& [i, c] : v) out.emplace(ks.at(i), c);
    return out;
}

SVec HochschildComplex::to_coords(int degree, const HVec& f) const {
    SVec out;
    for (const auto& [k, c] : f) {
        if (total_degree(k) != degree)
            throw InputError("inhomogeneous cochain in to_coords");
        int i = key_index(k);
        if (i < 0)
            throw InsufficientTruncation(
                "cochain key outside the populated range");
        out.emplace(i, c);
    }
    return out;
}

HochschildComplex hochschild_complex(std::shared_ptr<const DGAlgebra> a,
                                     std::shared_ptr<const DGBimodule> m,
                                     Window window) {
    require_finite(window, "hochschild_complex");
    const DGAlgebra& A = *a;
    const DGBimodule& M = *m;
    if (A.unit < 0) throw InputError("hochschild_complex: no unit");
    for (int i : A.basis.in_degree(0))
        if (i != A.unit)
            throw InputError("hochschild_complex: algebra is not connected");

    HochschildComplex H;
    H.algebra = a;
    H.module = m;
    H.window = window;
    const int plo = window.lo - 1, phi = window.hi + 1;

    auto mdegs = M.basis.populated_degrees();
    if (mdegs.empty()) {
        GradedVectorSpace sp(A.field, Window{plo, phi});
        H.cx = CochainComplex(sp, GradedMap(sp, sp, 1));
        return H;
    }
    // total degree t = |m| - sdeg(word), so sdeg in [min_m - phi, max_m - plo]
    int smin = mdegs.front() - phi, smax = mdegs.back() - plo;
    Pool pool = make_pool(A, "hochschild_complex");
    check_guards(A, M, pool, smin, smax, "hochschild_complex");

    std::vector<int> cur;
    enumerate_words(pool, smin, smax, cur, 0,
                    [&](const std::vector<int>& word, int sd) {
                        H.max_k = std::max(
                            H.max_k, static_cast<int>(word.size()));
                        for (int md : mdegs) {
                            int t = md - sd;
                            if (t < plo || t > phi) continue;
                            for (int mi : M.basis.in_degree(md))
                                H.keys_by_degree[t].push_back(HKey{word, mi});
                        }
                    });

    GradedVectorSpace sp(A.field, Window{plo, phi});
    for (auto& [t, ks] : H.keys_by_degree) {
        std::sort(ks.begin(), ks.end());
        for (const auto& k : ks) {
            H.index_in_degree[k] = sp.dim(t);
            sp.add_basis_element(t, H.label(k));
        }
    }
    GradedMap d(sp, sp, 1);
    for (const auto& [t, ks] : H.keys_by_degree) {
        if (t >= phi) continue;
        for (const auto& k : ks)
            for (const auto& [k2, c] : H.d_key(k)) {
                int j = H.key_index(k2);
                if (j < 0)
                    throw InsufficientTruncation(
                        "hochschild: differential image escaped the range");
                d.add_entry(t, H.index_in_degree.at(k), j, c);
            }
    }
    H.cx = CochainComplex(sp, d);
    return H;
}

HVec cup(const HochschildComplex& h, const HVec& f, const HVec& g) {
    if (!h.module->is_algebra)
        throw InputError("cup requires bimodule-algebra coefficients");
    const DGAlgebra& A = *h.algebra;
    HVec out;
    for (const auto& [kf, cf] : f)
        for (const auto& [kg, cg] : g) {
            int tg = h.total_degree(kg);
            Scalar s(A.field,
                     (tg * sdeg_of(A, kf.word, kf.word.size())) % 2 != 0 ? -1
                                                                         : 1);
            for (const auto& [mz, cz] : h.module->mul(kf.m, kg.m)) {
                HKey nk{kf.word, mz};
                nk.word.insert(nk.word.end(), kg.word.begin(), kg.word.end());
                hv_add(out, nk, s * cf * cg * cz);
            }
        }
    return out;
}

namespace {
void require_self_coefficients(const HochschildComplex& h,
                               const std::string& what) {
    if (!h.module->is_algebra ||
        h.module->basis.size() != h.algebra->basis.size())
        throw InputError(what +
                         " requires coefficients M = A (the algebra as a "
                         "bimodule over itself)");
}

int homogeneous_degree(const HochschildComplex& h, const HVec& f,
                       const std::string& what) {
    if (f.empty()) return 0;
    int t = h.total_degree(f.begin()->first);
    for (const auto& [k, c] : f)
        if (h.total_degree(k) != t)
            throw InputError(what + " requires homogeneous cochains");
    return t;
}
}  // namespace

HVec circle(const HochschildComplex& h, const HVec& f, const HVec& g) {
    require_self_coefficients(h, "circle");
    const DGAlgebra& A = *h.algebra;
    HVec out;
    for (const auto& [kf, cf] : f)
        for (const auto& [kg, cg] : g) {
            int tg = h.total_degree(kg);
            for (size_t i = 0; i < kf.word.size(); ++i) {
                if (kf.word[i] != kg.m) continue;
                Scalar s(A.field,
                         ((tg - 1) * sdeg_of(A, kf.word, i)) % 2 != 0 ? -1
                                                                      : 1);
                HKey nk{{}, kf.m};
                nk.word.assign(kf.word.begin(), kf.word.begin() + i);
                nk.word.insert(nk.word.end(), kg.word.begin(), kg.word.end());
                nk.word.insert(nk.word.end(), kf.word.begin() + i + 1,
                               kf.word.end());
                hv_add(out, nk, s * cf * cg);
            }
        }
    return out;
}

HVec bracket(const HochschildComplex& h, const HVec& f, const HVec& g) {
    int tf = homogeneous_degree(h, f, "bracket");
    int tg = homogeneous_degree(h, g, "bracket");
    HVec out = circle(h, f, g);
    Scalar s(h.algebra->field,
             ((tf - 1) * (tg - 1)) % 2 != 0 ? -1 : 1);
    for (const auto& [k, c] : circle(h, g, f)) hv_add(out, k, -(s * c));
    return out;
}

HVec delta_via_bracket(const HochschildComplex& h, const HVec& f) {
    require_self_coefficients(h, "delta_via_bracket");
    const DGAlgebra& A = *h.algebra;
    int tf = homogeneous_degree(h, f, "delta_via_bracket");
    HVec out;
    auto sgn = [&](int e) { return Scalar(A.field, e % 2 != 0 ? -1 : 1); };
    // -[mu, f] = -(mu o f) + (-1)^{tf - 1} (f o mu), with the multiplication
    // cochain mu(x, y) = (-1)^{|x| - 1} x y
    for (const auto& [kf, cf] : f) {
        // mu o_0 f: word (wf + (a,)), value (-1)^{|mf|-1} mf.a
        for (int a : A.aug_ideal()) {
            Scalar s = -sgn(A.deg(kf.m) - 1);
            for (const auto& [m2, c] : A.mul(kf.m, a)) {
                HKey nk{kf.word, m2};
                nk.word.push_back(a);
                hv_add(out, nk, s * c * cf);
            }
            // mu o_1 f: word ((a,) + wf), circle sign (-1)^{(tf-1)(|a|-1)}
            // times the mu coefficient (-1)^{|a|-1}
            Scalar s2 = -sgn(tf * (A.deg(a) - 1));
            for (const auto& [m2, c] : A.mul(a, kf.m)) {
                HKey nk{{a}, m2};
                nk.word.insert(nk.word.end(), kf.word.begin(), kf.word.end());
                hv_add(out, nk, s2 * c * cf);
            }
        }
        // + (-1)^{tf-1} f o mu: replace wf[i] by pairs (x, y), coefficient
        // (-1)^{sdeg(wf[:i]) + |x| - 1} times the structure constant
        for (size_t i = 0; i < kf.word.size(); ++i) {
            int prefix = sdeg_of(A, kf.word, i);
            for (int x : A.aug_ideal())
                for (int y : A.aug_ideal()) {
                    if (A.deg(x) + A.deg(y) != A.deg(kf.word[i])) continue;
                    auto p = A.mul(x, y);
                    auto it = p.find(kf.word[i]);
                    if (it == p.end()) continue;
                    Scalar s = sgn(tf - 1 + prefix + A.deg(x) - 1);
                    HKey nk{{}, kf.m};
                    nk.word.assign(kf.word.begin(), kf.word.begin() + i);
                    nk.word.push_back(x);
                    nk.word.push_back(y);
                    nk.word.insert(nk.word.end(), kf.word.begin() + i + 1,
                                   kf.word.end());
                    hv_add(out, nk, s * it->second * cf);
                }
        }
    }
    return out;
}

std::vector<int> GradedRingPresentation::hilbert(Window w) const {
    std::vector<int> out;
    for (int t = w.lo; t <= w.hi; ++t) {
        auto it = dims.find(t);
        out.push_back(it == dims.end() ? 0 : it->second);
    }
    return out;
}

std::vector<std::tuple<int, int, int, int>>
GradedRingPresentation::product_pattern() const {
    std::vector<std::tuple<int, int, int, int>> out;
    for (const auto& [k, v] : products)
        if (!v.empty()) out.push_back(k);
    return out;
}

GradedRingPresentation ring_of(const HochschildComplex& h) {
    GradedRingPresentation out;
    out.field = h.algebra->field;
    out.window = h.window;
    auto coh = cohomology(h.cx, h.window);
    for (const auto& hd : coh) {
        out.dims[hd.degree] = hd.dimension;
        out.representatives[hd.degree] = hd.representatives;
    }
    if (!h.module->is_algebra) return out;  // no ring structure
    for (const auto& [ti, ri] : out.representatives)
        for (const auto& [tj, rj] : out.representatives) {
            int t = ti + tj;
            if (!h.window.contains(t)) continue;
            auto reps_it = out.representatives.find(t);
            if (reps_it == out.representatives.end()) continue;
            for (size_t i = 0; i < ri.size(); ++i)
                for (size_t j = 0; j < rj.size(); ++j) {
                    HVec prod = cup(h, h.from_coords(ti, ri[i]),
                                    h.from_coords(tj, rj[j]));
                    auto coords = class_coordinates(
                        h.cx, t, reps_it->second, h.to_coords(t, prod));
                    if (!coords)
                        throw InputError(
                            "cup product of cocycles is not a cocycle class "
                            "(internal error)");
                    out.products[{ti, static_cast<int>(i), tj,
                                  static_cast<int>(j)}] = *coords;
                }
        }
    return out;
}

GradedRingPresentation hh_cohomology(std::shared_ptr<const DGAlgebra> a,
                                     std::shared_ptr<const DGBimodule> m,
                                     Window window) {
    return ring_of(hochschild_complex(a, m, window));
}

std::map<int, int> hh_homology(std::shared_ptr<const DGAlgebra> a,
                               std::shared_ptr<const DGBimodule> m,
                               Window window) {
    require_finite(window, "hh_homology");
    const DGAlgebra& A = *a;
    const DGBimodule& M = *m;
    if (A.unit < 0) throw InputError("hh_homology: no unit");
    const int plo = window.lo - 1, phi = window.hi + 1;

    auto mdegs = M.basis.populated_degrees();
    if (mdegs.empty()) return {};
    // chain degree t = |m| + sdeg(word): sdeg in [plo - max_m, phi - min_m]
    int smin = plo - mdegs.back(), smax = phi - mdegs.front();
    Pool pool = make_pool(A, "hh_homology");
    check_guards(A, M, pool, smin, smax, "hh_homology");

    struct Chain {
        int m;
        std::vector<int> word;
        auto operator<=>(const Chain&) const = default;
    };
    std::map<int, std::vector<Chain>> by_degree;
    std::vector<int> cur;
    enumerate_words(pool, smin, smax, cur, 0,
                    [&](const std::vector<int>& word, int sd) {
                        for (int md : mdegs) {
                            int t = md + sd;
                            if (t < plo || t > phi) continue;
                            for (int mi : M.basis.in_degree(md))
                                by_degree[t].push_back(Chain{mi, word});
                        }
                    });
    GradedVectorSpace sp(A.field, Window{plo, phi});
    std::map<Chain, int> index;
    for (auto& [t, cs] : by_degree) {
        std::sort(cs.begin(), cs.end());
        for (const auto& c : cs) {
            index[c] = sp.dim(t);
            std::string lbl = M.basis.name(c.m) + "(x)[";
            for (size_t i = 0; i < c.word.size(); ++i) {
                if (i) lbl += "|";
                lbl += A.basis.name(c.word[i]);
            }
            lbl += "]";
            sp.add_basis_element(t, lbl);
        }
    }

    auto sgn = [&](int e) { return Scalar(A.field, e % 2 != 0 ? -1 : 1); };
    GradedMap d(sp, sp, 1);
    auto add = [&](int t, int src, const Chain& dst, const Scalar& c) {
        auto it = index.find(dst);
        if (it == index.end())
            throw InsufficientTruncation(
                "hh_homology: boundary image escaped the range");
        d.add_entry(t, src, it->second, c);
    };
    for (const auto& [t, cs] : by_degree) {
        if (t >= phi) continue;
        for (const auto& ch : cs) {
            const auto& w = ch.word;
            const int k = static_cast<int>(w.size());
            const int dm = M.deg(ch.m);
            int src = index.at(ch);
            // e[i] = sdeg of the first i letters (module element excluded)
            std::vector<int> e(k + 1, 0);
            for (int i = 0; i < k; ++i) e[i + 1] = e[i] + A.deg(w[i]) - 1;
            // d_M m
            for (const auto& [m2, c] : M.d(ch.m))
                add(t, src, Chain{m2, w}, c);
            // d(a_i): (-1)^{|m| + e_{i-1} + 1}
            for (int i = 0; i < k; ++i) {
                if (!A.window.contains(A.deg(w[i]) + 1))
                    throw InsufficientTruncation(
                        "hh_homology: letter differential outside the "
                        "algebra window");
                Scalar s = sgn(dm + e[i] + 1);
                for (const auto& [b, c] : A.d(w[i])) {
                    if (b == A.unit) continue;
                    Chain c2 = ch;
                    c2.word[i] = b;
                    add(t, src, c2, s * c);
                }
            }
            if (k == 0) continue;
            // face0: (m.a1), sign (-1)^{|m|}
            {
                Scalar s = sgn(dm);
                std::vector<int> rest(w.begin() + 1, w.end());
                for (const auto& [m2, c] : M.act_right(ch.m, w[0]))
                    add(t, src, Chain{m2, rest}, s * c);
            }
            // merges: (-1)^{|m| + e_{i+1}} (prefix includes the first merged
            // letter)
            for (int i = 0; i + 1 < k; ++i) {
                if (!A.window.contains(A.deg(w[i]) + A.deg(w[i + 1])))
                    throw InsufficientTruncation(
                        "hh_homology: merge product outside the algebra "
                        "window");
                Scalar s = sgn(dm + e[i + 1]);
                for (const auto& [z, c] : A.mul(w[i], w[i + 1])) {
                    if (z == A.unit) continue;
                    Chain c2{ch.m, {}};
                    c2.word.assign(w.begin(), w.begin() + i);
                    c2.word.push_back(z);
                    c2.word.insert(c2.word.end(), w.begin() + i + 2, w.end());
                    add(t, src, c2, s * c);
                }
            }
            // wrap: (a_k . m) (x) a_1..a_{k-1},
            // sign (-1)^{|m| + e_{k-1} + 1 + |a_k| (|m| + e_{k-1})}
            {
                int ek1 = e[k - 1];
                Scalar s = sgn(dm + ek1 + 1 + A.deg(w[k - 1]) * (dm + ek1));
                std::vector<int> rest(w.begin(), w.end() - 1);
                for (const auto& [m2, c] : M.act_left(w[k - 1], ch.m))
                    add(t, src, Chain{m2, rest}, s * c);
            }
        }
    }
    CochainComplex cx(sp, d);
    std::map<int, int> out;
    for (const auto& hd : cohomology(cx, window)) out[hd.degree] = hd.dimension;
    return out;
}

DualizationResult dualization_map(const DGAlgebra& a, const DGBimodule& m,
                                  int k) {
    if (k < 0) throw InputError("dualization_map: negative degree");
    // domain: (dual Abar)^{(x)k} (x) M, graded by internal degree
    // |m| - sum |w_i|; target: the Hom basis in the same degree.  Both sides
    // are enumerated from the same finite letter set, so the map is a signed
    // bijection on basis elements.
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int len) {
        if (len == k) {
            words.push_back(cur);
            return;
        }
        for (int i : a.aug_ideal()) {
            cur.push_back(i);
            rec(len + 1);
            cur.pop_back();
        }
    };
    rec(0);

    GradedVectorSpace dom(a.field), tgt(a.field);
    struct Row {
        int degree, src, tgt;
        Scalar c;
    };
    std::vector<Row> rows;
    std::map<int, std::pair<int, int>> per_degree;  // degree -> (dims)
    std::map<int, int> dom_dim, tgt_dim;
    for (const auto& w : words)
        for (int mi = 0; mi < m.basis.size(); ++mi) {
            int s = m.deg(mi);
            for (int l : w) s -= a.deg(l);
            std::string wl;
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) wl += "|";
                wl += a.basis.name(w[i]);
            }
            dom.add_basis_element(
                s, "(" + wl + ")^(x)" + m.basis.name(mi));
            tgt.add_basis_element(s, "[" + wl + "]->" + m.basis.name(mi));
            // Koszul sign of evaluating e_1 (x) ... (x) e_k (x) m on the
            // word: each letter x_j moves past e_{j+1}..e_k and m
            int expo = 0;
            for (size_t j = 0; j < w.size(); ++j) {
                int right = m.deg(mi);
                for (size_t i = j + 1; i < w.size(); ++i) right -= a.deg(w[i]);
                expo += a.deg(w[j]) * right;
            }
            rows.push_back(Row{s, dom_dim[s], tgt_dim[s],
                               Scalar(a.field, expo % 2 != 0 ? -1 : 1)});
            ++dom_dim[s];
            ++tgt_dim[s];
        }
    DualizationResult out{GradedMap(dom, tgt, 0), true, {}};
    for (const auto& r : rows) out.map.add_entry(r.degree, r.src, r.tgt, r.c);
    for (const auto& [s, n] : dom_dim) {
        if (tgt_dim[s] != n || rank(out.map.block(s)) != n) {
            out.iso = false;
            out.failing_degrees.push_back(s);
        }
    }
    return out;
}

}  // namespace dgalg
