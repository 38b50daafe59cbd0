#include "dgalg/barcobar.hpp"

#include <algorithm>
#include <functional>

namespace dgalg {

namespace {
const std::vector<Word> kNoWords;

void wv_add(WordVec& v, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(w);
    if (it == v.end()) {
        v.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

// +1 if all shifted letter degrees are >= 1, -1 if all <= -1.
int letter_sign(const std::vector<int>& shifted, const std::string& what) {
    bool pos = true, neg = true;
    for (int s : shifted) {
        if (s < 1) pos = false;
        if (s > -1) neg = false;
    }
    if (pos) return 1;
    if (neg) return -1;
    throw InputError(what +
                     " requires shifted letter degrees of one strict sign "
                     "(all >= 1 or all <= -1); mixed or zero shifts would "
                     "make degree components infinite-dimensional");
}

struct LetterPool {
    std::vector<int> ids;      // basis indices usable as letters
    std::vector<int> shifted;  // parallel shifted degrees
    int sigma = 1;
};

// all letter sequences whose shifted-degree sum stays within the budget
void enumerate_words(const LetterPool& pool, int budget_lo, int budget_hi,
                     std::vector<int>& cur, int cur_sum,
                     const std::function<void(const std::vector<int>&, int)>& emit) {
    emit(cur, cur_sum);
    for (size_t k = 0; k < pool.ids.size(); ++k) {
        int s = cur_sum + pool.shifted[k];
        if (pool.sigma > 0 ? s > budget_hi : s < budget_lo) continue;
        cur.push_back(pool.ids[k]);
        enumerate_words(pool, budget_lo, budget_hi, cur, s, emit);
        cur.pop_back();
    }
}

int require_finite(Window w, const std::string& what) {
    if (w.lo == INT_MIN || w.hi == INT_MAX || w.empty())
        throw InputError(what + " requires a finite nonempty window, got " +
                         w.to_string());
    return 0;
}
}  // namespace

SVec DGComodule::d(int i) const {
    auto it = differentials.find(i);
    return it == differentials.end() ? SVec{} : it->second;
}

DGComodule DGComodule::over_self(std::shared_ptr<const DGCoalgebra> s) {
    DGComodule out;
    out.coalgebra = s;
    out.field = s->field;
    out.basis = s->basis;
    out.window = s->window;
    out.differentials = s->differentials;
    for (int z = 0; z < s->basis.size(); ++z)
        for (const auto& [x, y, c] : s->delta(z)) {
            out.right_coaction[z].emplace_back(x, y, c);  // p' = x, s = y
            out.left_coaction[z].emplace_back(x, y, c);   // s = x, q' = y
        }
    return out;
}

// ---------------------------------------------------------------------------
// bar

const std::vector<Word>& BarComplex::words(int degree) const {
    auto it = words_by_degree.find(degree);
    return it == words_by_degree.end() ? kNoWords : it->second;
}

int BarComplex::word_index(const Word& w) const {
    auto it = index_in_degree.find(w);
    return it == index_in_degree.end() ? -1 : it->second;
}

int BarComplex::word_degree(const Word& w) const {
    int t = 0;
    if (left) t += left->deg(w.left);
    if (right) t += right->deg(w.right);
    for (int l : w.letters) t += algebra->deg(l) - 1;
    return t;
}

std::string BarComplex::word_label(const Word& w) const {
    std::string s;
    if (left) s += left->basis.name(w.left);
    s += "[";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += "|";
        s += algebra->basis.name(w.letters[i]);
    }
    s += "]";
    if (right) s += right->basis.name(w.right);
    return s;
}

WordVec BarComplex::d_word(const Word& w) const {
    const DGAlgebra& R = *algebra;
    const int n = static_cast<int>(w.letters.size());
    WordVec out;
    // prefix degrees e[i] = |m| + sum_{j<=i} (|l_j| - 1)
    std::vector<int> e(n + 1);
    e[0] = left ? left->deg(w.left) : 0;
    for (int i = 0; i < n; ++i) e[i + 1] = e[i] + R.deg(w.letters[i]) - 1;
    auto sgn = [&](int k) { return Scalar(R.field, k % 2 != 0 ? -1 : 1); };

    // d_M m
    if (left)
        for (const auto& [m2, c] : left->d(w.left))
            wv_add(out, Word{m2, w.letters, w.right}, c);
    // d(l_i), sign (-1)^{e_{i-1}+1}
    for (int i = 0; i < n; ++i) {
        if (!R.window.contains(R.deg(w.letters[i]) + 1))
            throw InsufficientTruncation(
                "bar differential needs d of a letter in degree " +
                std::to_string(R.deg(w.letters[i])) +
                " outside the algebra window " + R.window.to_string());
        Scalar s = sgn(e[i] + 1);
        for (const auto& [l2, c] : R.d(w.letters[i])) {
            if (l2 == R.unit) continue;
            Word w2 = w;
            w2.letters[i] = l2;
            wv_add(out, w2, s * c);
        }
    }
    // d_N p, sign (-1)^{e_n}
    if (right) {
        Scalar s = sgn(e[n]);
        for (const auto& [p2, c] : right->d(w.right))
            wv_add(out, Word{w.left, w.letters, p2}, s * c);
    }
    if (n == 0) return out;
    // face0: m . l1, sign (-1)^{e_0}; for k-end the augmentation kills it
    if (left) {
        int rd = left->deg(w.left) + R.deg(w.letters[0]);
        if (!left->window.contains(rd))
            throw InsufficientTruncation(
                "bar face needs the left module in degree " +
                std::to_string(rd) + " outside its window " +
                left->window.to_string());
        Scalar s = sgn(e[0]);
        std::vector<int> rest(w.letters.begin() + 1, w.letters.end());
        for (const auto& [m2, c] : left->act_right(w.left, w.letters[0]))
            wv_add(out, Word{m2, rest, w.right}, s * c);
    }
    // merges, sign (-1)^{e_{i+1}} (prefix including the first merged letter)
    for (int i = 0; i + 1 < n; ++i) {
        int pd = R.deg(w.letters[i]) + R.deg(w.letters[i + 1]);
        if (!R.window.contains(pd))
            throw InsufficientTruncation(
                "bar merge needs a product in degree " + std::to_string(pd) +
                " outside the algebra window " + R.window.to_string());
        Scalar s = sgn(e[i + 1]);
        for (const auto& [l2, c] : R.mul(w.letters[i], w.letters[i + 1])) {
            if (l2 == R.unit) continue;
            Word w2{w.left, {}, w.right};
            w2.letters.assign(w.letters.begin(), w.letters.begin() + i);
            w2.letters.push_back(l2);
            w2.letters.insert(w2.letters.end(), w.letters.begin() + i + 2,
                              w.letters.end());
            wv_add(out, w2, s * c);
        }
    }
    // faceN: l_n . p, sign (-1)^{e_{n-1}+1}
    if (right) {
        int rd = R.deg(w.letters[n - 1]) + right->deg(w.right);
        if (!right->window.contains(rd))
            throw InsufficientTruncation(
                "bar face needs the right module in degree " +
                std::to_string(rd) + " outside its window " +
                right->window.to_string());
        Scalar s = sgn(e[n - 1] + 1);
        std::vector<int> rest(w.letters.begin(), w.letters.end() - 1);
        for (const auto& [p2, c] : right->act_left(w.letters[n - 1], w.right))
            wv_add(out, Word{w.left, rest, p2}, s * c);
    }
    return out;
}

BarComplex bar(std::shared_ptr<const DGBimodule> m,
               std::shared_ptr<const DGAlgebra> r,
               std::shared_ptr<const DGBimodule> n, Window window) {
    require_finite(window, "bar");
    const DGAlgebra& R = *r;
    if (R.unit < 0) throw InputError("bar: algebra has no unit");
    for (int i : R.basis.in_degree(0))
        if (i != R.unit)
            throw InputError("bar: algebra is not connected");
    for (const auto& [i, v] : R.differentials)
        if (v.count(R.unit))
            throw InputError(
                "bar: d(" + R.basis.name(i) +
                ") hits the unit, so the augmentation is not a chain map");

    BarComplex B;
    B.algebra = r;
    B.left = m;
    B.right = n;
    B.window = window;
    const int plo = window.lo - 1, phi = window.hi + 1;

    LetterPool pool;
    for (int i : R.aug_ideal()) {
        pool.ids.push_back(i);
        pool.shifted.push_back(R.deg(i) - 1);
    }
    pool.sigma = pool.ids.empty() ? 1 : letter_sign(pool.shifted, "bar");

    auto end_degrees = [&](const std::shared_ptr<const DGBimodule>& e) {
        return e ? e->basis.populated_degrees() : std::vector<int>{0};
    };
    std::vector<int> mds = end_degrees(m), nds = end_degrees(n);
    if (mds.empty() || nds.empty()) {
        // zero module: empty complex
        GradedVectorSpace sp(R.field, Window{plo, phi});
        B.cx = CochainComplex(sp, GradedMap(sp, sp, 1));
        return B;
    }
    int min_end = mds.front() + nds.front();
    int max_end = mds.back() + nds.back();
    int smin = plo - max_end, smax = phi - min_end;

    // completeness of the letter pool and product/differential tables
    if (pool.sigma > 0 && smax >= 1) {
        Window need{2, smax + 2};
        if (!R.window.covers(need))
            throw InsufficientTruncation(
                "bar over " + window.to_string() + " needs the algebra on " +
                need.to_string() + " but it is trusted on " +
                R.window.to_string());
    } else if (pool.sigma < 0 && smin <= -1) {
        Window need{smin + 1, 0};
        if (!R.window.covers(need))
            throw InsufficientTruncation(
                "bar over " + window.to_string() + " needs the algebra on " +
                need.to_string() + " but it is trusted on " +
                R.window.to_string());
    }

    // enumerate words
    std::vector<int> cur;
    enumerate_words(
        pool, smin, smax, cur, 0,
        [&](const std::vector<int>& letters, int ssum) {
            B.max_word_length =
                std::max(B.max_word_length, static_cast<int>(letters.size()));
            for (int md : mds)
                for (int nd : nds) {
                    int t = md + ssum + nd;
                    if (t < plo || t > phi) continue;
                    const auto& mi =
                        m ? m->basis.in_degree(md) : std::vector<int>{-1};
                    const auto& ni =
                        n ? n->basis.in_degree(nd) : std::vector<int>{-1};
                    for (int a : mi)
                        for (int b : ni)
                            B.words_by_degree[t].push_back(Word{a, letters, b});
                }
        });

    GradedVectorSpace sp(R.field, Window{plo, phi});
    for (auto& [t, ws] : B.words_by_degree) {
        std::sort(ws.begin(), ws.end());
        for (const auto& w : ws) {
            B.index_in_degree[w] = sp.dim(t);
            sp.add_basis_element(t, B.word_label(w));
        }
    }
    GradedMap d(sp, sp, 1);
    for (const auto& [t, ws] : B.words_by_degree) {
        if (t >= phi) continue;  // differential leaves the populated range
        for (const auto& w : ws)
            for (const auto& [w2, c] : B.d_word(w)) {
                int j = B.word_index(w2);
                if (j < 0)
                    throw InsufficientTruncation(
                        "bar: differential image escaped the populated range");
                d.add_entry(t, B.index_in_degree.at(w), j, c);
            }
    }
    B.cx = CochainComplex(sp, d);
    return B;
}

DGCoalgebra BarComplex::to_coalgebra() const {
    if (left || right)
        throw InputError("bar coalgebra structure requires k coefficients");
    const int plo = window.lo - 1, phi = window.hi + 1;
    if (!(plo <= 0 && 0 <= phi))
        throw InputError(
            "bar coalgebra needs degree 0 (the empty word) in its range");
    DGCoalgebra S;
    S.field = algebra->field;
    S.window = Window{plo, phi};
    std::map<Word, int> flat;
    for (const auto& [t, ws] : words_by_degree)
        for (const auto& w : ws) flat[w] = S.basis.add(t, word_label(w));
    S.grouplike = flat.at(Word{});
    for (const auto& [w, z] : flat) {
        // deconcatenation, no signs
        const auto& ls = w.letters;
        for (size_t i = 0; i <= ls.size(); ++i) {
            Word a{-1, std::vector<int>(ls.begin(), ls.begin() + i), -1};
            Word b{-1, std::vector<int>(ls.begin() + i, ls.end()), -1};
            auto ia = flat.find(a), ib = flat.find(b);
            if (ia == flat.end() || ib == flat.end())
                throw InsufficientTruncation(
                    "bar coalgebra: a deconcatenation part escaped the range");
            S.comult[z].emplace_back(ia->second, ib->second,
                                     Scalar::one(S.field));
        }
        if (word_degree(w) < phi) {
            SVec dv;
            for (const auto& [w2, c] : d_word(w)) svec_add(dv, flat.at(w2), c);
            if (!dv.empty()) S.differentials[z] = std::move(dv);
        }
    }
    return S;
}

// ---------------------------------------------------------------------------
// cobar

const std::vector<Word>& CobarComplex::words(int degree) const {
    auto it = words_by_degree.find(degree);
    return it == words_by_degree.end() ? kNoWords : it->second;
}

int CobarComplex::word_index(const Word& w) const {
    auto it = index_in_degree.find(w);
    return it == index_in_degree.end() ? -1 : it->second;
}

int CobarComplex::word_degree(const Word& w) const {
    int t = 0;
    if (left) t += left->deg(w.left);
    if (right) t += right->deg(w.right);
    for (int l : w.letters) t += coalgebra->deg(l) + 1;
    return t;
}

std::string CobarComplex::word_label(const Word& w) const {
    std::string s;
    if (left) s += left->basis.name(w.left);
    s += "<";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += "|";
        s += coalgebra->basis.name(w.letters[i]);
    }
    s += ">";
    if (right) s += right->basis.name(w.right);
    return s;
}

WordVec CobarComplex::d_word(const Word& w) const {
    const DGCoalgebra& S = *coalgebra;
    const int n = static_cast<int>(w.letters.size());
    WordVec out;
    // prefix degrees E[i] = |p| + sum_{j<=i} (|l_j| + 1)
    std::vector<int> E(n + 1);
    E[0] = left ? left->deg(w.left) : 0;
    for (int i = 0; i < n; ++i) E[i + 1] = E[i] + S.deg(w.letters[i]) + 1;
    auto sgn = [&](int k) { return Scalar(S.field, k % 2 != 0 ? -1 : 1); };

    // d_P p
    if (left)
        for (const auto& [p2, c] : left->d(w.left))
            wv_add(out, Word{p2, w.letters, w.right}, c);
    // d(l_i), sign (-1)^{E_{i-1}+1}
    for (int i = 0; i < n; ++i) {
        if (!S.window.contains(S.deg(w.letters[i]) + 1))
            throw InsufficientTruncation(
                "cobar differential needs d of a letter in degree " +
                std::to_string(S.deg(w.letters[i])) +
                " outside the coalgebra window " + S.window.to_string());
        Scalar s = sgn(E[i] + 1);
        for (const auto& [l2, c] : S.d(w.letters[i])) {
            if (l2 == S.grouplike) continue;
            Word w2 = w;
            w2.letters[i] = l2;
            wv_add(out, w2, s * c);
        }
    }
    // d_Q q, sign (-1)^{E_n}
    if (right) {
        Scalar s = sgn(E[n]);
        for (const auto& [q2, c] : right->d(w.right))
            wv_add(out, Word{w.left, w.letters, q2}, s * c);
    }
    // coface0: right coaction of P, rho(p) = sum p' ⊗ s, sign (-1)^{|p'|}
    if (left) {
        auto it = left->right_coaction.find(w.left);
        if (it != left->right_coaction.end())
            for (const auto& [p2, sL, c] : it->second) {
                if (sL == S.grouplike) continue;
                Scalar s = sgn(left->deg(p2));
                Word w2{p2, {}, w.right};
                w2.letters.reserve(w.letters.size() + 1);
                w2.letters.push_back(sL);
                w2.letters.insert(w2.letters.end(), w.letters.begin(),
                                  w.letters.end());
                wv_add(out, w2, s * c);
            }
    }
    // splits, sign (-1)^{E_{i-1} + |l'| + 1}
    for (int i = 0; i < n; ++i)
        for (const auto& [l1, l2, c] : S.delta_reduced(w.letters[i])) {
            Scalar s = sgn(E[i] + S.deg(l1) + 1);
            Word w2{w.left, {}, w.right};
            w2.letters.assign(w.letters.begin(), w.letters.begin() + i);
            w2.letters.push_back(l1);
            w2.letters.push_back(l2);
            w2.letters.insert(w2.letters.end(), w.letters.begin() + i + 1,
                              w.letters.end());
            wv_add(out, w2, s * c);
        }
    // cofaceN: left coaction of Q, rho(q) = sum s ⊗ q', sign (-1)^{E_n + 1}
    if (right) {
        auto it = right->left_coaction.find(w.right);
        if (it != right->left_coaction.end())
            for (const auto& [sL, q2, c] : it->second) {
                if (sL == S.grouplike) continue;
                Scalar s = sgn(E[n] + 1);
                Word w2{w.left, w.letters, q2};
                w2.letters.push_back(sL);
                wv_add(out, w2, s * c);
            }
    }
    return out;
}

CobarComplex cobar(std::shared_ptr<const DGComodule> p,
                   std::shared_ptr<const DGCoalgebra> s,
                   std::shared_ptr<const DGComodule> q, Window window,
                   int conilpotency_bound) {
    require_finite(window, "cobar");
    const DGCoalgebra& S = *s;
    if (S.grouplike < 0) throw InputError("cobar: coalgebra has no grouplike");
    if (!S.d(S.grouplike).empty())
        throw InputError(
            "cobar: d(grouplike) != 0, the coaugmentation is not a chain map");
    ConilpotencyResult con = conilpotency_degree(S, conilpotency_bound);
    if (!con.bounded)
        throw InputError(
            "cobar: conilpotency degree exceeds bound " +
            std::to_string(conilpotency_bound) +
            "; refusing (cobar word growth would not terminate)");

    CobarComplex C;
    C.coalgebra = s;
    C.left = p;
    C.right = q;
    C.window = window;
    const int plo = window.lo - 1, phi = window.hi + 1;

    LetterPool pool;
    for (int i : S.supp_ideal()) {
        pool.ids.push_back(i);
        pool.shifted.push_back(S.deg(i) + 1);
    }
    pool.sigma = pool.ids.empty() ? 1 : letter_sign(pool.shifted, "cobar");

    auto end_degrees = [&](const std::shared_ptr<const DGComodule>& e) {
        return e ? e->basis.populated_degrees() : std::vector<int>{0};
    };
    std::vector<int> pds = end_degrees(p), qds = end_degrees(q);
    if (pds.empty() || qds.empty()) {
        GradedVectorSpace sp(S.field, Window{plo, phi});
        C.cx = CochainComplex(sp, GradedMap(sp, sp, 1));
        return C;
    }
    int min_end = pds.front() + qds.front();
    int max_end = pds.back() + qds.back();
    int smin = plo - max_end, smax = phi - min_end;

    if (pool.sigma > 0 && smax >= 1) {
        Window need{0, smax};  // letters in [0, smax-1], d-targets one higher
        if (!S.window.covers(need))
            throw InsufficientTruncation(
                "cobar over " + window.to_string() + " needs the coalgebra on " +
                need.to_string() + " but it is trusted on " +
                S.window.to_string());
    } else if (pool.sigma < 0 && smin <= -1) {
        Window need{smin - 1, -1};
        if (!S.window.covers(need))
            throw InsufficientTruncation(
                "cobar over " + window.to_string() + " needs the coalgebra on " +
                need.to_string() + " but it is trusted on " +
                S.window.to_string());
    }

    std::vector<int> cur;
    enumerate_words(
        pool, smin, smax, cur, 0,
        [&](const std::vector<int>& letters, int ssum) {
            C.max_word_length =
                std::max(C.max_word_length, static_cast<int>(letters.size()));
            for (int pd : pds)
                for (int qd : qds) {
                    int t = pd + ssum + qd;
                    if (t < plo || t > phi) continue;
                    const auto& pi =
                        p ? p->basis.in_degree(pd) : std::vector<int>{-1};
                    const auto& qi =
                        q ? q->basis.in_degree(qd) : std::vector<int>{-1};
                    for (int a : pi)
                        for (int b : qi)
                            C.words_by_degree[t].push_back(Word{a, letters, b});
                }
        });

    GradedVectorSpace sp(S.field, Window{plo, phi});
    for (auto& [t, ws] : C.words_by_degree) {
        std::sort(ws.begin(), ws.end());
        for (const auto& w : ws) {
            C.index_in_degree[w] = sp.dim(t);
            sp.add_basis_element(t, C.word_label(w));
        }
    }
    GradedMap d(sp, sp, 1);
    for (const auto& [t, ws] : C.words_by_degree) {
        if (t >= phi) continue;
        for (const auto& w : ws)
            for (const auto& [w2, c] : C.d_word(w)) {
                int j = C.word_index(w2);
                if (j < 0)
                    throw InsufficientTruncation(
                        "cobar: differential image escaped the populated range");
                d.add_entry(t, C.index_in_degree.at(w), j, c);
            }
    }
    C.cx = CochainComplex(sp, d);
    return C;
}

DGAlgebra CobarComplex::to_algebra() const {
    if (left || right)
        throw InputError("cobar algebra structure requires k coefficients");
    const int plo = window.lo - 1, phi = window.hi + 1;
    if (!(plo <= 0 && 0 <= phi))
        throw InputError(
            "cobar algebra needs degree 0 (the empty word) in its range");
    DGAlgebra A;
    A.field = coalgebra->field;
    A.window = Window{plo, phi};
    std::map<Word, int> flat;
    for (const auto& [t, ws] : words_by_degree)
        for (const auto& w : ws) flat[w] = A.basis.add(t, word_label(w));
    A.unit = flat.at(Word{});
    for (const auto& [w1, i1] : flat)
        for (const auto& [w2, i2] : flat) {
            if (w1.letters.empty() || w2.letters.empty()) continue;  // unit
            int t = word_degree(w1) + word_degree(w2);
            if (t < plo || t > phi) continue;  // outside the trusted window
            Word cat{-1, w1.letters, -1};
            cat.letters.insert(cat.letters.end(), w2.letters.begin(),
                               w2.letters.end());
            auto it = flat.find(cat);
            if (it == flat.end())
                throw InsufficientTruncation(
                    "cobar algebra: concatenation escaped the range");
            A.products[{i1, i2}] = SVec{{it->second, Scalar::one(A.field)}};
        }
    for (const auto& [w, z] : flat)
        if (word_degree(w) < phi) {
            SVec dv;
            for (const auto& [w2, c] : d_word(w)) svec_add(dv, flat.at(w2), c);
            if (!dv.empty()) A.differentials[z] = std::move(dv);
        }
    return A;
}

// ---------------------------------------------------------------------------
// Koszul dual, duality witness, unit map

DGAlgebra koszul_dual(const DGAlgebra& r, Window window) {
    require_finite(window, "koszul_dual");
    Window reflected{-window.hi, -window.lo};
    auto rp = std::make_shared<DGAlgebra>(r);
    BarComplex B = bar(nullptr, rp, nullptr, reflected);
    return dualize_coalgebra(B.to_coalgebra());
}

namespace {
// lambda(w) = (-1)^{deg + sum_{i<j} s_i s_j} on bar words over R = S^;
// s_i = shifted letter degree, deg = sum s_i.
int witness_sign(const BarComplex& B, const Word& w) {
    const DGAlgebra& R = *B.algebra;
    int deg = 0, pairs = 0;
    std::vector<int> sh;
    for (int l : w.letters) sh.push_back(R.deg(l) - 1);
    for (size_t i = 0; i < sh.size(); ++i) {
        deg += sh[i];
        for (size_t j = i + 1; j < sh.size(); ++j) pairs += sh[i] * sh[j];
    }
    return ((deg + pairs) % 2 != 0) ? -1 : 1;
}
}  // namespace

DualityReport check_bar_cobar_duality(const DGCoalgebra& s, Window window,
                                      int flip_sign_at) {
    require_finite(window, "check_bar_cobar_duality");
    DualityReport rep;
    auto sp = std::make_shared<DGCoalgebra>(s);
    auto R = std::make_shared<DGAlgebra>(dualize_coalgebra(s));
    Window reflected{-window.hi, -window.lo};
    BarComplex B = bar(nullptr, R, nullptr, reflected);
    CobarComplex O = cobar(nullptr, sp, nullptr, window);

    // The witness pairs the bar word on letters x1^..xn^ with the cobar word
    // on x1..xn.  Collect signed matches; optionally flip one for testing.
    std::map<Word, int> lambda;
    int counter = 0;
    for (const auto& [t, ws] : B.words_by_degree)
        for (const auto& w : ws) {
            int sg = witness_sign(B, w);
            if (counter == flip_sign_at) sg = -sg;
            lambda[w] = sg;
            ++counter;
        }
    rep.bar_dim = counter;

    // bijection on basis: same letters (dual algebra keeps basis order), and
    // degrees negate
    int cob = 0;
    for (const auto& [t, ws] : O.words_by_degree) cob += (int)ws.size();
    rep.cobar_dim = cob;
    for (const auto& [t, ws] : B.words_by_degree)
        for (const auto& w : ws) {
            if (O.word_index(w) < 0) {
                rep.ok = false;
                rep.failure = "witness is not onto a cobar word for " +
                              B.word_label(w);
                return rep;
            }
        }
    if (rep.bar_dim != rep.cobar_dim) {
        rep.ok = false;
        rep.failure = "basis counts differ (" + std::to_string(rep.bar_dim) +
                      " bar words vs " + std::to_string(rep.cobar_dim) +
                      " cobar words)";
        return rep;
    }

    auto pair_eval = [&](const Word& w, const Word& x) {
        if (w.letters != x.letters) return Scalar::zero(s.field);
        return Scalar(s.field, lambda.at(w));
    };
    // chain map: <Phi(d_B w), x> = (-1)^{|w|} <Phi(w), d_O x>
    // (the dual differential convention d^(phi) = (-1)^{|phi|} phi ∘ d)
    const int bphi = -window.lo;  // top populated bar degree is -window.lo+1
    for (const auto& [t, ws] : B.words_by_degree) {
        if (t > bphi) continue;  // bar differential unknown past this
        for (const auto& w : ws) {
            WordVec dw = B.d_word(w);
            // the pairing is letterwise, so only cobar words x of degree
            // -(t+1) can meet either side
            for (const auto& x : O.words(-t - 1)) {
                Scalar lhs = Scalar::zero(s.field);
                for (const auto& [w2, c] : dw) lhs += c * pair_eval(w2, x);
                Scalar rhs = Scalar::zero(s.field);
                for (const auto& [x2, c] : O.d_word(x))
                    rhs += c * pair_eval(w, x2);
                if (t % 2 != 0) rhs = -rhs;
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.failure = "chain-map check fails on bar word " +
                                  B.word_label(w) + " against " +
                                  O.word_label(x);
                    return rep;
                }
            }
        }
    }
    // comultiplicativity: <Phi(w), u.v> = sum over deconcatenations w1 w2 of
    // (-1)^{|w2||u|} <Phi(w1), u> <Phi(w2), v>
    for (const auto& [t, ws] : B.words_by_degree)
        for (const auto& w : ws) {
            const auto& ls = w.letters;
            for (size_t cut = 0; cut <= ls.size(); ++cut) {
                Word u{-1, std::vector<int>(ls.begin(), ls.begin() + cut), -1};
                Word v{-1, std::vector<int>(ls.begin() + cut, ls.end()), -1};
                if (O.word_index(u) < 0 || O.word_index(v) < 0) continue;
                int lhs = lambda.at(w);  // u.v concatenates back to w
                int rhs = 0;
                for (size_t i = 0; i <= ls.size(); ++i) {
                    Word w1{-1, std::vector<int>(ls.begin(), ls.begin() + i),
                            -1};
                    Word w2{-1, std::vector<int>(ls.begin() + i, ls.end()), -1};
                    if (lambda.find(w1) == lambda.end() ||
                        lambda.find(w2) == lambda.end())
                        continue;
                    if (w1.letters != u.letters || w2.letters != v.letters)
                        continue;
                    int p1 = lambda.at(w1), p2 = lambda.at(w2);
                    int sg = (B.word_degree(w2) * O.word_degree(u)) % 2 != 0
                                 ? -1
                                 : 1;
                    rhs += sg * p1 * p2;
                }
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.failure = "comultiplicativity fails on " +
                                  B.word_label(w) + " at cut " +
                                  std::to_string(cut);
                    return rep;
                }
            }
        }
    return rep;
}

UnitMapReport bar_cobar_unit(const DGAlgebra& r, Window window) {
    require_finite(window, "bar_cobar_unit");
    UnitMapReport rep;
    rep.certified = window;
    auto rp = std::make_shared<DGAlgebra>(r);
    // generous bar range so that every needed cobar letter (a bar word) and
    // its differential are present
    int lo = std::min(window.lo, 0) - 2, hi = std::max(window.hi, 0) + 2;
    BarComplex B = bar(nullptr, rp, nullptr, Window{lo, hi});
    auto SB = std::make_shared<DGCoalgebra>(B.to_coalgebra());
    CobarComplex O = cobar(nullptr, SB, nullptr, window);
    DGAlgebra OA = O.to_algebra();
    CochainComplex oc = OA.complex();

    // unit map on basis: x (non-unit) -> -<[x]>, 1 -> empty word.  The minus
    // sign makes the map multiplicative up to coboundary: the cobar
    // differential gives d<[x|y]> = (-1)^{|x|} (<[xy]> + <[x]|[y]>) + ...,
    // so <[xy]> = -<[x]><[y]> in cohomology.
    auto image_of = [&](int x) -> SVec {
        SVec out;
        if (x == r.unit) {
            out.emplace(OA.basis.index_of("<>"), Scalar::one(r.field));
            return out;
        }
        // the cobar letter is the bar word [x]
        std::string lbl = "<[" + r.basis.name(x) + "]>";
        int idx = OA.basis.index_of(lbl);
        if (idx >= 0) out.emplace(idx, -Scalar::one(r.field));
        return out;
    };

    // chain map on basis elements whose image degree stays in range
    for (int x = 0; x < r.basis.size(); ++x) {
        int dx = r.deg(x);
        if (!window.contains(dx) || !window.contains(dx + 1)) continue;
        SVec lhs;  // u(d x)
        for (const auto& [y, c] : r.d(x)) svec_axpy(lhs, c, image_of(y));
        SVec rhs;  // d u(x)
        for (const auto& [z, c] : image_of(x)) {
            for (const auto& [z2, c2] : OA.d(z)) svec_add(rhs, z2, c * c2);
        }
        SVec diff = lhs;
        for (const auto& [i, c] : rhs) svec_add(diff, i, -c);
        if (!diff.empty()) {
            rep.ok = rep.chain_map_ok = false;
            rep.failure = "unit map fails to commute with d on '" +
                          r.basis.name(x) + "'";
            return rep;
        }
    }

    // multiplicative up to coboundary
    for (int x = 0; x < r.basis.size(); ++x)
        for (int y = 0; y < r.basis.size(); ++y) {
            int t = r.deg(x) + r.deg(y);
            if (!window.contains(t) || !r.window.contains(t)) continue;
            if (!window.contains(t - 1)) continue;  // coboundary test needs it
            SVec uxy;
            for (const auto& [z, c] : r.mul(x, y)) svec_axpy(uxy, c, image_of(z));
            // u(x) . u(y) = concatenation
            SVec prod;
            for (const auto& [a, ca] : image_of(x))
                for (const auto& [b, cb] : image_of(y))
                    for (const auto& [z, cz] : OA.mul(a, b))
                        svec_add(prod, z, ca * cb * cz);
            SVec diff = uxy;
            for (const auto& [i, c] : prod) svec_add(diff, i, -c);
            if (diff.empty()) continue;
            // translate flat indices to the degree-t coordinates
            SVec local;
            for (const auto& [i, c] : diff) {
                const auto& in_deg = OA.basis.in_degree(OA.basis.degree(i));
                int pos = static_cast<int>(
                    std::find(in_deg.begin(), in_deg.end(), i) - in_deg.begin());
                if (OA.basis.degree(i) != t) {
                    rep.ok = rep.multiplicative_up_to_coboundary = false;
                    rep.failure = "unit map product defect is inhomogeneous";
                    return rep;
                }
                local.emplace(pos, c);
            }
            if (!is_coboundary(oc, t, local)) {
                rep.ok = rep.multiplicative_up_to_coboundary = false;
                rep.failure = "unit map is not multiplicative up to "
                              "coboundary on (" + r.basis.name(x) + ", " +
                              r.basis.name(y) + ")";
                return rep;
            }
        }

    // induced map on cohomology is a graded isomorphism
    CochainComplex rc = r.complex();
    Window rwin = window.intersect(r.window.shrink(1, 1));
    auto hr = cohomology(rc, rwin);
    auto ho = cohomology(oc, rwin);
    for (size_t k = 0; k < hr.size(); ++k) {
        int t = hr[k].degree;
        rep.h_dims[t] = {hr[k].dimension, ho[k].dimension};
        if (hr[k].dimension != ho[k].dimension) {
            rep.ok = rep.induced_iso = false;
            rep.failure = "cohomology dimensions differ in degree " +
                          std::to_string(t);
            return rep;
        }
        if (hr[k].dimension == 0) continue;
        // matrix of induced classes must have full rank
        SparseMatrix M(ho[k].dimension, hr[k].dimension, r.field);
        for (int j = 0; j < hr[k].dimension; ++j) {
            // rep j lives in degree-t coordinates of r's complex
            SVec v;  // image in OA flat indices
            const auto& rin = r.basis.in_degree(t);
            for (const auto& [pos, c] : hr[k].representatives[j]) {
                int flat = rin[pos];
                svec_axpy(v, c, image_of(flat));
            }
            SVec local;
            for (const auto& [i, c] : v) {
                const auto& in_deg = OA.basis.in_degree(t);
                int pos = static_cast<int>(
                    std::find(in_deg.begin(), in_deg.end(), i) -
                    in_deg.begin());
                local.emplace(pos, c);
            }
            auto coords =
                class_coordinates(oc, t, ho[k].representatives, local);
            if (!coords) {
                rep.ok = rep.induced_iso = false;
                rep.failure = "induced class is not a cocycle in degree " +
                              std::to_string(t);
                return rep;
            }
            for (const auto& [i, c] : *coords) M.set(i, j, c);
        }
        if (rank(M) != hr[k].dimension) {
            rep.ok = rep.induced_iso = false;
            rep.failure = "induced map on cohomology is not injective in "
                          "degree " + std::to_string(t);
            return rep;
        }
    }
    return rep;
}

}  // namespace dgalg
