#include "dgalg/dga.hpp"

#include <algorithm>

namespace dgalg {

int Basis::add(int degree, const std::string& name) {
    if (index_.count(name))
        throw InputError("duplicate basis name '" + name + "'");
    int i = size();
    degrees_.push_back(degree);
    names_.push_back(name);
    index_[name] = i;
    by_degree_[degree].push_back(i);
    return i;
}

int Basis::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& Basis::in_degree(int d) const {
    static const std::vector<int> kEmpty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? kEmpty : it->second;
}

std::vector<int> Basis::populated_degrees() const {
    std::vector<int> out;
    for (const auto& [d, v] : by_degree_)
        if (!v.empty()) out.push_back(d);
    return out;
}

GradedVectorSpace Basis::to_space(const Field& f, Window w) const {
    GradedVectorSpace out(f, w);
    for (int d : populated_degrees())
        for (int i : in_degree(d)) out.add_basis_element(d, names_[i]);
    return out;
}

namespace {
const SVec kEmptySVec;

// basis-indexed table lookup helpers
const SVec& table_get(const std::map<std::pair<int, int>, SVec>& t, int i,
                      int j) {
    auto it = t.find({i, j});
    return it == t.end() ? kEmptySVec : it->second;
}
const SVec& table_get(const std::map<int, SVec>& t, int i) {
    auto it = t.find(i);
    return it == t.end() ? kEmptySVec : it->second;
}

// position of basis index i within its degree's ordered list
int pos_in_degree(const Basis& b, int i) {
    const auto& v = b.in_degree(b.degree(i));
    return static_cast<int>(std::find(v.begin(), v.end(), i) - v.begin());
}

template <class Obj>
CochainComplex complex_of(const Obj& o) {
    GradedVectorSpace sp = o.space();
    GradedMap d(sp, sp, 1);
    for (int i = 0; i < o.basis.size(); ++i) {
        for (const auto& [j, c] : o.d(i)) {
            if (o.basis.degree(j) != o.basis.degree(i) + 1)
                throw InputError("differential of '" + o.basis.name(i) +
                                 "' is not homogeneous of degree +1");
            d.add_entry(o.basis.degree(i), pos_in_degree(o.basis, i),
                        pos_in_degree(o.basis, j), c);
        }
    }
    return CochainComplex(sp, d);
}
}  // namespace

SVec DGAlgebra::mul(int i, int j) const {
    if (i == unit) return SVec{{j, Scalar::one(field)}};
    if (j == unit) return SVec{{i, Scalar::one(field)}};
    return table_get(products, i, j);
}

SVec DGAlgebra::d(int i) const { return table_get(differentials, i); }

std::vector<int> DGAlgebra::aug_ideal() const {
    std::vector<int> out;
    for (int i = 0; i < basis.size(); ++i)
        if (i != unit) out.push_back(i);
    return out;
}

void DGAlgebra::set_product(int i, int j, SVec v) {
    if (v.empty())
        products.erase({i, j});
    else
        products[{i, j}] = std::move(v);
}

void DGAlgebra::set_differential(int i, SVec v) {
    if (v.empty())
        differentials.erase(i);
    else
        differentials[i] = std::move(v);
}

CochainComplex DGAlgebra::complex() const { return complex_of(*this); }

const std::vector<std::tuple<int, int, Scalar>>& DGCoalgebra::delta(
    int z) const {
    static const std::vector<std::tuple<int, int, Scalar>> kEmpty;
    auto it = comult.find(z);
    return it == comult.end() ? kEmpty : it->second;
}

std::vector<std::tuple<int, int, Scalar>> DGCoalgebra::delta_reduced(
    int z) const {
    std::vector<std::tuple<int, int, Scalar>> out;
    for (const auto& [x, y, c] : delta(z))
        if (x != grouplike && y != grouplike) out.emplace_back(x, y, c);
    return out;
}

SVec DGCoalgebra::d(int i) const { return table_get(differentials, i); }

std::vector<int> DGCoalgebra::supp_ideal() const {
    std::vector<int> out;
    for (int i = 0; i < basis.size(); ++i)
        if (i != grouplike) out.push_back(i);
    return out;
}

CochainComplex DGCoalgebra::complex() const { return complex_of(*this); }

SVec DGBimodule::act_left(int a, int m) const {
    if (algebra && a == algebra->unit) return SVec{{m, Scalar::one(field)}};
    return table_get(left_action, a, m);
}

SVec DGBimodule::act_right(int m, int a) const {
    if (algebra && a == algebra->unit) return SVec{{m, Scalar::one(field)}};
    return table_get(right_action, m, a);
}

SVec DGBimodule::mul(int i, int j) const {
    if (!is_algebra)
        throw InputError("coefficient module is not a bimodule algebra");
    if (i == unit) return SVec{{j, Scalar::one(field)}};
    if (j == unit) return SVec{{i, Scalar::one(field)}};
    return table_get(products, i, j);
}

SVec DGBimodule::d(int i) const { return table_get(differentials, i); }

CochainComplex DGBimodule::complex() const { return complex_of(*this); }

DGBimodule DGBimodule::over_self(std::shared_ptr<const DGAlgebra> a) {
    DGBimodule m;
    m.algebra = a;
    m.field = a->field;
    m.basis = a->basis;
    m.window = a->window;
    m.differentials = a->differentials;
    m.is_algebra = true;
    m.unit = a->unit;
    m.products = a->products;
    for (int i = 0; i < a->basis.size(); ++i)
        for (int j = 0; j < a->basis.size(); ++j) {
            SVec p = a->mul(i, j);
            if (p.empty()) continue;
            m.left_action[{i, j}] = p;
            m.right_action[{i, j}] = p;
        }
    return m;
}

// ---------------------------------------------------------------------------
// validation

namespace {
bool svec_equal(const SVec& a, const SVec& b) { return a == b; }

SVec scale(const SVec& v, const Scalar& c) {
    SVec out;
    for (const auto& [i, x] : v) svec_add(out, i, c * x);
    return out;
}

SVec svec_sub(const SVec& a, const SVec& b) {
    SVec out = a;
    for (const auto& [i, x] : b) svec_add(out, i, -x);
    return out;
}
}  // namespace

ValidationReport validate(const DGAlgebra& a) {
    ValidationReport rep;
    const int n = a.basis.size();
    if (a.unit < 0 || a.unit >= n) {
        rep.fail("no unit element");
        return rep;
    }
    if (a.deg(a.unit) != 0) rep.fail("unit is not in degree 0");
    // connectedness: degree 0 is exactly the unit line
    for (int i : a.basis.in_degree(0))
        if (i != a.unit)
            rep.fail("not connected: extra degree-0 basis element '" +
                     a.basis.name(i) + "'");
    // homogeneity of tables
    for (const auto& [key, v] : a.products) {
        auto [i, j] = key;
        for (const auto& [z, c] : v)
            if (a.deg(z) != a.deg(i) + a.deg(j))
                rep.fail("product " + a.basis.name(i) + "*" + a.basis.name(j) +
                         " has component '" + a.basis.name(z) +
                         "' in the wrong degree");
    }
    for (const auto& [i, v] : a.differentials)
        for (const auto& [z, c] : v) {
            if (a.deg(z) != a.deg(i) + 1)
                rep.fail("d(" + a.basis.name(i) + ") has component '" +
                         a.basis.name(z) + "' in the wrong degree");
            if (z == a.unit)
                rep.fail("d(" + a.basis.name(i) +
                         ") hits the unit: the augmentation is not a chain "
                         "map");
        }
    if (!rep.ok) return rep;

    auto trusted = [&](int d) { return a.window.contains(d); };
    // d^2 = 0
    for (int i = 0; i < n; ++i) {
        if (!trusted(a.deg(i) + 1) || !trusted(a.deg(i) + 2)) continue;
        SVec acc;
        for (const auto& [j, c] : a.d(i)) svec_axpy(acc, c, a.d(j));
        if (!acc.empty()) rep.fail("d^2 != 0 on '" + a.basis.name(i) + "'");
    }
    // Leibniz
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!trusted(a.deg(i) + a.deg(j)) ||
                !trusted(a.deg(i) + a.deg(j) + 1))
                continue;
            SVec lhs;
            for (const auto& [z, c] : a.mul(i, j)) svec_axpy(lhs, c, a.d(z));
            SVec rhs;
            for (const auto& [x, c] : a.d(i))
                for (const auto& [z, c2] : a.mul(x, j))
                    svec_add(rhs, z, c * c2);
            Scalar sg(a.field, a.deg(i) % 2 != 0 ? -1 : 1);
            for (const auto& [y, c] : a.d(j))
                for (const auto& [z, c2] : a.mul(i, y))
                    svec_add(rhs, z, sg * c * c2);
            if (!svec_equal(lhs, rhs))
                rep.fail("Leibniz fails on (" + a.basis.name(i) + ", " +
                         a.basis.name(j) + ")");
        }
    // associativity
    for (int i = 0; i < n && rep.failures.size() < 64; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (!trusted(a.deg(i) + a.deg(j)) ||
                    !trusted(a.deg(j) + a.deg(k)) ||
                    !trusted(a.deg(i) + a.deg(j) + a.deg(k)))
                    continue;
                SVec lhs, rhs;
                for (const auto& [x, c] : a.mul(i, j))
                    for (const auto& [z, c2] : a.mul(x, k))
                        svec_add(lhs, z, c * c2);
                for (const auto& [y, c] : a.mul(j, k))
                    for (const auto& [z, c2] : a.mul(i, y))
                        svec_add(rhs, z, c * c2);
                if (!svec_equal(lhs, rhs))
                    rep.fail("associativity fails on (" + a.basis.name(i) +
                             ", " + a.basis.name(j) + ", " + a.basis.name(k) +
                             ")");
            }
    return rep;
}

ValidationReport validate(const DGCoalgebra& s) {
    ValidationReport rep;
    const int n = s.basis.size();
    if (s.grouplike < 0 || s.grouplike >= n) {
        rep.fail("no grouplike element");
        return rep;
    }
    if (s.deg(s.grouplike) != 0) rep.fail("grouplike is not in degree 0");
    if (!s.d(s.grouplike).empty())
        rep.fail("d(grouplike) != 0: the coaugmentation is not a chain map");
    for (int z = 0; z < n; ++z)
        for (const auto& [x, y, c] : s.delta(z))
            if (s.deg(x) + s.deg(y) != s.deg(z))
                rep.fail("Delta(" + s.basis.name(z) +
                         ") has a wrong-degree component");
    if (!rep.ok) return rep;

    auto collect = [&](int z) {
        std::map<std::pair<int, int>, Scalar> out;
        for (const auto& [x, y, c] : s.delta(z)) {
            auto it = out.find({x, y});
            if (it == out.end())
                out.emplace(std::pair<int, int>{x, y}, c);
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    };
    // counit laws: (eps ⊗ 1)Delta = id = (1 ⊗ eps)Delta
    for (int z = 0; z < n; ++z) {
        SVec left, right;
        for (const auto& [pr, c] : collect(z)) {
            if (pr.first == s.grouplike) svec_add(left, pr.second, c);
            if (pr.second == s.grouplike) svec_add(right, pr.first, c);
        }
        SVec idv{{z, Scalar::one(s.field)}};
        if (!svec_equal(left, idv) || !svec_equal(right, idv))
            rep.fail("counit law fails on '" + s.basis.name(z) + "'");
    }
    // coassociativity
    for (int z = 0; z < n; ++z) {
        std::map<std::tuple<int, int, int>, Scalar> lhs, rhs;
        auto put = [](auto& m, int x, int y, int w, const Scalar& c) {
            auto key = std::tuple<int, int, int>{x, y, w};
            auto it = m.find(key);
            if (it == m.end())
                m.emplace(key, c);
            else {
                it->second += c;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        for (const auto& [x, y, c] : s.delta(z)) {
            for (const auto& [u, v, c2] : s.delta(x)) put(lhs, u, v, y, c * c2);
            for (const auto& [u, v, c2] : s.delta(y)) put(rhs, x, u, v, c * c2);
        }
        if (lhs != rhs)
            rep.fail("coassociativity fails on '" + s.basis.name(z) + "'");
    }
    auto d_trusted = [&](int z) { return s.window.contains(s.deg(z) + 1); };
    // co-Leibniz: Delta d = (d⊗1 + 1⊗d) Delta with Koszul sign
    for (int z = 0; z < n; ++z) {
        bool usable = d_trusted(z);
        for (const auto& [x, y, c] : s.delta(z))
            usable = usable && d_trusted(x) && d_trusted(y);
        if (!usable) continue;
        std::map<std::pair<int, int>, Scalar> lhs, rhs;
        auto put = [](auto& m, int x, int y, const Scalar& c) {
            auto key = std::pair<int, int>{x, y};
            auto it = m.find(key);
            if (it == m.end())
                m.emplace(key, c);
            else {
                it->second += c;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        for (const auto& [j, c] : s.d(z))
            for (const auto& [x, y, c2] : s.delta(j)) put(lhs, x, y, c * c2);
        for (const auto& [x, y, c] : s.delta(z)) {
            for (const auto& [x2, c2] : s.d(x)) put(rhs, x2, y, c * c2);
            Scalar sg(s.field, s.deg(x) % 2 != 0 ? -1 : 1);
            for (const auto& [y2, c2] : s.d(y)) put(rhs, x, y2, sg * c * c2);
        }
        if (lhs != rhs)
            rep.fail("co-Leibniz fails on '" + s.basis.name(z) + "'");
    }
    // d^2
    for (int z = 0; z < n; ++z) {
        if (!d_trusted(z) || !s.window.contains(s.deg(z) + 2)) continue;
        SVec acc;
        for (const auto& [j, c] : s.d(z)) svec_axpy(acc, c, s.d(j));
        if (!acc.empty()) rep.fail("d^2 != 0 on '" + s.basis.name(z) + "'");
    }
    return rep;
}

ValidationReport validate(const DGBimodule& m) {
    ValidationReport rep;
    if (!m.algebra) {
        rep.fail("bimodule has no algebra attached");
        return rep;
    }
    const DGAlgebra& A = *m.algebra;
    const int na = A.basis.size(), nm = m.basis.size();
    auto trust_a = [&](int d) { return A.window.contains(d); };
    auto trust_m = [&](int d) { return m.window.contains(d); };

    // degree homogeneity
    for (const auto& [key, v] : m.left_action)
        for (const auto& [z, c] : v)
            if (m.deg(z) != A.deg(key.first) + m.deg(key.second))
                rep.fail("left action (" + A.basis.name(key.first) + ", " +
                         m.basis.name(key.second) + ") wrong degree");
    for (const auto& [key, v] : m.right_action)
        for (const auto& [z, c] : v)
            if (m.deg(z) != m.deg(key.first) + A.deg(key.second))
                rep.fail("right action (" + m.basis.name(key.first) + ", " +
                         A.basis.name(key.second) + ") wrong degree");
    if (!rep.ok) return rep;

    // associativity of actions and left/right compatibility
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int x = 0; x < nm; ++x) {
                int dab = A.deg(a) + A.deg(b);
                if (trust_a(dab) && trust_m(dab + m.deg(x))) {
                    SVec lhs, rhs;
                    for (const auto& [p, c] : A.mul(a, b))
                        for (const auto& [z, c2] : m.act_left(p, x))
                            svec_add(lhs, z, c * c2);
                    for (const auto& [y, c] : m.act_left(b, x))
                        for (const auto& [z, c2] : m.act_left(a, y))
                            svec_add(rhs, z, c * c2);
                    if (!svec_equal(lhs, rhs))
                        rep.fail("left associativity fails on (" +
                                 A.basis.name(a) + ", " + A.basis.name(b) +
                                 ", " + m.basis.name(x) + ")");
                    SVec lhs2, rhs2;
                    for (const auto& [p, c] : A.mul(a, b))
                        for (const auto& [z, c2] : m.act_right(x, p))
                            svec_add(lhs2, z, c * c2);
                    for (const auto& [y, c] : m.act_right(x, a))
                        for (const auto& [z, c2] : m.act_right(y, b))
                            svec_add(rhs2, z, c * c2);
                    if (!svec_equal(lhs2, rhs2))
                        rep.fail("right associativity fails on (" +
                                 m.basis.name(x) + ", " + A.basis.name(a) +
                                 ", " + A.basis.name(b) + ")");
                    SVec lhs3, rhs3;
                    for (const auto& [y, c] : m.act_left(a, x))
                        for (const auto& [z, c2] : m.act_right(y, b))
                            svec_add(lhs3, z, c * c2);
                    for (const auto& [y, c] : m.act_right(x, b))
                        for (const auto& [z, c2] : m.act_left(a, y))
                            svec_add(rhs3, z, c * c2);
                    if (!svec_equal(lhs3, rhs3))
                        rep.fail("left/right compatibility fails on (" +
                                 A.basis.name(a) + ", " + m.basis.name(x) +
                                 ", " + A.basis.name(b) + ")");
                }
            }
    // Leibniz for both actions
    for (int a = 0; a < na; ++a)
        for (int x = 0; x < nm; ++x) {
            int dl = A.deg(a) + m.deg(x);
            if (trust_m(dl) && trust_m(dl + 1) && trust_a(A.deg(a) + 1)) {
                SVec lhs;
                for (const auto& [z, c] : m.act_left(a, x))
                    svec_axpy(lhs, c, m.d(z));
                SVec rhs;
                for (const auto& [a2, c] : A.d(a))
                    for (const auto& [z, c2] : m.act_left(a2, x))
                        svec_add(rhs, z, c * c2);
                Scalar sg(m.field, A.deg(a) % 2 != 0 ? -1 : 1);
                for (const auto& [x2, c] : m.d(x))
                    for (const auto& [z, c2] : m.act_left(a, x2))
                        svec_add(rhs, z, sg * c * c2);
                if (!svec_equal(lhs, rhs))
                    rep.fail("left Leibniz fails on (" + A.basis.name(a) +
                             ", " + m.basis.name(x) + ")");
                SVec lhs2;
                for (const auto& [z, c] : m.act_right(x, a))
                    svec_axpy(lhs2, c, m.d(z));
                SVec rhs2;
                for (const auto& [x2, c] : m.d(x))
                    for (const auto& [z, c2] : m.act_right(x2, a))
                        svec_add(rhs2, z, c * c2);
                Scalar sg2(m.field, m.deg(x) % 2 != 0 ? -1 : 1);
                for (const auto& [a2, c] : A.d(a))
                    for (const auto& [z, c2] : m.act_right(x, a2))
                        svec_add(rhs2, z, sg2 * c * c2);
                if (!svec_equal(lhs2, rhs2))
                    rep.fail("right Leibniz fails on (" + m.basis.name(x) +
                             ", " + A.basis.name(a) + ")");
            }
        }
    // d^2
    for (int x = 0; x < nm; ++x) {
        SVec acc;
        for (const auto& [z, c] : m.d(x)) svec_axpy(acc, c, m.d(z));
        if (!acc.empty()) rep.fail("d^2 != 0 on '" + m.basis.name(x) + "'");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// dualization

DGAlgebra dualize_coalgebra(const DGCoalgebra& s) {
    DGAlgebra out;
    out.field = s.field;
    Window w = s.window;
    out.window.lo = w.hi == INT_MAX ? INT_MIN : -w.hi;
    out.window.hi = w.lo == INT_MIN ? INT_MAX : -w.lo;
    for (int i = 0; i < s.basis.size(); ++i)
        out.basis.add(-s.deg(i), s.basis.name(i) + "^");
    out.unit = s.grouplike;
    for (int z = 0; z < s.basis.size(); ++z) {
        for (const auto& [x, y, c] : s.delta(z)) {
            if (x == s.grouplike || y == s.grouplike) continue;  // unit action
            Scalar sg(s.field, (s.deg(x) * s.deg(y)) % 2 != 0 ? -1 : 1);
            svec_add(out.products[{x, y}], z, sg * c);
        }
        // dual differential: d^(xi_j)[z] = (-1)^{|xi_j|} * (d_s(z)[j]),
        // |xi_j| = -deg_s(j), so the sign depends on j.
        for (const auto& [j, c] : s.d(z)) {
            Scalar sg(s.field, s.deg(j) % 2 != 0 ? -1 : 1);
            svec_add(out.differentials[j], z, sg * c);
        }
    }
    // drop zero rows introduced above
    for (auto it = out.products.begin(); it != out.products.end();)
        it = it->second.empty() ? out.products.erase(it) : std::next(it);
    for (auto it = out.differentials.begin(); it != out.differentials.end();)
        it = it->second.empty() ? out.differentials.erase(it) : std::next(it);
    return out;
}

DGCoalgebra dualize_algebra(const DGAlgebra& a) {
    DGCoalgebra out;
    out.field = a.field;
    Window w = a.window;
    out.window.lo = w.hi == INT_MAX ? INT_MIN : -w.hi;
    out.window.hi = w.lo == INT_MIN ? INT_MAX : -w.lo;
    for (int i = 0; i < a.basis.size(); ++i)
        out.basis.add(-a.deg(i), a.basis.name(i) + "^");
    out.grouplike = a.unit;
    for (int z = 0; z < a.basis.size(); ++z) {
        for (int x = 0; x < a.basis.size(); ++x)
            for (int y = 0; y < a.basis.size(); ++y) {
                auto p = a.mul(x, y);
                auto it = p.find(z);
                if (it == p.end()) continue;
                Scalar sg(a.field, (a.deg(x) * a.deg(y)) % 2 != 0 ? -1 : 1);
                out.comult[z].emplace_back(x, y, sg * it->second);
            }
    }
    // dual differential: d^(x^) = (-1)^{|x^|} x^ ∘ d, i.e. the coefficient of
    // y^ in d^(x^) is (-1)^{-|x|} * (coefficient of x in d(y)).
    for (int y = 0; y < a.basis.size(); ++y)
        for (const auto& [x, c] : a.d(y)) {
            Scalar sg(a.field, a.deg(x) % 2 != 0 ? -1 : 1);
            svec_add(out.differentials[x], y, sg * c);
        }
    return out;
}

ConilpotencyResult conilpotency_degree(const DGCoalgebra& s, int bound) {
    // Words over the supplementation ideal with exact coefficients; apply
    // Deltabar to the first letter each round (coassociativity makes the
    // position irrelevant).  A length-n word set is the image of the n-fold
    // reduced comultiplication.
    using Word = std::vector<int>;
    int best = 1;
    for (int start : s.supp_ideal()) {
        std::map<Word, Scalar> cur;
        cur[{start}] = Scalar::one(s.field);
        int steps = 1;
        while (!cur.empty()) {
            if (steps >= bound) return ConilpotencyResult{false, bound};
            std::map<Word, Scalar> next;
            for (const auto& [w, c] : cur)
                for (const auto& [x, y, c2] : s.delta_reduced(w[0])) {
                    Word w2;
                    w2.reserve(w.size() + 1);
                    w2.push_back(x);
                    w2.push_back(y);
                    w2.insert(w2.end(), w.begin() + 1, w.end());
                    auto it = next.find(w2);
                    if (it == next.end())
                        next.emplace(std::move(w2), c * c2);
                    else {
                        it->second += c * c2;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            cur = std::move(next);
            ++steps;
        }
        best = std::max(best, steps);
    }
    return ConilpotencyResult{true, best};
}

TruncationResult truncate_module(const DGBimodule& m, int top_degree) {
    const DGAlgebra& A = *m.algebra;
    for (int d : A.basis.populated_degrees())
        if (d < 0)
            throw InputError(
                "truncate_module requires a non-negatively graded algebra");
    TruncationResult out;
    DGBimodule& t = out.module;
    t.algebra = m.algebra;
    t.field = m.field;
    if (m.window.hi != INT_MAX && m.window.hi < top_degree)
        throw InsufficientTruncation(
            "truncate_module at degree " + std::to_string(top_degree) +
            " needs the module trusted up to it, but its window is " +
            m.window.to_string());
    // the quotient is zero above top_degree, hence complete there
    t.window = Window{m.window.lo, INT_MAX};
    t.is_algebra = m.is_algebra;

    std::map<int, int> keep;  // old index -> new index
    for (int i = 0; i < m.basis.size(); ++i)
        if (m.deg(i) <= top_degree)
            keep[i] = t.basis.add(m.deg(i), m.basis.name(i));
    if (m.is_algebra && keep.count(m.unit)) t.unit = keep.at(m.unit);

    auto project = [&](const SVec& v) {
        SVec out2;
        for (const auto& [i, c] : v) {
            auto it = keep.find(i);
            if (it != keep.end()) out2.emplace(it->second, c);
        }
        return out2;
    };
    for (const auto& [key, v] : m.left_action)
        if (keep.count(key.second)) {
            SVec p = project(v);
            if (!p.empty()) t.left_action[{key.first, keep.at(key.second)}] = p;
        }
    for (const auto& [key, v] : m.right_action)
        if (keep.count(key.first)) {
            SVec p = project(v);
            if (!p.empty()) t.right_action[{keep.at(key.first), key.second}] = p;
        }
    for (const auto& [i, v] : m.differentials)
        if (keep.count(i)) {
            SVec p = project(v);
            if (!p.empty()) t.differentials[keep.at(i)] = p;
        }
    if (m.is_algebra)
        for (const auto& [key, v] : m.products)
            if (keep.count(key.first) && keep.count(key.second)) {
                SVec p = project(v);
                if (!p.empty())
                    t.products[{keep.at(key.first), keep.at(key.second)}] = p;
            }

    // quotient map on the underlying graded spaces
    out.quotient = GradedMap(m.space(), t.space(), 0);
    for (const auto& [i, j] : keep) {
        out.quotient.add_entry(m.deg(i), pos_in_degree(m.basis, i),
                               pos_in_degree(t.basis, j),
                               Scalar::one(m.field));
    }
    return out;
}

}  // namespace dgalg
