#include "dgalg/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgalg {

std::string Window::to_string() const {
    std::string a = lo == INT_MIN ? "-inf" : std::to_string(lo);
    std::string b = hi == INT_MAX ? "+inf" : std::to_string(hi);
    return "[" + a + ", " + b + "]";
}

Window Window::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw InputError("bad window '" + s + "' (expected LO:HI)");
    try {
        size_t p1, p2;
        int lo = std::stoi(s.substr(0, colon), &p1);
        int hi = std::stoi(s.substr(colon + 1), &p2);
        if (p1 != colon || p2 != s.size() - colon - 1)
            throw std::invalid_argument(s);
        if (lo > hi) throw InputError("empty window '" + s + "'");
        return Window{lo, hi};
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad window '" + s + "' (expected LO:HI)");
    }
}

void GradedVectorSpace::add_basis_element(int degree, const std::string& label) {
    auto& v = basis_[degree];
    for (const auto& l : v)
        if (l == label)
            throw InputError("duplicate basis label '" + label + "' in degree " +
                             std::to_string(degree));
    v.push_back(label);
}

int GradedVectorSpace::dim(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& GradedVectorSpace::labels(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? kEmpty : it->second;
}

std::vector<int> GradedVectorSpace::populated_degrees() const {
    std::vector<int> out;
    for (const auto& [d, v] : basis_)
        if (!v.empty()) out.push_back(d);
    return out;
}

int GradedVectorSpace::total_dim() const {
    int n = 0;
    for (const auto& [d, v] : basis_) n += static_cast<int>(v.size());
    return n;
}

GradedVectorSpace dual(const GradedVectorSpace& v) {
    Window w = v.window();
    Window dw;
    dw.lo = w.hi == INT_MAX ? INT_MIN : -w.hi;
    dw.hi = w.lo == INT_MIN ? INT_MAX : -w.lo;
    GradedVectorSpace out(v.field(), dw);
    for (int d : v.populated_degrees())
        for (const auto& l : v.labels(d)) out.add_basis_element(-d, l + "^");
    return out;
}

GradedMap::GradedMap(GradedVectorSpace source, GradedVectorSpace target,
                     int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

SparseMatrix& GradedMap::block(int j) {
    auto it = blocks_.find(j);
    if (it == blocks_.end())
        it = blocks_
                 .emplace(j, SparseMatrix(target_.dim(j + degree_),
                                          source_.dim(j), source_.field()))
                 .first;
    return it->second;
}

const SparseMatrix& GradedMap::block(int j) const {
    return const_cast<GradedMap*>(this)->block(j);
}

void GradedMap::add_entry(int src_degree, int src_index, int tgt_index,
                          const Scalar& c) {
    block(src_degree).add(tgt_index, src_index, c);
}

GradedMap GradedMap::compose_after(const GradedMap& first) const {
    GradedMap out(first.source(), target_, degree_ + first.degree());
    for (int j : first.source().populated_degrees()) {
        if (first.source().dim(j) == 0) continue;
        out.block(j) = block(j + first.degree()).multiply(first.block(j));
    }
    return out;
}

bool GradedMap::is_zero() const {
    for (const auto& [j, b] : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

GradedMap dual(const GradedMap& m) {
    // f^(zeta) = (-1)^{d |zeta|} zeta o f ; transposed blocks.
    GradedMap out(dual(m.target()), dual(m.source()), m.degree());
    int d = m.degree();
    for (int j : m.source().populated_degrees()) {
        const SparseMatrix& blk = m.block(j);  // V_j -> W_{j+d}
        // dual block at source degree -(j+d): (W^)_{-(j+d)} -> (V^)_{-j}
        int sd = -(j + d);
        Scalar sign(m.source().field(),
                    (d % 2 != 0 && sd % 2 != 0) ? -1 : 1);
        SparseMatrix& ob = out.block(sd);
        for (const auto& [r, c, v] : blk.entries()) ob.add(c, r, sign * v);
    }
    return out;
}

CochainComplex::CochainComplex(GradedVectorSpace space, GradedMap d)
    : space_(std::move(space)), d_(std::move(d)) {
    if (d_.degree() != 1)
        throw InputError("cochain complex differential must have degree +1");
    for (int j : space_.populated_degrees()) {
        if (space_.dim(j + 1) == 0 || space_.dim(j + 2) == 0) continue;
        SparseMatrix sq = d_.block(j + 1).multiply(d_.block(j));
        if (!sq.is_zero())
            throw InputError("d^2 != 0 at degree " + std::to_string(j));
    }
}

CochainComplex CochainComplex::concentrated(const Field& f, int degree,
                                            const std::string& label) {
    GradedVectorSpace v(f);
    v.add_basis_element(degree, label);
    return CochainComplex(v, GradedMap(v, v, 1));
}

std::vector<CohomologyDegree> cohomology(const CochainComplex& c,
                                         Window window) {
    if (window.empty()) return {};
    Window need = Window{window.lo == INT_MIN ? INT_MIN : window.lo - 1,
                         window.hi == INT_MAX ? INT_MAX : window.hi + 1};
    if (!c.window().covers(need))
        throw InsufficientTruncation(
            "cohomology over " + window.to_string() + " needs the complex on " +
            need.to_string() + " but it is only trusted on " +
            c.window().to_string());
    if (window.lo == INT_MIN || window.hi == INT_MAX)
        throw InputError("cohomology window must be finite");

    std::vector<CohomologyDegree> out;
    for (int t = window.lo; t <= window.hi; ++t) {
        CohomologyDegree deg;
        deg.degree = t;
        int n = c.space().dim(t);
        if (n == 0) {
            out.push_back(std::move(deg));
            continue;
        }
        std::vector<SVec> cocycles;
        if (c.space().dim(t + 1) == 0) {
            for (int i = 0; i < n; ++i) {
                SVec v;
                v.emplace(i, Scalar::one(c.field()));
                cocycles.push_back(std::move(v));
            }
        } else {
            cocycles = kernel_basis(c.d().block(t));
        }
        std::vector<SVec> image;
        if (c.space().dim(t - 1) > 0) {
            const SparseMatrix& prev = c.d().block(t - 1);
            for (int col = 0; col < prev.cols(); ++col) {
                SVec v;
                v.emplace(col, Scalar::one(c.field()));
                SVec w = prev.apply(v);
                if (!w.empty()) image.push_back(std::move(w));
            }
        }
        QuotientBasis qb(image, n, c.field());
        // Pick cocycles whose residuals mod the image stay independent.
        std::vector<SVec> accepted_rows;
        for (const auto& z : cocycles) {
            SVec r = qb.reduce(z);
            for (const auto& row : accepted_rows) {
                if (r.empty()) break;
                auto it = r.find(row.begin()->first);
                if (it != r.end()) {
                    Scalar coef = -it->second;
                    svec_axpy(r, coef, row);
                }
            }
            if (r.empty()) continue;
            Scalar inv = r.begin()->second.inverse();
            for (auto& [i, v] : r) v *= inv;
            accepted_rows.push_back(std::move(r));
            deg.representatives.push_back(z);
        }
        deg.dimension = static_cast<int>(deg.representatives.size());
        out.push_back(std::move(deg));
    }
    return out;
}

CochainComplex tensor(const CochainComplex& a, const CochainComplex& b) {
    if (!(a.field() == b.field()))
        throw InputError("tensor: field mismatch");
    const auto& A = a.space();
    const auto& B = b.space();
    Window w;
    // complete only where every contributing pair is inside both windows
    if (A.window().lo != INT_MIN && B.window().lo != INT_MIN)
        w.lo = A.window().lo + B.window().lo;
    if (A.window().hi != INT_MAX && B.window().hi != INT_MAX)
        w.hi = A.window().hi + B.window().hi;
    // unbounded factors make completeness impossible on the open sides;
    // keep the conservative intersection computed above

    GradedVectorSpace space(a.field(), w);
    // index: (i, j, xi, yj) -> position within degree i+j
    std::map<std::tuple<int, int, int, int>, int> pos;
    for (int i : A.populated_degrees())
        for (int j : B.populated_degrees()) {
            int t = i + j;
            for (int xi = 0; xi < A.dim(i); ++xi)
                for (int yj = 0; yj < B.dim(j); ++yj) {
                    pos[{i, j, xi, yj}] = space.dim(t);
                    space.add_basis_element(
                        t, A.labels(i)[xi] + "⊗" + B.labels(j)[yj]);
                }
        }

    GradedMap d(space, space, 1);
    for (const auto& [key, p] : pos) {
        auto [i, j, xi, yj] = key;
        int t = i + j;
        // dx ⊗ y
        if (A.dim(i + 1) > 0) {
            const SparseMatrix& da = a.d().block(i);
            for (const auto& [r, cl, v] : da.entries()) {
                if (cl != xi) continue;
                auto it = pos.find({i + 1, j, r, yj});
                if (it != pos.end()) d.add_entry(t, p, it->second, v);
            }
        }
        // (-1)^{|x|} x ⊗ dy
        if (B.dim(j + 1) > 0) {
            Scalar sign(a.field(), i % 2 != 0 ? -1 : 1);
            const SparseMatrix& db = b.d().block(j);
            for (const auto& [r, cl, v] : db.entries()) {
                if (cl != yj) continue;
                auto it = pos.find({i, j + 1, xi, r});
                if (it != pos.end()) d.add_entry(t, p, it->second, sign * v);
            }
        }
    }
    return CochainComplex(space, d);
}

CochainComplex dual_complex(const CochainComplex& c) {
    return CochainComplex(dual(c.space()), dual(c.d()));
}

bool is_coboundary(const CochainComplex& c, int degree, const SVec& v) {
    int n = c.space().dim(degree);
    std::vector<SVec> image;
    if (c.space().dim(degree - 1) > 0) {
        const SparseMatrix& prev = c.d().block(degree - 1);
        for (int col = 0; col < prev.cols(); ++col) {
            SVec e;
            e.emplace(col, Scalar::one(c.field()));
            SVec w = prev.apply(e);
            if (!w.empty()) image.push_back(std::move(w));
        }
    }
    QuotientBasis qb(image, n, c.field());
    return qb.reduce(v).empty();
}

std::optional<SVec> class_coordinates(const CochainComplex& c, int degree,
                                      const std::vector<SVec>& reps,
                                      const SVec& v) {
    std::vector<SVec> image;
    if (c.space().dim(degree - 1) > 0) {
        const SparseMatrix& prev = c.d().block(degree - 1);
        for (int col = 0; col < prev.cols(); ++col) {
            SVec e;
            e.emplace(col, Scalar::one(c.field()));
            SVec w = prev.apply(e);
            if (!w.empty()) image.push_back(std::move(w));
        }
    }
    // solve v = sum a_i reps_i + boundary: columns are reps, then image, then v
    int n = c.space().dim(degree);
    int cols = static_cast<int>(reps.size() + image.size()) + 1;
    SparseMatrix m(n, cols, c.field());
    for (size_t j = 0; j < reps.size(); ++j)
        for (const auto& [i, x] : reps[j]) m.set(i, static_cast<int>(j), x);
    for (size_t j = 0; j < image.size(); ++j)
        for (const auto& [i, x] : image[j])
            m.set(i, static_cast<int>(reps.size() + j), x);
    for (const auto& [i, x] : v) m.set(i, cols - 1, x);
    RrefResult rr = rref(m);
    for (int pc : rr.pivot_cols)
        if (pc == cols - 1) return std::nullopt;
    SVec out;
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        int pc = rr.pivot_cols[r];
        if (pc < static_cast<int>(reps.size())) {
            Scalar a = rr.reduced.at(static_cast<int>(r), cols - 1);
            if (!a.is_zero()) out.emplace(pc, a);
        }
    }
    return out;
}

}  // namespace dgalg
