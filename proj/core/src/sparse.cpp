#include "dgalg/sparse.hpp"

#include <algorithm>

namespace dgalg {

std::vector<std::tuple<int, int, Scalar>> SparseMatrix::entries() const {
    std::vector<std::tuple<int, int, Scalar>> out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.emplace_back(r, c, v);
    return out;
}

int SparseMatrix::nonzeros() const {
    int n = 0;
    for (const auto& row : data_) n += static_cast<int>(row.size());
    return n;
}

SVec SparseMatrix::apply(const SVec& v) const {
    SVec out;
    for (int r = 0; r < rows_; ++r) {
        Scalar acc = Scalar::zero(field_);
        // iterate over the sparser of row/v
        for (const auto& [c, a] : data_[r]) {
            auto it = v.find(c);
            if (it != v.end()) acc += a * it->second;
        }
        if (!acc.is_zero()) out.emplace(r, acc);
    }
    return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix shape mismatch in multiply");
    SparseMatrix out(rows_, o.cols_, field_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, a] : data_[r])
            for (const auto& [c, b] : o.data_[k]) out.add(r, c, a * b);
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           data_ == o.data_;
}

RrefResult rref(const SparseMatrix& m) {
    const Field f = m.field();
    std::vector<SVec> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

    std::vector<SVec> done;        // rows with pivots, in pivot-column order
    std::vector<int> pivots;
    for (int col = 0; col < m.cols(); ++col) {
        int best = -1;
        size_t best_nnz = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty() || rows[r].begin()->first != col) continue;
            if (best < 0 || rows[r].size() < best_nnz) {
                best = static_cast<int>(r);
                best_nnz = rows[r].size();
            }
        }
        if (best < 0) continue;
        SVec piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        Scalar inv = piv.begin()->second.inverse();
        for (auto& [c, v] : piv) v *= inv;
        for (auto& row : rows) {
            auto it = row.find(col);
            if (it != row.end()) {
                Scalar coef = -it->second;
                svec_axpy(row, coef, piv);
            }
        }
        for (auto& row : done) {
            auto it = row.find(col);
            if (it != row.end()) {
                Scalar coef = -it->second;
                svec_axpy(row, coef, piv);
            }
        }
        done.push_back(std::move(piv));
        pivots.push_back(col);
    }

    SparseMatrix out(m.rows(), m.cols(), f);
    for (size_t r = 0; r < done.size(); ++r)
        for (const auto& [c, v] : done[r]) out.set(static_cast<int>(r), c, v);
    return RrefResult{std::move(out), std::move(pivots)};
}

int rank(const SparseMatrix& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

std::vector<SVec> kernel_basis(const SparseMatrix& m) {
    RrefResult rr = rref(m);
    const Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    std::map<int, int> pivot_row;
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        is_pivot[rr.pivot_cols[i]] = true;
        pivot_row[rr.pivot_cols[i]] = static_cast<int>(i);
    }
    std::vector<SVec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        SVec v;
        v.emplace(c, Scalar::one(f));
        for (const auto& [pc, r] : pivot_row) {
            Scalar a = rr.reduced.at(r, c);
            if (!a.is_zero()) v.emplace(pc, -a);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QuotientBasis::QuotientBasis(const std::vector<SVec>& sub, int ambient_dim,
                             Field f)
    : ambient_(ambient_dim), field_(f) {
    SparseMatrix m(static_cast<int>(sub.size()), ambient_dim, f);
    for (size_t r = 0; r < sub.size(); ++r) {
        for (const auto& [c, v] : sub[r]) {
            if (c < 0 || c >= ambient_dim)
                throw InputError("quotient_basis: vector exceeds ambient dimension");
            m.set(static_cast<int>(r), c, v);
        }
    }
    RrefResult rr = rref(m);
    pivots_ = rr.pivot_cols;
    for (size_t i = 0; i < pivots_.size(); ++i)
        rows_.push_back(rr.reduced.row(static_cast<int>(i)));
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) {
            free_pos_[c] = static_cast<int>(free_.size());
            free_.push_back(c);
        }
}

std::vector<SVec> QuotientBasis::representatives() const {
    std::vector<SVec> out;
    for (int c : free_) {
        SVec v;
        v.emplace(c, Scalar::one(field_));
        out.push_back(std::move(v));
    }
    return out;
}

SVec QuotientBasis::reduce(const SVec& v) const {
    SVec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        auto it = r.find(pivots_[i]);
        if (it != r.end()) {
            Scalar coef = -it->second;
            svec_axpy(r, coef, rows_[i]);
        }
    }
    return r;
}

SVec QuotientBasis::project(const SVec& v) const {
    SVec r = reduce(v);
    SVec out;
    for (const auto& [c, val] : r) {
        auto it = free_pos_.find(c);
        if (it == free_pos_.end())
            throw InputError("quotient_basis: reduction left a pivot coordinate");
        out.emplace(it->second, val);
    }
    return out;
}

}  // namespace dgalg
