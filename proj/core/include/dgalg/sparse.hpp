#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "dgalg/scalar.hpp"

namespace dgalg {

// Sparse vector: index -> nonzero coefficient.
using SVec = std::map<int, Scalar>;

inline void svec_add(SVec& v, int i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(i);
    if (it == v.end()) {
        v.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline void svec_axpy(SVec& v, const Scalar& a, const SVec& w) {
    if (a.is_zero()) return;
    for (const auto& [i, c] : w) svec_add(v, i, a * c);
}

// Row-major sparse matrix over an exact field.  No stored zeros.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, Field f)
        : rows_(rows), cols_(cols), field_(f), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    const SVec& row(int r) const { return data_[r]; }
    Scalar at(int r, int c) const {
        auto it = data_[r].find(c);
        return it == data_[r].end() ? Scalar::zero(field_) : it->second;
    }
    void set(int r, int c, const Scalar& v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw InputError("matrix index out of range");
        if (v.is_zero())
            data_[r].erase(c);
        else
            data_[r][c] = v;
    }
    void add(int r, int c, const Scalar& v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw InputError("matrix index out of range");
        svec_add(data_[r], c, v);
    }

    std::vector<std::tuple<int, int, Scalar>> entries() const;
    int nonzeros() const;

    SVec apply(const SVec& v) const;           // matrix * column vector
    SparseMatrix multiply(const SparseMatrix& o) const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    Field field_ = Field::rationals();
    std::vector<SVec> data_;
    friend struct RrefResult;
};

struct RrefResult {
    SparseMatrix reduced;
    std::vector<int> pivot_cols;  // ordered; rank = size
};

// Reduced row echelon form with sparsity-aware pivot choice (among the rows
// eligible for the current pivot column, the structurally sparsest row wins;
// ties go to the lowest row index).  The RREF itself is canonical, so the
// strategy affects only fill-in, not the result.
RrefResult rref(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Basis of the null space, as sparse column vectors of length cols().
std::vector<SVec> kernel_basis(const SparseMatrix& m);

// Complement of span(sub) inside k^ambient_dim, plus the projection onto the
// representatives modulo the span.
class QuotientBasis {
public:
    QuotientBasis(const std::vector<SVec>& sub, int ambient_dim, Field f);

    int ambient_dim() const { return ambient_; }
    // Coset representatives: standard basis vectors at non-pivot coordinates.
    const std::vector<int>& representative_coords() const { return free_; }
    std::vector<SVec> representatives() const;
    // Coordinates of [v] in the representative basis.
    SVec project(const SVec& v) const;
    // Residual of v after reduction modulo the span (supported on free coords).
    SVec reduce(const SVec& v) const;

private:
    int ambient_;
    Field field_;
    std::vector<SVec> rows_;       // rref rows of the subspace
    std::vector<int> pivots_;      // pivot coord of rows_[i]
    std::vector<int> free_;        // non-pivot coords, ascending
    std::map<int, int> free_pos_;  // coord -> index into free_
};

}  // namespace dgalg
