#pragma once

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgalg/sparse.hpp"

namespace dgalg {

// Trusted degree interval.  INT_MIN / INT_MAX mark sides on which the data
// is complete (nothing was truncated away there).
struct Window {
    int lo = INT_MIN;
    int hi = INT_MAX;

    static Window all() { return {}; }
    static Window span(int lo, int hi) { return Window{lo, hi}; }

    bool contains(int d) const { return lo <= d && d <= hi; }
    bool covers(const Window& o) const { return lo <= o.lo && o.hi <= hi; }
    Window intersect(const Window& o) const {
        return Window{std::max(lo, o.lo), std::min(hi, o.hi)};
    }
    Window shrink(int below, int above) const {
        Window w = *this;
        if (w.lo != INT_MIN) w.lo += below;
        if (w.hi != INT_MAX) w.hi -= above;
        return w;
    }
    bool empty() const { return lo > hi; }
    bool operator==(const Window&) const = default;
    std::string to_string() const;
    // "LO:HI" with decimal bounds.
    static Window parse(const std::string& s);
};

// Z-graded vector space with ordered, named basis per degree, plus the
// window on which the listed basis is complete.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;
    explicit GradedVectorSpace(Field f, Window w = Window::all())
        : field_(f), window_(w) {}

    const Field& field() const { return field_; }
    const Window& window() const { return window_; }
    void set_window(Window w) { window_ = w; }

    void add_basis_element(int degree, const std::string& label);
    int dim(int degree) const;
    const std::vector<std::string>& labels(int degree) const;
    // Degrees with at least one basis element, ascending.
    std::vector<int> populated_degrees() const;
    int total_dim() const;

    bool operator==(const GradedVectorSpace& o) const = default;

private:
    Field field_ = Field::rationals();
    Window window_;
    std::map<int, std::vector<std::string>> basis_;
};

GradedVectorSpace dual(const GradedVectorSpace& v);

// Degree-d linear map given blockwise: for each source degree j, a matrix
// basis(j) -> target basis(j + d).
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedVectorSpace source, GradedVectorSpace target, int degree);

    const GradedVectorSpace& source() const { return source_; }
    const GradedVectorSpace& target() const { return target_; }
    int degree() const { return degree_; }

    // The block for source degree j (created on demand, zero by default).
    SparseMatrix& block(int j);
    const SparseMatrix& block(int j) const;
    bool has_block(int j) const { return blocks_.count(j) > 0; }

    void add_entry(int src_degree, int src_index, int tgt_index,
                   const Scalar& c);

    GradedMap compose_after(const GradedMap& first) const;  // this ∘ first
    bool is_zero() const;

private:
    GradedVectorSpace source_, target_;
    int degree_ = 0;
    mutable std::map<int, SparseMatrix> blocks_;
};

GradedMap dual(const GradedMap& m);

// Cochain complex: graded space with a degree +1 differential; d^2 = 0 is
// verified over the populated window at construction.
class CochainComplex {
public:
    CochainComplex() = default;
    CochainComplex(GradedVectorSpace space, GradedMap d);

    const GradedVectorSpace& space() const { return space_; }
    const GradedMap& d() const { return d_; }
    const Field& field() const { return space_.field(); }
    const Window& window() const { return space_.window(); }

    static CochainComplex concentrated(const Field& f, int degree,
                                       const std::string& label);

private:
    GradedVectorSpace space_;
    GradedMap d_;
};

struct CohomologyDegree {
    int degree = 0;
    int dimension = 0;
    std::vector<SVec> representatives;  // cocycles in the degree-t basis
};

// Per-degree cohomology over [window.lo, window.hi].  Requires the complex
// trusted on [lo-1, hi+1]; otherwise throws InsufficientTruncation.
std::vector<CohomologyDegree> cohomology(const CochainComplex& c,
                                         Window window);

CochainComplex tensor(const CochainComplex& a, const CochainComplex& b);

CochainComplex dual_complex(const CochainComplex& c);

// Decides whether v (a degree-t cochain) is a coboundary, by rank comparison
// against the image of d^{t-1}.
bool is_coboundary(const CochainComplex& c, int degree, const SVec& v);

// Coordinates of the class of the cocycle v in the basis given by `reps`
// (modulo coboundaries); nullopt if [v] is not in their span.
std::optional<SVec> class_coordinates(const CochainComplex& c, int degree,
                                      const std::vector<SVec>& reps,
                                      const SVec& v);

}  // namespace dgalg
