#pragma once

#include <memory>
#include <optional>
#include <tuple>

#include "dgalg/graded.hpp"

namespace dgalg {

// Flat basis: every structure table below is keyed by these indices.
class Basis {
public:
    int add(int degree, const std::string& name);
    int size() const { return static_cast<int>(degrees_.size()); }
    int degree(int i) const { return degrees_[i]; }
    const std::string& name(int i) const { return names_[i]; }
    int index_of(const std::string& name) const;  // -1 if absent
    const std::vector<int>& in_degree(int d) const;
    std::vector<int> populated_degrees() const;

    GradedVectorSpace to_space(const Field& f, Window w) const;

private:
    std::vector<int> degrees_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::map<int, std::vector<int>> by_degree_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
    std::string first() const { return failures.empty() ? "" : failures.front(); }
};

// Connected augmented dga given by basis-level structure constants.
// `window` is the trusted range: the basis lists *all* elements whose degree
// lies in it, and product/differential tables are exact whenever the result
// degree also lies in it.  Absent table entries mean zero.
class DGAlgebra {
public:
    Field field = Field::rationals();
    Basis basis;
    int unit = -1;
    Window window;
    std::map<std::pair<int, int>, SVec> products;
    std::map<int, SVec> differentials;

    SVec mul(int i, int j) const;
    SVec d(int i) const;
    int deg(int i) const { return basis.degree(i); }
    std::vector<int> aug_ideal() const;  // non-unit basis indices
    bool product_trusted(int i, int j) const {
        return window.contains(deg(i) + deg(j));
    }

    void set_product(int i, int j, SVec v);
    void set_differential(int i, SVec v);

    GradedVectorSpace space() const { return basis.to_space(field, window); }
    CochainComplex complex() const;
};

// Supplemented coassociative dg coalgebra; comultiplication stored as the
// full Delta (including the grouplike end terms).
class DGCoalgebra {
public:
    Field field = Field::rationals();
    Basis basis;
    int grouplike = -1;  // coaugmentation image; counit is its dual functional
    Window window;
    // z -> list of (x, y, c):  Delta(z) = sum c * x ⊗ y
    std::map<int, std::vector<std::tuple<int, int, Scalar>>> comult;
    std::map<int, SVec> differentials;

    const std::vector<std::tuple<int, int, Scalar>>& delta(int z) const;
    // Delta restricted to Sbar ⊗ Sbar.
    std::vector<std::tuple<int, int, Scalar>> delta_reduced(int z) const;
    SVec d(int i) const;
    int deg(int i) const { return basis.degree(i); }
    std::vector<int> supp_ideal() const;  // non-grouplike indices

    GradedVectorSpace space() const { return basis.to_space(field, window); }
    CochainComplex complex() const;
};

// DG bimodule over a fixed algebra; optionally a bimodule algebra (carries
// its own associative product and unit, needed for the cup product).
class DGBimodule {
public:
    std::shared_ptr<const DGAlgebra> algebra;
    Field field = Field::rationals();
    Basis basis;
    Window window;
    std::map<std::pair<int, int>, SVec> left_action;   // (a, m)
    std::map<std::pair<int, int>, SVec> right_action;  // (m, a)
    std::map<int, SVec> differentials;

    bool is_algebra = false;
    int unit = -1;
    std::map<std::pair<int, int>, SVec> products;

    SVec act_left(int a, int m) const;
    SVec act_right(int m, int a) const;
    SVec mul(int i, int j) const;
    SVec d(int i) const;
    int deg(int i) const { return basis.degree(i); }

    GradedVectorSpace space() const { return basis.to_space(field, window); }
    CochainComplex complex() const;

    // The algebra as a bimodule over itself (a bimodule algebra).
    static DGBimodule over_self(std::shared_ptr<const DGAlgebra> a);
};

ValidationReport validate(const DGAlgebra& a);
ValidationReport validate(const DGCoalgebra& s);
ValidationReport validate(const DGBimodule& m);

// Linear dual of a locally finite dg coalgebra: an algebra on the dual basis
// in negated degrees.  mul(x^, y^)[z^] = (-1)^{|x||y|} Delta(z)[(x,y)];
// d(z^) = (-1)^{|z^|} z^ ∘ d.
DGAlgebra dualize_coalgebra(const DGCoalgebra& s);

// Linear dual of a locally finite dga: the coalgebra with
// Delta(z^)[(x^,y^)] = (-1)^{|x||y|} mul(x,y)[z].
DGCoalgebra dualize_algebra(const DGAlgebra& a);

struct ConilpotencyResult {
    bool bounded = false;
    int degree = 0;  // smallest n with vanishing n-fold reduced comult
};

ConilpotencyResult conilpotency_degree(const DGCoalgebra& s, int bound);

struct TruncationResult {
    DGBimodule module;
    GradedMap quotient;  // original -> truncated, degree 0
};

// Quotient by everything above `top_degree` (cohomological).  Requires the
// acting algebra to be non-negatively graded so the quotient closes.
TruncationResult truncate_module(const DGBimodule& m, int top_degree);

}  // namespace dgalg
