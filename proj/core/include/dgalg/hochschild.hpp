#pragma once

#include "dgalg/dga.hpp"

namespace dgalg {

// Basis cochain of the normalized Hochschild cochain complex: the functional
// on Abar^{(x)k} that sends the basis word `word` to the module basis element
// `m` and every other basis word to zero.
struct HKey {
    std::vector<int> word;  // letters in the algebra basis (augmentation ideal)
    int m = -1;             // module basis index
    auto operator<=>(const HKey&) const = default;
};

using HVec = std::map<HKey, Scalar>;

// Normalized Hochschild cochain complex CH(A; M) over a finite degree
// window.  The total degree of a basis cochain is k + |m| - sum |w_i|
// (cosimplicial degree plus internal degree of the hom).
class HochschildComplex {
public:
    std::shared_ptr<const DGAlgebra> algebra;
    std::shared_ptr<const DGBimodule> module;
    Window window;
    int max_k = 0;  // largest cosimplicial degree in the populated range
    CochainComplex cx;

    int total_degree(const HKey& key) const;
    std::string label(const HKey& key) const;
    const std::vector<HKey>& keys(int degree) const;
    int key_index(const HKey& key) const;  // position within its degree

    // Full differential of a basis cochain (internal + simplicial parts).
    HVec d_key(const HKey& key) const;
    // Simplicial part only (left action, merges, right action); used to pin
    // the sign conventions against the multiplication-cochain bracket.
    HVec d_key_simplicial(const HKey& key) const;

    // conversions between sparse degree-coordinates and cochain form
    HVec from_coords(int degree, const SVec& v) const;
    SVec to_coords(int degree, const HVec& f) const;

    std::map<int, std::vector<HKey>> keys_by_degree;
    std::map<HKey, int> index_in_degree;
};

HochschildComplex hochschild_complex(std::shared_ptr<const DGAlgebra> a,
                                     std::shared_ptr<const DGBimodule> m,
                                     Window window);

// Cup product (coefficients must form a bimodule algebra):
// (f u g) = (-1)^{|g| * shifted degree of f's word} on the concatenated word
// with value f-value * g-value.
HVec cup(const HochschildComplex& h, const HVec& f, const HVec& g);

// Gerstenhaber circle product and bracket; require M = A (the module must be
// the algebra as a bimodule over itself, so values are algebra elements).
HVec circle(const HochschildComplex& h, const HVec& f, const HVec& g);
HVec bracket(const HochschildComplex& h, const HVec& f, const HVec& g);

// -[mu, f] where mu is the (sign-twisted, unit-extended) multiplication
// cochain; equals the simplicial part of the differential.
HVec delta_via_bracket(const HochschildComplex& h, const HVec& f);

// Cohomology with representative cocycles and cup-structure constants.
struct GradedRingPresentation {
    Field field = Field::rationals();
    Window window;
    std::map<int, int> dims;
    // degree -> representative cocycles in the degree's sparse coordinates
    std::map<int, std::vector<SVec>> representatives;
    // ((deg_f, i), (deg_g, j)) -> class coordinates of rep_i u rep_j in
    // degree deg_f + deg_g (only stored when that degree is in the window)
    std::map<std::tuple<int, int, int, int>, SVec> products;

    std::vector<int> hilbert(Window w) const;  // dims over w, ascending
    // nonzero/zero pattern of the stored products, as a sorted list of the
    // index tuples with nonzero product class
    std::vector<std::tuple<int, int, int, int>> product_pattern() const;
};

GradedRingPresentation hh_cohomology(std::shared_ptr<const DGAlgebra> a,
                                     std::shared_ptr<const DGBimodule> m,
                                     Window window);
GradedRingPresentation ring_of(const HochschildComplex& h);

// Hochschild homology of the cyclic-bar-style complex M (x) Abar^{(x)k}
// (wrap term included); returns per-degree dimensions over the window.
std::map<int, int> hh_homology(std::shared_ptr<const DGAlgebra> a,
                               std::shared_ptr<const DGBimodule> m,
                               Window window);

// The adjunction/evaluation map (dual Abar)^{(x)k} (x) M -> Hom(Abar^{(x)k}, M)
// in cosimplicial degree k, with a per-degree isomorphism certificate.
struct DualizationResult {
    GradedMap map;
    bool iso = true;
    std::vector<int> failing_degrees;
};

DualizationResult dualization_map(const DGAlgebra& a, const DGBimodule& m,
                                  int k);

}  // namespace dgalg
