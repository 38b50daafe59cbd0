#pragma once

#include "dgalg/barcobar.hpp"
#include "dgalg/limits.hpp"

namespace dgalg {

// Exterior algebra on generators of odd degree, zero differential, complete
// window.  Basis: all square-free monomials.
DGAlgebra exterior_algebra(
    const Field& f,
    const std::vector<std::pair<std::string, int>>& generators);

// Polynomial algebra on generators of positive even degree, listed up to
// total degree `top_degree`.  With `as_quotient` the result is the genuine
// quotient by everything above top_degree (complete window); otherwise it is
// a truncation of the free polynomial algebra, trusted on (-inf, top_degree].
DGAlgebra polynomial_algebra(
    const Field& f,
    const std::vector<std::pair<std::string, int>>& generators,
    int top_degree, bool as_quotient);

// Graded tensor product with the Koszul sign rule; the trusted window is the
// largest range on which both factors' tables are guaranteed complete.
DGAlgebra tensor_product(const DGAlgebra& a, const DGAlgebra& b);

// Formal model pair for a compact connected group: the exterior algebra on
// odd negative-degree generators (chains on G) and the polynomial algebra on
// the paired positive even generators (cochains on BG), truncated to
// `top_degree`.  Pairing invariant: generator degrees -d and d + 1.
struct GroupModel {
    std::string name;
    std::vector<int> exterior_degrees;    // negative odd, ascending
    std::vector<int> polynomial_degrees;  // positive even, ascending
    int top_degree = 0;
    std::shared_ptr<const DGAlgebra> exterior;
    std::shared_ptr<const DGAlgebra> polynomial;
};

// Built-in names: s1, t2, su2, su3 (case-insensitive).
GroupModel model_group(const std::string& name, const Field& f,
                       int top_degree);
GroupModel model_group(const std::vector<int>& exterior_degrees,
                       const std::vector<int>& polynomial_degrees,
                       const Field& f, int top_degree,
                       const std::string& name = "custom");

// Stage n of the coefficient tower: the polynomial model truncated at
// D_n = n * (largest polynomial generator degree), as a bimodule quotient.
DGBimodule stage_module(const GroupModel& g, int n);
// The full tower of the first `stages` stage modules with quotient maps.
Tower stage_tower(const GroupModel& g, int stages);

struct VerificationReport {
    std::string group;
    Window window;
    GradedRingPresentation direct_ring;  // HH* of the exterior model
    GradedRingPresentation limit_ring;   // HH* of the polynomial model (limit)
    bool dims_match = false;
    bool pattern_match = false;
    bool koszul_dual_match = false;
    std::vector<int> mismatched_degrees;
    std::vector<int> unstabilized;
    std::string verdict;  // "pass" | "fail" | "inconclusive"
    std::string first_discrepancy;
};

// Ring-isomorphism evidence between HH*(exterior model) computed directly
// and HH*(polynomial model) computed as the inverse limit over the stage
// tower: per-degree dimensions, nonzero-product patterns (on the dimension
// <= 1 range), and the Koszul-dual cohomology comparison in both directions.
VerificationReport verify_theorem3(const GroupModel& g, Window window);

}  // namespace dgalg
