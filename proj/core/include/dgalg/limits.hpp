#pragma once

#include "dgalg/hochschild.hpp"

namespace dgalg {

// Inverse system of bimodule quotients M_1 <- M_2 <- ... over a fixed
// algebra; maps[i] is the degree-0 quotient map from stages[i+1] to
// stages[i] on the underlying graded spaces.
struct Tower {
    std::shared_ptr<const DGAlgebra> algebra;
    std::vector<std::shared_ptr<const DGBimodule>> stages;
    std::vector<GradedMap> maps;
};

// Tower of truncations of m at the given (strictly increasing) top degrees;
// connecting maps are the induced quotients.
Tower truncation_tower(std::shared_ptr<const DGAlgebra> a, const DGBimodule& m,
                       const std::vector<int>& tops);

struct LimitReport {
    GradedRingPresentation limit;  // presentation of the last stage, which
                                   // equals the limit on stabilized degrees
    std::map<int, int> n0;         // per degree: 1-based stage from which all
                                   // later connecting maps are isomorphisms
    std::vector<int> unstabilized;     // degrees with no such stage
    bool mittag_leffler = true;        // no non-surjective induced map found
    std::vector<std::pair<int, int>> non_surjective;  // (stage, degree)
    std::vector<std::map<int, int>> stage_dims;       // per stage, per degree
    std::string failure;
};

// HH*(A, M_n) for each stage, the induced maps on cohomology, and the
// stabilization analysis over the window.
LimitReport hh_inverse_limit(std::shared_ptr<const DGAlgebra> a,
                             const Tower& tower, Window window);

}  // namespace dgalg
