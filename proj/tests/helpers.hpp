#pragma once

#include <memory>
#include <random>

#include "dgalg/models.hpp"

namespace testutil {

using namespace dgalg;

// Λ(a) with |a| = -1 and d(a) = 1: an acyclic dg algebra whose augmentation
// is NOT a chain map (useful as a negative example).
inline DGAlgebra contractible_exterior(const Field& f) {
    DGAlgebra a = exterior_algebra(f, {{"a", -1}});
    a.set_differential(a.basis.index_of("a"), SVec{{a.unit, Scalar::one(f)}});
    return a;
}

// Koszul-type model Λ(b_3) (x) k[x_4]/(x^3) with d(b (x) x^k) = 1 (x) x^{k+1}:
// a valid augmented dga with nonzero differential; H = k.
inline DGAlgebra koszul_model(const Field& f) {
    DGAlgebra t = tensor_product(exterior_algebra(f, {{"b", 3}}),
                                 polynomial_algebra(f, {{"x", 4}}, 8, true));
    for (int i = 0; i < t.basis.size(); ++i) {
        const std::string& n = t.basis.name(i);
        if (n.rfind("b(x)", 0) != 0) continue;
        std::string rest = n.substr(4);
        std::string target = rest == "1"   ? "1(x)x"
                             : rest == "x" ? "1(x)x^2"
                                           : "1(x)x^" + std::to_string(
                                                 std::stoi(rest.substr(2)) + 1);
        int j = t.basis.index_of(target);
        if (j >= 0) t.set_differential(i, SVec{{j, Scalar::one(f)}});
    }
    return t;
}

// Small graded-commutative models whose letters all shift to one strict
// sign, so every sample admits bar and Hochschild constructions.
inline DGAlgebra random_model(std::mt19937& rng) {
    std::uniform_int_distribution<int> field_pick(0, 2), shape(0, 5);
    Field f = field_pick(rng) == 0   ? Field::rationals()
              : field_pick(rng) == 1 ? Field::prime_field(5)
                                     : Field::prime_field(13);
    switch (shape(rng)) {
        case 0:
            return exterior_algebra(f, {{"a", -1}});
        case 1:
            return exterior_algebra(f, {{"a", -1}, {"b", -3}});
        case 2:
            return exterior_algebra(f, {{"a", 3}, {"b", 5}});
        case 3:
            return polynomial_algebra(f, {{"x", 2}}, 6, true);
        case 4:
            return tensor_product(exterior_algebra(f, {{"a", 3}}),
                                  polynomial_algebra(f, {{"x", 4}}, 8, true));
        default:
            return koszul_model(f);
    }
}

// Windows on which each sampled model's cohomology is safely computable.
inline Window safe_window(const DGAlgebra& a) {
    auto degs = a.basis.populated_degrees();
    bool negative = degs.front() < 0;
    return negative ? Window{-6, 0} : Window{0, 6};
}

}  // namespace testutil
