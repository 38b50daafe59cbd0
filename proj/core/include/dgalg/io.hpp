#pragma once

#include "dgalg/dga.hpp"

namespace dgalg {

// JSON import/export of algebras and bimodules.
//
// Algebra schema:
//   { "field": "Q" | "Fp:<p>",
//     "basis": [{"name": str, "degree": int}, ...],
//     "unit": str,
//     "products": [{"left": str, "right": str,
//                   "result": [[str, "num" | "num/den"], ...]}, ...],
//     "differential": [{"source": str, "result": [[str, scalar], ...]}, ...],
//     "window": [lo | null, hi | null] }   // optional; null side = complete
// Omitted product/differential entries mean zero.
DGAlgebra import_algebra(const std::string& json_text);
DGAlgebra load_algebra(const std::string& path);
std::string export_algebra(const DGAlgebra& a);  // deterministic round-trip

// Bimodule schema (over an already-loaded algebra):
//   { "basis": [...], "differential": [...],
//     "left_action":  [{"a": str, "m": str, "result": [[str, scalar], ...]}],
//     "right_action": [{"m": str, "a": str, "result": [[str, scalar], ...]}],
//     "window": [lo | null, hi | null] }
DGBimodule import_module(const std::string& json_text,
                         std::shared_ptr<const DGAlgebra> a);
DGBimodule load_module(const std::string& path,
                       std::shared_ptr<const DGAlgebra> a);

}  // namespace dgalg
