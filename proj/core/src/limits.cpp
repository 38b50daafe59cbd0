#include "dgalg/limits.hpp"

#include <algorithm>

namespace dgalg {

Tower truncation_tower(std::shared_ptr<const DGAlgebra> a, const DGBimodule& m,
                       const std::vector<int>& tops) {
    if (tops.empty()) throw InputError("truncation_tower: no stages");
    for (size_t i = 1; i < tops.size(); ++i)
        if (tops[i] <= tops[i - 1])
            throw InputError(
                "truncation_tower: top degrees must strictly increase");
    Tower t;
    t.algebra = a;
    for (int top : tops)
        t.stages.push_back(std::make_shared<const DGBimodule>(
            truncate_module(m, top).module));
    for (size_t i = 0; i + 1 < t.stages.size(); ++i) {
        const DGBimodule& src = *t.stages[i + 1];
        const DGBimodule& tgt = *t.stages[i];
        GradedMap q(src.space(), tgt.space(), 0);
        for (int s = 0; s < src.basis.size(); ++s) {
            int j = tgt.basis.index_of(src.basis.name(s));
            if (j < 0) continue;  // killed by the smaller truncation
            int d = src.deg(s);
            const auto& sd = src.basis.in_degree(d);
            const auto& td = tgt.basis.in_degree(d);
            int si = static_cast<int>(
                std::find(sd.begin(), sd.end(), s) - sd.begin());
            int ti = static_cast<int>(
                std::find(td.begin(), td.end(), j) - td.begin());
            q.add_entry(d, si, ti, Scalar::one(src.field));
        }
        t.maps.push_back(std::move(q));
    }
    return t;
}

namespace {
// image of a degree-t cocycle of the later stage under the connecting map,
// expressed in class coordinates of the earlier stage
SVec push_class(const HochschildComplex& hsrc, const HochschildComplex& htgt,
                const GradedMap& q, int t, const std::vector<SVec>& tgt_reps,
                const SVec& v) {
    HVec out;
    const DGBimodule& src = *hsrc.module;
    const DGBimodule& tgt = *htgt.module;
    for (const auto& [i, c] : v) {
        const HKey& key = hsrc.keys(t).at(i);
        int d = src.deg(key.m);
        const auto& sd = src.basis.in_degree(d);
        int pos = static_cast<int>(
            std::find(sd.begin(), sd.end(), key.m) - sd.begin());
        SVec img = q.block(d).apply(SVec{{pos, Scalar::one(src.field)}});
        for (const auto& [r, c2] : img) {
            HKey nk{key.word, tgt.basis.in_degree(d).at(r)};
            auto it = out.find(nk);
            if (it == out.end()) {
                out.emplace(nk, c * c2);
            } else {
                it->second += c * c2;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    auto coords = class_coordinates(htgt.cx, t, tgt_reps, htgt.to_coords(t, out));
    if (!coords)
        throw InputError(
            "inverse limit: connecting map failed to send a class into the "
            "target's class span (internal error)");
    return *coords;
}
}  // namespace

LimitReport hh_inverse_limit(std::shared_ptr<const DGAlgebra> a,
                             const Tower& tower, Window window) {
    if (tower.stages.empty())
        throw InputError("hh_inverse_limit: empty tower");
    if (tower.maps.size() + 1 != tower.stages.size())
        throw InputError("hh_inverse_limit: need one connecting map between "
                         "each pair of consecutive stages");
    const int K = static_cast<int>(tower.stages.size());

    std::vector<HochschildComplex> hs;
    std::vector<GradedRingPresentation> rings;
    LimitReport rep;
    for (int i = 0; i < K; ++i) {
        hs.push_back(hochschild_complex(a, tower.stages[i], window));
        rings.push_back(ring_of(hs.back()));
        rep.stage_dims.push_back({});
        for (int t = window.lo; t <= window.hi; ++t) {
            auto it = rings.back().dims.find(t);
            rep.stage_dims.back()[t] = it == rings.back().dims.end() ? 0
                                                                     : it->second;
        }
    }
    rep.limit = rings.back();

    // induced maps on cohomology, stage j+1 -> stage j, per degree
    // iso[j][t] and surjectivity drive the stabilization report
    std::vector<std::map<int, bool>> iso(std::max(K - 1, 0));
    for (int j = 0; j + 1 < K; ++j) {
        for (int t = window.lo; t <= window.hi; ++t) {
            int dim_tgt = rep.stage_dims[j][t];
            int dim_src = rep.stage_dims[j + 1][t];
            const auto& tgt_reps = rings[j].representatives.count(t)
                                       ? rings[j].representatives.at(t)
                                       : std::vector<SVec>{};
            SparseMatrix m(dim_tgt, dim_src, a->field);
            if (rings[j + 1].representatives.count(t)) {
                const auto& src_reps = rings[j + 1].representatives.at(t);
                for (int c = 0; c < dim_src; ++c) {
                    SVec col = push_class(hs[j + 1], hs[j], tower.maps[j], t,
                                          tgt_reps, src_reps[c]);
                    for (const auto& [r, v] : col) m.set(r, c, v);
                }
            }
            int rk = rank(m);
            iso[j][t] = (dim_tgt == dim_src && rk == dim_src);
            if (rk < dim_tgt) {
                rep.mittag_leffler = false;
                rep.non_surjective.emplace_back(j + 1, t);
            }
        }
    }

    for (int t = window.lo; t <= window.hi; ++t) {
        // smallest 1-based stage past which every connecting map is an iso
        int n0 = K;
        for (int j = K - 2; j >= 0; --j) {
            if (!iso[j][t]) break;
            n0 = j + 1;
        }
        if (K > 1 && !iso[K - 2][t]) {
            rep.unstabilized.push_back(t);
        } else {
            rep.n0[t] = n0;
        }
    }
    if (!rep.unstabilized.empty())
        rep.failure = "tower exhausted before stabilization in " +
                      std::to_string(rep.unstabilized.size()) + " degree(s)";
    return rep;
}

}  // namespace dgalg
