#pragma once

#include <climits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "koszul/module.hpp"

namespace koszul {

// A minimal projective resolution computed inside a degree window:
//   steps[k] -> ... -> steps[1] -> steps[0] -> M -> 0
// diff[i] maps steps[i+1] into steps[i]; summands[i] lists the indecomposable
// pieces P(vertex)<shift> of steps[i].
template <class F>
struct Resolution {
    std::vector<GradedModule<F>> steps;
    std::vector<std::vector<ProjectiveSummand<F>>> summands;
    std::vector<ModuleHom<F>> diff;
    ModuleHom<F> augment;
    int window_hi = 0;

    bool verify(const GradedModule<F>& M) const {
        if (!is_module_hom(steps[0], M, augment)) return false;
        for (size_t i = 0; i < diff.size(); ++i) {
            if (!is_module_hom(steps[i + 1], steps[i], diff[i])) return false;
            const ModuleHom<F>& next = (i == 0) ? augment : diff[i - 1];
            const GradedModule<F>& tgt = (i == 0) ? M : steps[i - 1];
            if (!compose_hom(steps[i + 1], steps[i], tgt, next, diff[i]).is_zero()) return false;
        }
        return true;
    }
};

// Minimal resolution with `length` differential steps (so length+1 modules).
// Without an explicit window cap the algebra must have finite support within
// its computed bound; the default cap keeps every computed step untruncated.
// Passing a cap explicitly permits truncated coefficients at the caller's
// risk.
template <class F>
Resolution<F> minimal_projective_resolution(const GradedModule<F>& M, int length,
                                            int window_hi = INT_MIN) {
    const auto& A = M.algebra();
    if (window_hi == INT_MIN) {
        if (!A->finite_within_bound())
            throw std::invalid_argument(
                "resolution: algebra support reaches the computed bound; "
                "pass an explicit window cap");
        int g = std::max(A->top_degree(), 1);
        window_hi = M.hi() + (length + 1) * g;
    }
    Resolution<F> R;
    R.window_hi = window_hi;
    GradedModule<F> cur = M;
    ModuleHom<F> prev_incl;  // K_{i-1} -> steps[i-1]
    for (int i = 0; i <= length; ++i) {
        auto cov = projective_cover(cur, window_hi);
        if (i == 0)
            R.augment = cov.onto;
        else
            R.diff.push_back(compose_hom(cov.cover, cur, R.steps.back(), prev_incl, cov.onto));
        auto K = kernel(cov.cover, cur, cov.onto);
        R.steps.push_back(std::move(cov.cover));
        R.summands.push_back(std::move(cov.summands));
        prev_incl = std::move(K.map);
        cur = std::move(K.module);
    }
    return R;
}

// An injective coresolution 0 -> M -> steps[0] -> steps[1] -> ...; summand
// (vertex, shift) stands for I(vertex)<shift>. Computed by resolving the
// vector-space dual over the opposite algebra and dualizing back.
template <class F>
struct Coresolution {
    std::vector<GradedModule<F>> steps;
    std::vector<std::vector<ProjectiveSummand<F>>> summands;  // read as injective labels
    std::vector<ModuleHom<F>> diff;  // diff[i]: steps[i] -> steps[i+1]
    ModuleHom<F> augment;            // M -> steps[0]
};

template <class F>
Coresolution<F> minimal_injective_coresolution(const GradedModule<F>& M,
                                               typename GradedAlgebra<F>::Ptr Aop, int length,
                                               int window_hi = INT_MIN) {
    auto Md = M.dualize(Aop);
    Resolution<F> R = minimal_projective_resolution(Md, length, window_hi);
    Coresolution<F> C;
    for (size_t i = 0; i < R.steps.size(); ++i) {
        C.steps.push_back(R.steps[i].dualize(M.algebra()));
        std::vector<ProjectiveSummand<F>> s;
        for (const auto& p : R.summands[i]) s.push_back({p.vertex, -p.shift});
        C.summands.push_back(std::move(s));
    }
    C.augment = dual_hom(R.augment);
    for (const auto& d : R.diff) C.diff.push_back(dual_hom(d));
    return C;
}

// Multiplicity table of a minimal resolution: count[(i, vertex, shift)] is
// the number of summands P(vertex)<shift> in step i. For a minimal
// resolution this equals the dimension of the degree-shift part of the i-th
// derived hom into the simple at that vertex.
template <class F>
std::map<std::tuple<int, int, int>, int> ext_dimensions(const Resolution<F>& R) {
    std::map<std::tuple<int, int, int>, int> out;
    for (size_t i = 0; i < R.summands.size(); ++i)
        for (const auto& s : R.summands[i]) ++out[{int(i), s.vertex, s.shift}];
    return out;
}

template <class F>
int ext_dim(const Resolution<F>& R, int i, int vertex, int shift) {
    if (i < 0 || i >= int(R.summands.size())) return 0;
    int n = 0;
    for (const auto& s : R.summands[size_t(i)])
        if (s.vertex == vertex && s.shift == shift) ++n;
    return n;
}

}  // namespace koszul
