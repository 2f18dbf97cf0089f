#pragma once

#include <stdexcept>
#include <vector>

#include "koszul/module.hpp"

namespace koszul {

// A bounded cochain complex of graded modules: terms at positions
// [plo, phi], differential raising the position by one.
template <class F>
struct GradedComplex {
    typename GradedAlgebra<F>::Ptr A;
    int plo = 0, phi = -1;
    std::vector<GradedModule<F>> terms;  // terms[n - plo]
    std::vector<ModuleHom<F>> diffs;     // diffs[n - plo]: terms[n] -> terms[n+1]

    static GradedComplex concentrated(GradedModule<F> M, int pos) {
        GradedComplex X;
        X.A = M.algebra();
        X.plo = X.phi = pos;
        X.terms.push_back(std::move(M));
        return X;
    }

    bool in_range(int n) const { return n >= plo && n <= phi; }
    const GradedModule<F>& term(int n) const {
        if (!in_range(n)) throw std::out_of_range("complex term out of range");
        return terms[n - plo];
    }
    const ModuleHom<F>& diff(int n) const {
        if (n < plo || n >= phi) throw std::out_of_range("complex differential out of range");
        return diffs[n - plo];
    }

    bool check() const {
        for (int n = plo; n < phi; ++n)
            if (!is_module_hom(term(n), term(n + 1), diffs[n - plo])) return false;
        for (int n = plo; n + 1 < phi; ++n)
            if (!compose_hom(term(n), term(n + 1), term(n + 2), diffs[n + 1 - plo],
                             diffs[n - plo])
                     .is_zero())
                return false;
        return true;
    }

    // [i]: term at position n becomes the old term at n + i; differentials
    // pick up the sign (-1)^i.
    GradedComplex pos_shift(int i) const {
        GradedComplex X = *this;
        X.plo -= i;
        X.phi -= i;
        if (i % 2 != 0)
            for (auto& d : X.diffs)
                for (auto& row : d.mats)
                    for (auto& m : row) m = m.scaled(F(-1));
        return X;
    }

    // <j> applied to every term.
    GradedComplex grade_shift(int j) const {
        GradedComplex X = *this;
        for (auto& t : X.terms) t = t.shifted(j);
        for (auto& d : X.diffs) {
            d.lo -= j;
            d.hi -= j;
        }
        return X;
    }

    // Vector-space duality: term at n is the dual of the old term at -n.
    GradedComplex dualize(typename GradedAlgebra<F>::Ptr op) const {
        GradedComplex X;
        X.A = op;
        X.plo = -phi;
        X.phi = -plo;
        for (int n = X.plo; n <= X.phi; ++n) X.terms.push_back(term(-n).dualize(op));
        for (int n = X.plo; n < X.phi; ++n) X.diffs.push_back(dual_hom(diffs[-n - 1 - plo]));
        return X;
    }

    GradedModule<F> homology(int n) const {
        const GradedModule<F>& X = term(n);
        SubquotientResult<F> K;
        if (n < phi) {
            K = kernel(X, term(n + 1), diffs[n - plo]);
        } else {
            K.module = X;
            K.map = ModuleHom<F>::zero(X, X);
            for (int v = 0; v < A->num_vertices(); ++v)
                for (int d = X.lo(); d <= X.hi(); ++d)
                    K.map.mat_ref(v, d) = Matrix<F>::identity(X.dim(v, d));
        }
        if (n == plo) return K.module;
        // lift the incoming differential through the kernel inclusion
        const GradedModule<F>& prev = term(n - 1);
        const ModuleHom<F>& din = diffs[n - 1 - plo];
        ModuleHom<F> lift = ModuleHom<F>::zero(prev, K.module);
        for (int v = 0; v < A->num_vertices(); ++v)
            for (int d = lift.lo; d <= lift.hi; ++d) {
                Matrix<F> target = din.mat(v, d);
                if (target.rows() == 0 || target.cols() == 0) continue;
                auto X2 = solve_matrix(K.map.mat(v, d), target);
                if (!X2) throw std::logic_error("homology: image not inside the kernel");
                lift.mat_ref(v, d) = std::move(*X2);
            }
        return cokernel(prev, K.module, lift).module;
    }

    // True when the homology vanishes at every position except `pos`, where
    // it is isomorphic to M.
    bool homology_is_concentrated(int pos, const GradedModule<F>& M) const {
        for (int n = plo; n <= phi; ++n) {
            GradedModule<F> H = homology(n);
            if (n == pos) {
                if (!is_isomorphic(H, M)) return false;
            } else if (!H.is_zero()) {
                return false;
            }
        }
        if (pos < plo || pos > phi) return M.is_zero();
        return true;
    }
};

}  // namespace koszul
