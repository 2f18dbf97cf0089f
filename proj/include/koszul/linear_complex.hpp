#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "koszul/complex.hpp"
#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

// A linear complex of projectives, stored combinatorially: position i holds
// m(v, i) copies of P(v)<i>; the differential component from the P(lam)<i>
// part into the P(mu)<i+1> part is a matrix with entries in C_1(mu, lam)
// (one scalar matrix per basis element of that hom space). d^2 = 0 is a
// statement in C_2.
template <class F>
class LinearComplex {
public:
    using APtr = typename GradedAlgebra<F>::Ptr;

    LinearComplex() = default;
    static LinearComplex zero(APtr A, int plo, int phi) {
        LinearComplex L;
        L.A_ = std::move(A);
        L.plo_ = plo;
        L.phi_ = phi;
        int nv = L.A_->num_vertices();
        L.mult_.assign(nv, std::vector<int>(phi - plo + 1, 0));
        L.blocks_.assign(std::max(phi - plo, 0), {});
        for (auto& level : L.blocks_) {
            level.assign(nv, std::vector<std::vector<Matrix<F>>>(nv));
            for (int mu = 0; mu < nv; ++mu)
                for (int lam = 0; lam < nv; ++lam)
                    level[mu][lam].assign(L.A_->dim(1, mu, lam), Matrix<F>(0, 0));
        }
        return L;
    }

    const APtr& algebra() const { return A_; }
    int plo() const { return plo_; }
    int phi() const { return phi_; }

    int m(int v, int i) const {
        if (i < plo_ || i > phi_) return 0;
        return mult_[v][i - plo_];
    }
    int& m_ref(int v, int i) { return mult_[v][i - plo_]; }

    // Component from the P(lam)<i> part to the P(mu)<i+1> part, coefficient
    // of the k-th basis element of C_1(mu, lam).
    const Matrix<F>& block(int i, int mu, int lam, int k) const {
        return blocks_[i - plo_][mu][lam][k];
    }
    Matrix<F>& block_ref(int i, int mu, int lam, int k) {
        return blocks_[i - plo_][mu][lam][k];
    }

    int total_summands() const {
        int n = 0;
        for (const auto& row : mult_)
            for (int c : row) n += c;
        return n;
    }

    // Position i as a list of (vertex, count), zeros skipped.
    std::vector<std::pair<int, int>> summands(int i) const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < A_->num_vertices(); ++v)
            if (m(v, i) > 0) out.emplace_back(v, m(v, i));
        return out;
    }

    // d^2 = 0 as an identity in C_2(nu, lam) for every entry slot.
    bool check() const {
        int nv = A_->num_vertices();
        for (int i = plo_; i + 2 <= phi_; ++i)
            for (int lam = 0; lam < nv; ++lam)
                for (int nu = 0; nu < nv; ++nu) {
                    int nc = m(lam, i), nr = m(nu, i + 2);
                    int n2 = A_->dim(2, nu, lam);
                    if (nc == 0 || nr == 0) continue;
                    // acc[s][c] in C_2(nu, lam)
                    std::vector<std::vector<Vec<F>>> acc(
                        nr, std::vector<Vec<F>>(nc, Vec<F>(n2, F(0))));
                    for (int mu = 0; mu < nv; ++mu) {
                        int n1a = A_->dim(1, mu, lam), n1b = A_->dim(1, nu, mu);
                        for (int k = 0; k < n1a; ++k)
                            for (int l = 0; l < n1b; ++l) {
                                Vec<F> prod = A_->compose(1, mu, lam,
                                                          A_->basis_coords(1, mu, lam, k), 1, nu,
                                                          A_->basis_coords(1, nu, mu, l));
                                Matrix<F> P = block(i + 1, nu, mu, l) * block(i, mu, lam, k);
                                for (int s = 0; s < nr; ++s)
                                    for (int c = 0; c < nc; ++c) {
                                        if (P.at(s, c).is_zero()) continue;
                                        for (int t = 0; t < n2; ++t)
                                            acc[s][c][t] += P.at(s, c) * prod[t];
                                    }
                            }
                    }
                    for (int s = 0; s < nr; ++s)
                        for (int c = 0; c < nc; ++c)
                            for (int t = 0; t < n2; ++t)
                                if (!acc[s][c][t].is_zero()) return false;
                }
        return true;
    }

    // Shrinks the position range to the support (keeps at least one slot).
    LinearComplex trimmed() const {
        int lo = phi_, hi = plo_;
        for (int i = plo_; i <= phi_; ++i)
            for (int v = 0; v < A_->num_vertices(); ++v)
                if (m(v, i) > 0) {
                    lo = std::min(lo, i);
                    hi = std::max(hi, i);
                }
        if (lo > hi) return zero(A_, 0, 0);
        LinearComplex L = zero(A_, lo, hi);
        for (int i = lo; i <= hi; ++i)
            for (int v = 0; v < A_->num_vertices(); ++v) L.m_ref(v, i) = m(v, i);
        for (int i = lo; i < hi; ++i)
            for (int mu = 0; mu < A_->num_vertices(); ++mu)
                for (int lam = 0; lam < A_->num_vertices(); ++lam)
                    for (int k = 0; k < A_->dim(1, mu, lam); ++k)
                        L.block_ref(i, mu, lam, k) = block(i, mu, lam, k);
        L.normalize_shapes();
        return L;
    }

    // Gives every block slot its proper m(mu, i+1) x m(lam, i) shape
    // (slots left at their default 0 x 0 shape stay zero).
    void normalize_shapes() {
        for (int i = plo_; i < phi_; ++i)
            for (int mu = 0; mu < A_->num_vertices(); ++mu)
                for (int lam = 0; lam < A_->num_vertices(); ++lam)
                    for (int b = 0; b < A_->dim(1, mu, lam); ++b) {
                        Matrix<F>& B = block_ref(i, mu, lam, b);
                        if (B.rows() != m(mu, i + 1) || B.cols() != m(lam, i))
                            B = Matrix<F>(m(mu, i + 1), m(lam, i));
                    }
    }

    // Dimension of the space of chain maps from the one-summand complex
    // (P(v)<i> at position i, zero differential) into this one: the common
    // kernel of all outgoing blocks at (v, i).
    int socle_dim(int v, int i) const {
        int n = m(v, i);
        if (n == 0) return 0;
        std::vector<Vec<F>> rows;
        if (i < phi_)
            for (int mu = 0; mu < A_->num_vertices(); ++mu)
                for (int k = 0; k < A_->dim(1, mu, v); ++k) {
                    const Matrix<F>& B = block(i, mu, v, k);
                    for (int r = 0; r < B.rows(); ++r) rows.push_back(B.row(r));
                }
        Matrix<F> S = rows.empty() ? Matrix<F>(0, n) : Matrix<F>::from_rows(rows);
        return kernel_basis(S).cols();
    }

private:
    APtr A_;
    int plo_ = 0, phi_ = 0;
    std::vector<std::vector<int>> mult_;  // mult_[v][i - plo]
    // blocks_[i - plo][mu][lam][k]
    std::vector<std::vector<std::vector<std::vector<Matrix<F>>>>> blocks_;
};

// The equivalence sending a module X over the dual algebra to a linear
// complex over the primal one: position i holds one P(v)<i> per basis vector
// of X(v)_i, and the block from the lam part to the mu part collects the
// actions of the dual arrows (arrow index shared between the two quivers).
template <class F>
LinearComplex<F> epsilon_inverse(typename GradedAlgebra<F>::Ptr A,
                                 const GradedModule<F>& X) {
    const auto& Adual = X.algebra();
    if (Adual->quiver().num_arrows() != A->quiver().num_arrows())
        throw std::invalid_argument("epsilon_inverse: quiver mismatch");
    LinearComplex<F> L = LinearComplex<F>::zero(A, X.lo(), X.hi());
    for (int v = 0; v < A->num_vertices(); ++v)
        for (int i = X.lo(); i <= X.hi(); ++i) L.m_ref(v, i) = X.dim(v, i);
    for (int a = 0; a < A->quiver().num_arrows(); ++a) {
        int mu = A->quiver().arrows[a].src, lam = A->quiver().arrows[a].tgt;
        // the dual arrow runs lam -> mu and acts X(lam)_i -> X(mu)_{i+1}
        for (int i = X.lo(); i < X.hi(); ++i)
            L.block_ref(i, mu, lam, A->arrow_local_index(a)) = X.action(a, i);
    }
    return L;
}

// Inverse repackaging: multiplicities become dimensions, blocks become dual
// arrow actions. The result is a module over `Adual`.
template <class F>
GradedModule<F> epsilon(typename GradedAlgebra<F>::Ptr Adual, const LinearComplex<F>& L) {
    const auto& A = L.algebra();
    std::vector<std::vector<int>> dims(A->num_vertices());
    for (int v = 0; v < A->num_vertices(); ++v)
        for (int i = L.plo(); i <= L.phi(); ++i) dims[v].push_back(L.m(v, i));
    std::vector<std::vector<Matrix<F>>> act(A->quiver().num_arrows());
    for (int a = 0; a < A->quiver().num_arrows(); ++a) {
        int mu = A->quiver().arrows[a].src, lam = A->quiver().arrows[a].tgt;
        for (int i = L.plo(); i < L.phi(); ++i)
            act[a].push_back(L.block(i, mu, lam, A->arrow_local_index(a)));
    }
    return GradedModule<F>::make(Adual, L.plo(), L.phi(), std::move(dims), std::move(act));
}

namespace detail {

// Dimension of P(v)<shift> at (w, d), reading degrees past the bound as zero
// for algebras with finite support.
template <class F>
int proj_dim_at(const GradedAlgebra<F>& A, int v, int shift, int w, int d) {
    int k = d + shift;
    if (k < 0) return 0;
    if (k > A.bound()) return A.finite_within_bound() ? 0 : throw std::out_of_range(
                                                               "projective dim beyond bound");
    return A.dim(k, v, w);
}

template <class F>
int summand_offset(const GradedAlgebra<F>& A, const std::vector<ProjectiveSummand<F>>& list,
                   size_t idx, int w, int d) {
    int off = 0;
    for (size_t k = 0; k < idx; ++k) off += proj_dim_at(A, list[k].vertex, list[k].shift, w, d);
    return off;
}

}  // namespace detail

// The maximal linear part of a minimal resolution: keep the summands
// P(v)<-k> in homological step k (= position -k) and the degree-one
// components of the differential between them.
template <class F>
LinearComplex<F> linear_part(const Resolution<F>& R) {
    const auto& A = R.steps[0].algebra();
    int k = int(R.steps.size()) - 1;
    LinearComplex<F> L = LinearComplex<F>::zero(A, -k, 0);
    // per position, the indices (within the step's summand list) of linear
    // summands, grouped by vertex in order of appearance
    std::vector<std::map<int, std::vector<size_t>>> linear(k + 1);
    for (int step = 0; step <= k; ++step)
        for (size_t s = 0; s < R.summands[step].size(); ++s) {
            const auto& sm = R.summands[step][s];
            if (sm.shift == -step) {
                linear[step][sm.vertex].push_back(s);
                L.m_ref(sm.vertex, -step) += 1;
            }
        }
    for (int i = -k; i < 0; ++i) {
        int src_step = -i, tgt_step = -i - 1;
        const ModuleHom<F>& d = R.diff[tgt_step];  // steps[src_step] -> steps[tgt_step]
        for (const auto& [lam, srcs] : linear[src_step])
            for (size_t cidx = 0; cidx < srcs.size(); ++cidx) {
                // generator of the source summand sits at (lam, degree -i)
                int col = detail::summand_offset(*A, R.summands[src_step], srcs[cidx], lam, -i);
                const Matrix<F>& mat = d.mat(lam, -i);
                for (const auto& [mu, tgts] : linear[tgt_step])
                    for (size_t ridx = 0; ridx < tgts.size(); ++ridx) {
                        int row0 = detail::summand_offset(*A, R.summands[tgt_step], tgts[ridx],
                                                          lam, -i);
                        int n1 = A->dim(1, mu, lam);
                        for (int b = 0; b < n1; ++b) {
                            Matrix<F>& B = L.block_ref(i, mu, lam, b);
                            if (B.rows() != int(tgts.size()) || B.cols() != int(srcs.size()))
                                B = Matrix<F>(int(tgts.size()), int(srcs.size()));
                            B.at(int(ridx), int(cidx)) = mat.at(row0 + b, col);
                        }
                    }
            }
    }
    L.normalize_shapes();
    return L;
}

// Injective object of the linear-complex category at a vertex: the linear
// part of the minimal projective resolution of the simple.
template <class F>
LinearComplex<F> lc_injective(typename GradedAlgebra<F>::Ptr A, int v, int positions,
                              int window_hi = INT_MIN) {
    auto R = minimal_projective_resolution(GradedModule<F>::simple(A, v), positions, window_hi);
    return linear_part(R);
}

// Projective object: resolve the simple over the opposite algebra, take the
// linear part there, then flip positions. (The vector-space duality followed
// by the inverse Nakayama replacement carries P^op(v)<i> at position i to
// P(v)<-i> at position -i with the same block entries, transposed.)
template <class F>
LinearComplex<F> lc_projective(typename GradedAlgebra<F>::Ptr A,
                               typename GradedAlgebra<F>::Ptr Aop, int v, int positions,
                               int window_hi = INT_MIN) {
    auto Rop = minimal_projective_resolution(GradedModule<F>::simple(Aop, v), positions,
                                             window_hi);
    LinearComplex<F> Lop = linear_part(Rop);
    LinearComplex<F> L = LinearComplex<F>::zero(A, -Lop.phi(), -Lop.plo());
    for (int vv = 0; vv < A->num_vertices(); ++vv)
        for (int i = Lop.plo(); i <= Lop.phi(); ++i) L.m_ref(vv, -i) = Lop.m(vv, i);
    for (int i = Lop.plo(); i < Lop.phi(); ++i)
        for (int mu = 0; mu < A->num_vertices(); ++mu)
            for (int lam = 0; lam < A->num_vertices(); ++lam)
                for (int b = 0; b < Aop->dim(1, mu, lam); ++b)
                    // C^op_1(mu, lam) and C_1(lam, mu) share their basis; the
                    // component P^op(lam)<i> -> P^op(mu)<i+1> becomes
                    // P(mu)<-i-1> -> P(lam)<-i>
                    L.block_ref(-i - 1, lam, mu, b) = Lop.block(i, mu, lam, b).transpose();
    L.normalize_shapes();
    return L;
}

// Nakayama replacement P(v)<i> -> I(v)<i>: the combinatorial data is
// unchanged, only the labels switch, so the view carries the same complex.
template <class F>
struct InjectiveLinearComplex {
    LinearComplex<F> data;
};

template <class F>
InjectiveLinearComplex<F> nakayama(const LinearComplex<F>& L) {
    return {L};
}

template <class F>
LinearComplex<F> nakayama_inverse(const InjectiveLinearComplex<F>& L) {
    return L.data;
}

// Realizes the combinatorial complex as an honest complex of graded modules
// (summands ordered vertex-major, then copy index), truncated at module
// degree window_hi.
template <class F>
GradedComplex<F> to_graded_complex(const LinearComplex<F>& L, int window_hi) {
    const auto& A = L.algebra();
    GradedComplex<F> X;
    X.A = A;
    X.plo = L.plo();
    X.phi = L.phi();
    for (int i = L.plo(); i <= L.phi(); ++i) {
        std::vector<GradedModule<F>> parts;
        for (int v = 0; v < A->num_vertices(); ++v)
            for (int c = 0; c < L.m(v, i); ++c)
                parts.push_back(GradedModule<F>::projective(A, v, i, window_hi));
        int lo = -i;  // heads sit in degree -i
        auto sum = direct_sum(std::move(parts), A, std::min(lo, -L.phi()), window_hi);
        X.terms.push_back(std::move(sum.module));
    }
    for (int i = L.plo(); i < L.phi(); ++i) {
        const GradedModule<F>& S = X.terms[i - L.plo()];
        const GradedModule<F>& T = X.terms[i + 1 - L.plo()];
        ModuleHom<F> d = ModuleHom<F>::zero(S, T);
        // offsets of the (v, copy) summand inside the sum at (w, deg)
        auto offset = [&](int pos, int v, int copy, int w, int deg) {
            int off = 0;
            for (int vv = 0; vv < v; ++vv)
                off += L.m(vv, pos) * detail::proj_dim_at(*A, vv, pos, w, deg);
            off += copy * detail::proj_dim_at(*A, v, pos, w, deg);
            return off;
        };
        for (int lam = 0; lam < A->num_vertices(); ++lam)
            for (int c = 0; c < L.m(lam, i); ++c)
                for (int mu = 0; mu < A->num_vertices(); ++mu)
                    for (int r = 0; r < L.m(mu, i + 1); ++r) {
                        // hom element: sum over the C_1(mu, lam) basis
                        Vec<F> elem(A->dim(1, mu, lam), F(0));
                        for (int b = 0; b < int(elem.size()); ++b)
                            elem[b] = L.block(i, mu, lam, b).at(r, c);
                        bool nonzero = false;
                        for (const auto& e : elem)
                            if (!e.is_zero()) nonzero = true;
                        if (!nonzero) continue;
                        for (int w = 0; w < A->num_vertices(); ++w)
                            for (int deg = std::max(S.lo(), T.lo()); deg <= window_hi; ++deg) {
                                int nsrc = detail::proj_dim_at(*A, lam, i, w, deg);
                                int ntgt = detail::proj_dim_at(*A, mu, i + 1, w, deg);
                                if (nsrc == 0 || ntgt == 0) continue;
                                int co = offset(i, lam, c, w, deg);
                                int ro = offset(i + 1, mu, r, w, deg);
                                for (int y = 0; y < nsrc; ++y) {
                                    // y o elem in C_{deg+i+1}(mu, w)
                                    Vec<F> img = A->compose(deg + i, lam, w,
                                                            A->basis_coords(deg + i, lam, w, y),
                                                            1, mu, elem);
                                    for (int t = 0; t < ntgt; ++t)
                                        d.mat_ref(w, deg).at(ro + t, co + y) += img[t];
                                }
                            }
                    }
        X.diffs.push_back(std::move(d));
    }
    return X;
}

// Positions -k..0 of a minimal resolution as a cochain complex.
template <class F>
GradedComplex<F> to_complex(const Resolution<F>& R) {
    GradedComplex<F> X;
    X.A = R.steps[0].algebra();
    X.phi = 0;
    X.plo = -(int(R.steps.size()) - 1);
    for (int n = X.plo; n <= 0; ++n) X.terms.push_back(R.steps[size_t(-n)]);
    for (int n = X.plo; n < 0; ++n) X.diffs.push_back(R.diff[size_t(-n - 1)]);
    return X;
}

}  // namespace koszul
