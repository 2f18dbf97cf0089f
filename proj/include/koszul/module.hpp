#pragma once

#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

// A graded module over a GradedAlgebra, supported on a finite degree window
// [lo, hi]. Data: a dimension for every (vertex, degree) and, for every arrow
// a: s -> t and degree d in [lo, hi-1], a matrix M(s)_d -> M(t)_{d+1}.
// Degrees outside the window read as zero, so all operations silently
// truncate there; callers that care about exactness near the window edge must
// choose the window accordingly.
template <class F>
class GradedModule {
public:
    using Alg = GradedAlgebra<F>;
    using APtr = typename Alg::Ptr;

    GradedModule() = default;

    static GradedModule zero(APtr A, int lo, int hi) {
        GradedModule M;
        M.init(std::move(A), lo, hi);
        return M;
    }

    // Builder with full shape validation.
    static GradedModule make(APtr A, int lo, int hi,
                             std::vector<std::vector<int>> dims,
                             std::vector<std::vector<Matrix<F>>> act) {
        GradedModule M;
        M.init(A, lo, hi);
        if (int(dims.size()) != A->num_vertices())
            throw std::invalid_argument("module: dims needs one row per vertex");
        for (const auto& row : dims)
            if (int(row.size()) != hi - lo + 1)
                throw std::invalid_argument("module: dims row must span the window");
        M.dims_ = std::move(dims);
        if (int(act.size()) != A->quiver().num_arrows())
            throw std::invalid_argument("module: one action list per arrow");
        for (int a = 0; a < A->quiver().num_arrows(); ++a) {
            if (int(act[a].size()) != std::max(hi - lo, 0))
                throw std::invalid_argument("module: action list must span the window");
            int s = A->quiver().arrows[a].src, t = A->quiver().arrows[a].tgt;
            for (int d = lo; d < hi; ++d) {
                const Matrix<F>& m = act[a][d - lo];
                if (m.rows() != M.dims_[t][d + 1 - lo] || m.cols() != M.dims_[s][d - lo])
                    throw std::invalid_argument("module: action matrix shape mismatch at degree " +
                                                std::to_string(d));
            }
        }
        M.act_ = std::move(act);
        return M;
    }

    static GradedModule simple(APtr A, int v, int degree = 0) {
        GradedModule M = zero(A, degree, degree);
        M.dims_[v][0] = 1;
        return M;
    }

    // P(v)<shift>: degree-d piece at vertex m is C_{d+shift}(v, m); arrows act
    // by composing on the outside. Natural support starts at -shift; the
    // window caps it at hi.
    static GradedModule projective(APtr A, int v, int shift, int hi) {
        int lo = -shift;
        if (hi < lo) hi = lo;
        // beyond the computed bound the algebra is provably zero only when its
        // support already ends below the bound
        if (hi + shift > A->bound() && !A->finite_within_bound())
            throw std::out_of_range("projective: window exceeds the algebra bound");
        auto adim = [&](int k, int m) { return k > A->bound() ? 0 : A->dim(k, v, m); };
        GradedModule M = zero(A, lo, hi);
        for (int m = 0; m < A->num_vertices(); ++m)
            for (int d = lo; d <= hi; ++d) M.dims_[m][d - lo] = adim(d + shift, m);
        const Quiver& q = A->quiver();
        for (int a = 0; a < q.num_arrows(); ++a) {
            int s = q.arrows[a].src, t = q.arrows[a].tgt;
            for (int d = lo; d < hi; ++d) {
                int n = M.dims_[s][d - lo], r = M.dims_[t][d + 1 - lo];
                Matrix<F> mat(r, n);
                Vec<F> arrow = A->basis_coords(1, s, t, A->arrow_local_index(a));
                for (int c = 0; c < n; ++c) {
                    Vec<F> x = A->basis_coords(d + shift, v, s, c);
                    Vec<F> y = A->compose(1, s, t, arrow, d + shift, v, x);
                    for (int rr = 0; rr < r; ++rr) mat.at(rr, c) = y[rr];
                }
                M.act_[a][d - lo] = std::move(mat);
            }
        }
        return M;
    }

    // --- queries ----------------------------------------------------------

    const APtr& algebra() const { return A_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    int dim(int v, int d) const {
        if (d < lo_ || d > hi_) return 0;
        return dims_[v][d - lo_];
    }
    int total_dim() const {
        int s = 0;
        for (const auto& row : dims_)
            for (int n : row) s += n;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }

    int& dim_ref(int v, int d) { return dims_[v][d - lo_]; }
    Matrix<F>& act_ref(int a, int d) { return act_[a][d - lo_]; }

    // M(src a)_d -> M(tgt a)_{d+1}; zero-shaped outside the window.
    Matrix<F> action(int a, int d) const {
        const Quiver& q = A_->quiver();
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        if (d < lo_ || d >= hi_) return Matrix<F>(dim(t, d + 1), dim(s, d));
        return act_[a][d - lo_];
    }

    // Matrix of the action of an element of C_hd(src, tgt) (given by its
    // coordinates) on the degree-d piece: M(src)_d -> M(tgt)_{d+hd}. Uses the
    // path expansion of the chosen basis.
    Matrix<F> action_of(int hd, int src, int tgt, const Vec<F>& coords, int d) const {
        Matrix<F> out(dim(tgt, d + hd), dim(src, d));
        if (out.rows() == 0 || out.cols() == 0) return out;
        if (hd == 0) {
            if (src != tgt) throw std::invalid_argument("action_of: degree-0 needs src == tgt");
            for (int i = 0; i < out.rows(); ++i) out.at(i, i) = coords[0];
            return out;
        }
        for (int idx = 0; idx < int(coords.size()); ++idx) {
            if (coords[idx].is_zero()) continue;
            for (const auto& [c, path] : A_->path_expansion(hd, src, tgt, idx)) {
                // path[0] applied last; walk from the back
                Matrix<F> m = action(path.back(), d);
                int deg = d + 1;
                for (int k = int(path.size()) - 2; k >= 0; --k) {
                    m = action(path[k], deg) * m;
                    ++deg;
                }
                for (int r = 0; r < out.rows(); ++r)
                    for (int cc = 0; cc < out.cols(); ++cc)
                        out.at(r, cc) += coords[idx] * c * m.at(r, cc);
            }
        }
        return out;
    }

    // --- constructions ----------------------------------------------------

    // M<j>(v)_d = M(v)_{d+j}.
    GradedModule shifted(int j) const {
        GradedModule M = *this;
        M.lo_ -= j;
        M.hi_ -= j;
        return M;
    }

    // Vector-space dual over the opposite algebra: N(v)_d = dual of M(v)_{-d}.
    // `op` must be the opposite of this module's algebra (same arrow order).
    GradedModule dualize(APtr op) const {
        if (op->num_vertices() != A_->num_vertices() ||
            op->quiver().num_arrows() != A_->quiver().num_arrows())
            throw std::invalid_argument("dualize: algebra shape mismatch");
        GradedModule N = zero(op, -hi_, -lo_);
        for (int v = 0; v < A_->num_vertices(); ++v)
            for (int d = -hi_; d <= -lo_; ++d) N.dims_[v][d + hi_] = dim(v, -d);
        for (int a = 0; a < A_->quiver().num_arrows(); ++a)
            for (int d = -hi_; d < -lo_; ++d) N.act_[a][d + hi_] = action(a, -d - 1).transpose();
        return N;
    }

    // Verifies that the arrow actions kill every combination of length-hd
    // compositions that vanishes in the algebra, for all hd that fit in the
    // window. This is the full module axiom given a degree-one generated
    // algebra.
    bool check() const {
        const Quiver& q = A_->quiver();
        int top = std::min(A_->bound(), hi_ - lo_);
        for (int hd = 2; hd <= top; ++hd)
            for (int lam = 0; lam < A_->num_vertices(); ++lam)
                for (int mu = 0; mu < A_->num_vertices(); ++mu) {
                    auto pairs = A_->w_pairs(hd, lam, mu);
                    if (pairs.empty()) continue;
                    Matrix<F> Mm(A_->dim(hd, lam, mu), int(pairs.size()));
                    for (size_t c = 0; c < pairs.size(); ++c) {
                        auto [a, g] = pairs[c];
                        int nu = q.arrows[a].src;
                        Vec<F> prod =
                            A_->compose(1, nu, mu, A_->basis_coords(1, nu, mu, A_->arrow_local_index(a)),
                                        hd - 1, lam, A_->basis_coords(hd - 1, lam, nu, g));
                        for (int r = 0; r < Mm.rows(); ++r) Mm.at(r, int(c)) = prod[r];
                    }
                    Matrix<F> K = kernel_basis(Mm);
                    for (int col = 0; col < K.cols(); ++col)
                        for (int d = lo_; d + hd <= hi_; ++d) {
                            Matrix<F> acc(dim(mu, d + hd), dim(lam, d));
                            if (acc.rows() == 0 || acc.cols() == 0) continue;
                            for (size_t w = 0; w < pairs.size(); ++w) {
                                const F& cw = K.at(int(w), col);
                                if (cw.is_zero()) continue;
                                auto [a, g] = pairs[w];
                                int nu = q.arrows[a].src;
                                Matrix<F> lower = action_of(
                                    hd - 1, lam, nu, A_->basis_coords(hd - 1, lam, nu, g), d);
                                Matrix<F> full = action(a, d + hd - 1) * lower;
                                for (int r = 0; r < acc.rows(); ++r)
                                    for (int cc = 0; cc < acc.cols(); ++cc)
                                        acc.at(r, cc) += cw * full.at(r, cc);
                            }
                            if (!acc.is_zero()) return false;
                        }
                }
        return true;
    }

    std::string dims_string() const {
        std::ostringstream s;
        for (int v = 0; v < A_->num_vertices(); ++v) {
            s << A_->quiver().vertices[v] << ":";
            for (int d = lo_; d <= hi_; ++d) s << " " << dim(v, d);
            s << (v + 1 < A_->num_vertices() ? "; " : "");
        }
        return s.str();
    }

private:
    void init(APtr A, int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("module: empty window");
        A_ = std::move(A);
        lo_ = lo;
        hi_ = hi;
        dims_.assign(A_->num_vertices(), std::vector<int>(hi - lo + 1, 0));
        act_.assign(A_->quiver().num_arrows(), {});
        const Quiver& q = A_->quiver();
        for (int a = 0; a < q.num_arrows(); ++a)
            act_[a].assign(std::max(hi - lo, 0), Matrix<F>(0, 0));
        // fix shapes of the zero matrices
        for (int a = 0; a < q.num_arrows(); ++a)
            for (int d = lo; d < hi; ++d) act_[a][d - lo] = Matrix<F>(0, 0);
    }

    APtr A_;
    int lo_ = 0, hi_ = 0;
    std::vector<std::vector<int>> dims_;            // dims_[v][d - lo]
    std::vector<std::vector<Matrix<F>>> act_;       // act_[a][d - lo]
};

// A degree-0 homomorphism: one matrix per (vertex, degree) over the union of
// the two windows.
template <class F>
struct ModuleHom {
    int lo = 0, hi = -1;
    std::vector<std::vector<Matrix<F>>> mats;  // mats[v][d - lo]: src(v)_d -> tgt(v)_d

    static ModuleHom zero(const GradedModule<F>& src, const GradedModule<F>& tgt) {
        ModuleHom h;
        h.lo = std::min(src.lo(), tgt.lo());
        h.hi = std::max(src.hi(), tgt.hi());
        int nv = src.algebra()->num_vertices();
        h.mats.assign(nv, std::vector<Matrix<F>>(h.hi - h.lo + 1, Matrix<F>(0, 0)));
        for (int v = 0; v < nv; ++v)
            for (int d = h.lo; d <= h.hi; ++d)
                h.mats[v][d - h.lo] = Matrix<F>(tgt.dim(v, d), src.dim(v, d));
        return h;
    }

    const Matrix<F>& mat(int v, int d) const {
        static const Matrix<F> empty(0, 0);
        if (d < lo || d > hi) return empty;
        return mats[v][d - lo];
    }
    Matrix<F>& mat_ref(int v, int d) { return mats[v][d - lo]; }

    bool is_zero() const {
        for (const auto& row : mats)
            for (const auto& m : row)
                if (!m.is_zero()) return false;
        return true;
    }
};

// Transpose of a degree-0 hom under vector-space duality: a map 'dual of
// target' -> 'dual of source' with matrices transposed and degrees negated.
template <class F>
ModuleHom<F> dual_hom(const ModuleHom<F>& f) {
    ModuleHom<F> g;
    g.lo = -f.hi;
    g.hi = -f.lo;
    g.mats.assign(f.mats.size(), {});
    for (size_t v = 0; v < f.mats.size(); ++v) {
        g.mats[v].resize(f.mats[v].size(), Matrix<F>(0, 0));
        for (int d = g.lo; d <= g.hi; ++d) g.mats[v][d - g.lo] = f.mat(int(v), -d).transpose();
    }
    return g;
}

template <class F>
bool is_module_hom(const GradedModule<F>& M, const GradedModule<F>& N, const ModuleHom<F>& h) {
    const Quiver& q = M.algebra()->quiver();
    int lo = std::min(M.lo(), N.lo()), hi = std::max(M.hi(), N.hi());
    for (int a = 0; a < q.num_arrows(); ++a)
        for (int d = lo; d < hi; ++d) {
            int s = q.arrows[a].src, t = q.arrows[a].tgt;
            Matrix<F> left = h.mat(t, d + 1) * M.action(a, d);
            Matrix<F> right = N.action(a, d) * h.mat(s, d);
            if (left != right) return false;
        }
    return true;
}

template <class F>
ModuleHom<F> compose_hom(const GradedModule<F>& M, const GradedModule<F>& N,
                         const GradedModule<F>& P, const ModuleHom<F>& g, const ModuleHom<F>& f) {
    // g: N -> P after f: M -> N
    ModuleHom<F> h = ModuleHom<F>::zero(M, P);
    for (int v = 0; v < M.algebra()->num_vertices(); ++v)
        for (int d = h.lo; d <= h.hi; ++d) h.mat_ref(v, d) = g.mat(v, d) * f.mat(v, d);
    return h;
}

// Basis of the space of degree-0 homomorphisms M -> N.
template <class F>
std::vector<ModuleHom<F>> hom_space(const GradedModule<F>& M, const GradedModule<F>& N) {
    const Quiver& q = M.algebra()->quiver();
    int nv = M.algebra()->num_vertices();
    int lo = std::min(M.lo(), N.lo()), hi = std::max(M.hi(), N.hi());
    // unknowns: entries of each phi_{v,d}
    std::vector<int> offset(nv * (hi - lo + 1) + 1, 0);
    auto slot = [&](int v, int d) { return v * (hi - lo + 1) + (d - lo); };
    int total = 0;
    for (int v = 0; v < nv; ++v)
        for (int d = lo; d <= hi; ++d) {
            offset[slot(v, d)] = total;
            total += N.dim(v, d) * M.dim(v, d);
        }
    offset.back() = total;
    std::vector<Vec<F>> rows;
    auto entry = [&](int v, int d, int r, int c) { return offset[slot(v, d)] + r * M.dim(v, d) + c; };
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int d = lo; d < hi; ++d) {
            Matrix<F> mact = M.action(a, d), nact = N.action(a, d);
            // constraint: phi_{t,d+1} mact - nact phi_{s,d} = 0, entrywise
            for (int r = 0; r < N.dim(t, d + 1); ++r)
                for (int c = 0; c < M.dim(s, d); ++c) {
                    Vec<F> row(total, F(0));
                    for (int k = 0; k < M.dim(t, d + 1); ++k)
                        row[entry(t, d + 1, r, k)] += mact.at(k, c);
                    for (int k = 0; k < N.dim(s, d); ++k)
                        row[entry(s, d, k, c)] -= nact.at(r, k);
                    rows.push_back(std::move(row));
                }
        }
    }
    Matrix<F> sys = rows.empty() ? Matrix<F>(0, total) : Matrix<F>::from_rows(rows);
    Matrix<F> K = kernel_basis(sys);
    std::vector<ModuleHom<F>> out;
    for (int col = 0; col < K.cols(); ++col) {
        ModuleHom<F> h = ModuleHom<F>::zero(M, N);
        for (int v = 0; v < nv; ++v)
            for (int d = lo; d <= hi; ++d)
                for (int r = 0; r < N.dim(v, d); ++r)
                    for (int c = 0; c < M.dim(v, d); ++c)
                        h.mat_ref(v, d).at(r, c) = K.at(entry(v, d, r, c), col);
        out.push_back(std::move(h));
    }
    return out;
}

// Basis of the degree-k homomorphisms M -> N, i.e. degree-0 maps M -> N<k>.
template <class F>
std::vector<ModuleHom<F>> hom_space(const GradedModule<F>& M, const GradedModule<F>& N, int k) {
    return hom_space(M, N.shifted(k));
}

template <class F>
struct SubquotientResult {
    GradedModule<F> module;
    ModuleHom<F> map;  // inclusion (kernel) or projection (cokernel)
};

template <class F>
SubquotientResult<F> kernel(const GradedModule<F>& M, const GradedModule<F>& N,
                            const ModuleHom<F>& f) {
    const Quiver& q = M.algebra()->quiver();
    auto K = GradedModule<F>::zero(M.algebra(), M.lo(), M.hi());
    int nv = M.algebra()->num_vertices();
    std::vector<std::vector<Matrix<F>>> basis(nv);
    for (int v = 0; v < nv; ++v)
        for (int d = M.lo(); d <= M.hi(); ++d) {
            Matrix<F> fb = f.mat(v, d);
            if (fb.cols() != M.dim(v, d)) fb = Matrix<F>(0, M.dim(v, d));
            Matrix<F> kb = kernel_basis(fb);
            K.dim_ref(v, d) = kb.cols();
            basis[v].push_back(std::move(kb));
        }
    ModuleHom<F> incl = ModuleHom<F>::zero(K, M);
    for (int v = 0; v < nv; ++v)
        for (int d = M.lo(); d <= M.hi(); ++d) incl.mat_ref(v, d) = basis[v][d - M.lo()];
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int d = M.lo(); d < M.hi(); ++d) {
            Matrix<F> target = M.action(a, d) * basis[s][d - M.lo()];
            auto X = solve_matrix(basis[t][d + 1 - M.lo()], target);
            if (!X) throw std::logic_error("kernel: action does not preserve the kernel");
            K.act_ref(a, d) = std::move(*X);
        }
    }
    return {std::move(K), std::move(incl)};
}

template <class F>
SubquotientResult<F> cokernel(const GradedModule<F>& M, const GradedModule<F>& N,
                              const ModuleHom<F>& f) {
    const Quiver& q = N.algebra()->quiver();
    auto Q = GradedModule<F>::zero(N.algebra(), N.lo(), N.hi());
    int nv = N.algebra()->num_vertices();
    std::vector<std::vector<QuotientSpace<F>>> qs(nv);
    for (int v = 0; v < nv; ++v)
        for (int d = N.lo(); d <= N.hi(); ++d) {
            Matrix<F> fb = f.mat(v, d);
            std::vector<Vec<F>> rows;
            for (int c = 0; c < fb.cols(); ++c) rows.push_back(fb.col(c));
            if (!rows.empty() && int(rows[0].size()) != N.dim(v, d))
                throw std::logic_error("cokernel: shape mismatch");
            qs[v].emplace_back(rows.empty() ? Matrix<F>(0, N.dim(v, d)) : Matrix<F>::from_rows(rows),
                               N.dim(v, d));
            Q.dim_ref(v, d) = qs[v].back().dim();
        }
    ModuleHom<F> proj = ModuleHom<F>::zero(N, Q);
    for (int v = 0; v < nv; ++v)
        for (int d = N.lo(); d <= N.hi(); ++d) {
            const auto& sp = qs[v][d - N.lo()];
            Matrix<F> p(sp.dim(), N.dim(v, d));
            for (int c = 0; c < N.dim(v, d); ++c) {
                Vec<F> e(N.dim(v, d), F(0));
                e[c] = F(1);
                p.set_col(c, sp.coords(std::move(e)));
            }
            proj.mat_ref(v, d) = std::move(p);
        }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int d = N.lo(); d < N.hi(); ++d) {
            const auto& from = qs[s][d - N.lo()];
            const auto& to = qs[t][d + 1 - N.lo()];
            Matrix<F> m(to.dim(), from.dim());
            for (int c = 0; c < from.dim(); ++c)
                m.set_col(c, to.coords(N.action(a, d).apply(from.lift(c))));
            Q.act_ref(a, d) = std::move(m);
        }
    }
    return {std::move(Q), std::move(proj)};
}

template <class F>
struct DirectSum {
    GradedModule<F> module;
    std::vector<GradedModule<F>> parts;

    int offset(int i, int v, int d) const {
        int o = 0;
        for (int k = 0; k < i; ++k) o += parts[k].dim(v, d);
        return o;
    }
};

template <class F>
DirectSum<F> direct_sum(std::vector<GradedModule<F>> parts,
                        typename GradedAlgebra<F>::Ptr A, int lo, int hi) {
    DirectSum<F> out;
    out.module = GradedModule<F>::zero(A, lo, hi);
    out.parts = std::move(parts);
    const Quiver& q = A->quiver();
    for (int v = 0; v < A->num_vertices(); ++v)
        for (int d = lo; d <= hi; ++d) {
            int n = 0;
            for (const auto& p : out.parts) n += p.dim(v, d);
            out.module.dim_ref(v, d) = n;
        }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int d = lo; d < hi; ++d) {
            Matrix<F> m(out.module.dim(t, d + 1), out.module.dim(s, d));
            int ro = 0, co = 0;
            for (const auto& p : out.parts) {
                Matrix<F> blk = p.action(a, d);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c) m.at(ro + r, co + c) = blk.at(r, c);
                ro += p.dim(t, d + 1);
                co += p.dim(s, d);
            }
            out.module.act_ref(a, d) = std::move(m);
        }
    }
    return out;
}

// The homomorphism P(v)<shift> -> N determined by sending the generator to
// the element `gen` of N(v)_{-shift}.
template <class F>
ModuleHom<F> hom_from_projective(const GradedModule<F>& P, int v, int shift,
                                 const GradedModule<F>& N, const Vec<F>& gen) {
    const auto& A = N.algebra();
    ModuleHom<F> h = ModuleHom<F>::zero(P, N);
    for (int m = 0; m < A->num_vertices(); ++m)
        for (int d = std::max(P.lo(), N.lo()); d <= std::min(P.hi(), N.hi()); ++d) {
            int n = P.dim(m, d);
            if (n == 0 || N.dim(m, d) == 0) continue;
            Matrix<F> mat(N.dim(m, d), n);
            for (int c = 0; c < n; ++c) {
                Vec<F> x = A->basis_coords(d + shift, v, m, c);
                Vec<F> y = N.action_of(d + shift, v, m, x, -shift).apply(gen);
                mat.set_col(c, y);
            }
            h.mat_ref(m, d) = std::move(mat);
        }
    return h;
}

template <class F>
struct ProjectiveSummand {
    int vertex = -1;
    int shift = 0;  // the summand is P(vertex)<shift>, head in degree -shift
};

template <class F>
struct CoverResult {
    GradedModule<F> cover;
    ModuleHom<F> onto;
    std::vector<ProjectiveSummand<F>> summands;
};

// Projective cover within the window [M.lo(), hi]: one summand P(v)<-d> per
// head basis element of M in (v, d), mapping its generator onto a lift. The
// induced map is surjective in the window.
template <class F>
CoverResult<F> projective_cover(const GradedModule<F>& M, int hi) {
    const auto& A = M.algebra();
    const Quiver& q = A->quiver();
    CoverResult<F> out;
    std::vector<GradedModule<F>> parts;
    std::vector<std::tuple<int, int, Vec<F>>> genlist;  // (vertex, degree, lift)
    for (int d = M.lo(); d <= M.hi(); ++d)
        for (int v = 0; v < A->num_vertices(); ++v) {
            int n = M.dim(v, d);
            if (n == 0) continue;
            std::vector<Vec<F>> rows;
            for (int a : q.arrows_into(v)) {
                Matrix<F> in = M.action(a, d - 1);
                for (int c = 0; c < in.cols(); ++c) rows.push_back(in.col(c));
            }
            QuotientSpace<F> head(rows.empty() ? Matrix<F>(0, n) : Matrix<F>::from_rows(rows), n);
            for (int k = 0; k < head.dim(); ++k) {
                genlist.emplace_back(v, d, head.lift(k));
                out.summands.push_back({v, -d});
                parts.push_back(GradedModule<F>::projective(A, v, -d, hi));
            }
        }
    DirectSum<F> sum = direct_sum(std::move(parts), A, M.lo(), hi);
    out.onto = ModuleHom<F>::zero(sum.module, M);
    for (size_t i = 0; i < genlist.size(); ++i) {
        auto& [v, d, gen] = genlist[i];
        ModuleHom<F> h = hom_from_projective(sum.parts[i], v, -d, M, gen);
        for (int m = 0; m < A->num_vertices(); ++m)
            for (int e = out.onto.lo; e <= out.onto.hi; ++e) {
                const Matrix<F>& blk = h.mat(m, e);
                int co = sum.offset(int(i), m, e);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        out.onto.mat_ref(m, e).at(r, co + c) = blk.at(r, c);
            }
    }
    out.cover = std::move(sum.module);
    return out;
}

// I(v)<shift>: the vector-space dual of the projective over the opposite
// algebra, supported in degrees [lo, -shift]. `Aop` must be A->opposite()
// (or the algebra whose opposite is A, arrow order preserved).
template <class F>
GradedModule<F> injective_module(typename GradedAlgebra<F>::Ptr A,
                                 typename GradedAlgebra<F>::Ptr Aop, int v, int shift, int lo) {
    auto P = GradedModule<F>::projective(Aop, v, -shift, -lo);
    return P.dualize(A);
}

// Graded-isomorphism test: equal dimensions plus an invertible degree-0
// homomorphism. Searches the hom space with a fixed-seed random walk and,
// for small hom spaces, an exhaustive coefficient grid over {-1, 0, 1}.
template <class F>
bool is_isomorphic(const GradedModule<F>& M, const GradedModule<F>& N, unsigned seed = 9001) {
    const auto& A = M.algebra();
    int lo = std::min(M.lo(), N.lo()), hi = std::max(M.hi(), N.hi());
    for (int v = 0; v < A->num_vertices(); ++v)
        for (int d = lo; d <= hi; ++d)
            if (M.dim(v, d) != N.dim(v, d)) return false;
    if (M.total_dim() == 0) return true;
    auto homs = hom_space(M, N);
    if (homs.empty()) return false;
    auto invertible = [&](const ModuleHom<F>& h) {
        for (int v = 0; v < A->num_vertices(); ++v)
            for (int d = lo; d <= hi; ++d) {
                int n = M.dim(v, d);
                if (n == 0) continue;
                Matrix<F> m = h.mat(v, d);
                if (m.rows() != n || m.cols() != n || m.rank() != n) return false;
            }
        return true;
    };
    auto combo = [&](const std::vector<long>& cs) {
        ModuleHom<F> h = ModuleHom<F>::zero(M, N);
        for (size_t i = 0; i < homs.size(); ++i) {
            if (cs[i] == 0) continue;
            F c((long)cs[i]);
            for (int v = 0; v < A->num_vertices(); ++v)
                for (int d = lo; d <= hi; ++d) {
                    const Matrix<F>& b = homs[i].mat(v, d);
                    for (int r = 0; r < b.rows(); ++r)
                        for (int cc = 0; cc < b.cols(); ++cc)
                            h.mat_ref(v, d).at(r, cc) += c * b.at(r, cc);
                }
        }
        return h;
    };
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<long> cs(homs.size());
        for (auto& c : cs) c = dist(rng);
        if (invertible(combo(cs))) return true;
    }
    if (homs.size() <= 6) {
        std::vector<long> cs(homs.size(), -1);
        while (true) {
            if (invertible(combo(cs))) return true;
            size_t i = 0;
            while (i < cs.size() && cs[i] == 1) cs[i++] = -1;
            if (i == cs.size()) break;
            ++cs[i];
        }
    }
    return false;
}

}  // namespace koszul
