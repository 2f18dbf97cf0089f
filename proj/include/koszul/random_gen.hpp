#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/dual.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/module.hpp"
#include "koszul/quiver.hpp"

namespace koszul {

// Shape parameters for a randomly generated quadratic presentation. The
// relation space of each (source, target) slot is sampled as the kernel of a
// random matrix over the length-2 path basis, so density 0 gives no relations
// and density 1 makes every length-2 path a relation.
struct RandomPresentationSpec {
    int max_vertices = 4;
    int max_arrows = 6;
    double density = 0.5;
    unsigned seed = 1;
};

template <class F>
Presentation<F> generate_random(const RandomPresentationSpec& spec) {
    if (spec.max_vertices < 1) throw std::invalid_argument("generate_random: need >= 1 vertex");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw std::invalid_argument("generate_random: density outside [0, 1]");
    std::mt19937 rng(spec.seed);
    Presentation<F> p;
    p.bound = 4;
    int nv = std::uniform_int_distribution<int>(1, spec.max_vertices)(rng);
    for (int v = 0; v < nv; ++v) p.quiver.add_vertex("v" + std::to_string(v));
    int na = std::uniform_int_distribution<int>(0, spec.max_arrows)(rng);
    std::uniform_int_distribution<int> pick_vertex(0, nv - 1);
    for (int a = 0; a < na; ++a)
        p.quiver.add_arrow("a" + std::to_string(a), pick_vertex(rng), pick_vertex(rng));
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int lam = 0; lam < nv; ++lam)
        for (int mu = 0; mu < nv; ++mu) {
            auto paths = detail::quad_paths(p.quiver, lam, mu);
            int n2 = int(paths.size());
            if (n2 == 0) continue;
            int k = int(spec.density * n2 + 0.5);
            if (k == 0) continue;
            // kernel of a random (n2 - k) x n2 matrix; generically k-dimensional
            Matrix<F> M(n2 - k, n2);
            for (int r = 0; r < M.rows(); ++r)
                for (int c = 0; c < M.cols(); ++c) M.at(r, c) = F(long(entry(rng)));
            Matrix<F> K = kernel_basis(M);
            for (int c = 0; c < K.cols(); ++c) {
                Relation<F> rel;
                rel.src = lam;
                rel.tgt = mu;
                rel.degree = 2;
                for (int r = 0; r < n2; ++r) {
                    if (K.at(r, c).is_zero()) continue;
                    auto [a, b] = paths[r];
                    rel.terms.push_back({K.at(r, c), {a, b}});
                }
                p.relations.push_back(std::move(rel));
            }
        }
    p.validate();
    return p;
}

// A random graded module over A within its window: the quotient of a shifted
// projective by the submodule generated by a few random elements. Always
// satisfies the relations by construction.
template <class F>
GradedModule<F> random_module(typename GradedAlgebra<F>::Ptr A, std::mt19937& rng, int hi,
                              int max_generators = 2) {
    const Quiver& q = A->quiver();
    int nv = A->num_vertices();
    std::uniform_int_distribution<int> pick_vertex(0, nv - 1);
    std::uniform_int_distribution<int> pick_shift(0, 1);
    std::uniform_int_distribution<long> entry(-2, 2);
    GradedModule<F> P = GradedModule<F>::projective(A, pick_vertex(rng), pick_shift(rng), hi);
    int lo = P.lo();
    // random submodule generators, closed under the arrow action
    std::vector<std::vector<std::vector<Vec<F>>>> rows(
        nv, std::vector<std::vector<Vec<F>>>(hi - lo + 1));
    int ngen = std::uniform_int_distribution<int>(0, max_generators)(rng);
    std::vector<std::tuple<int, int, Vec<F>>> queue;
    for (int g = 0; g < ngen; ++g) {
        int w = pick_vertex(rng);
        int d = std::uniform_int_distribution<int>(lo + 1, hi)(rng);
        if (P.dim(w, d) == 0) continue;
        Vec<F> x(P.dim(w, d));
        for (auto& e : x) e = F(entry(rng));
        queue.emplace_back(w, d, std::move(x));
    }
    while (!queue.empty()) {
        auto [w, d, x] = std::move(queue.back());
        queue.pop_back();
        rows[w][d - lo].push_back(x);
        if (d == hi) continue;
        for (int a : q.arrows_from(w)) {
            Vec<F> y = P.action(a, d).apply(x);
            bool nz = false;
            for (const auto& e : y)
                if (!e.is_zero()) { nz = true; break; }
            if (nz) queue.emplace_back(q.arrows[a].tgt, d + 1, std::move(y));
        }
    }
    auto Q = GradedModule<F>::zero(A, lo, hi);
    std::vector<std::vector<QuotientSpace<F>>> qs(nv);
    for (int v = 0; v < nv; ++v)
        for (int d = lo; d <= hi; ++d) {
            const auto& rr = rows[v][d - lo];
            qs[v].emplace_back(rr.empty() ? Matrix<F>(0, P.dim(v, d)) : Matrix<F>::from_rows(rr),
                               P.dim(v, d));
            Q.dim_ref(v, d) = qs[v].back().dim();
        }
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int d = lo; d < hi; ++d) {
            const auto& from = qs[s][d - lo];
            const auto& to = qs[t][d + 1 - lo];
            Matrix<F> m(to.dim(), from.dim());
            for (int c = 0; c < from.dim(); ++c)
                m.set_col(c, to.coords(P.action(a, d).apply(from.lift(c))));
            Q.act_ref(a, d) = std::move(m);
        }
    }
    return Q;
}

// A random invertible square matrix with small integer entries.
template <class F>
Matrix<F> random_invertible(int n, std::mt19937& rng) {
    std::uniform_int_distribution<long> entry(-2, 2);
    while (true) {
        Matrix<F> G(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) G.at(r, c) = F(entry(rng));
        if (G.rank() == n) return G;
    }
}

// Recomputes every block of delta after a random change of basis of the
// degree-one arrow span (with the inverse-transpose change on the dual side)
// and compares with the stored delta. The pairing convention makes this an
// exact identity; any sign or transposition mistake breaks it.
template <class F>
bool delta_basis_change_invariant(const KoszulComplex<F>& C, std::mt19937& rng) {
    const Quiver& q = C.A->quiver();
    int nv = q.num_vertices();
    // group arrows by (source, target) slot and draw one basis change per slot
    std::vector<std::vector<std::vector<int>>> slot(nv, std::vector<std::vector<int>>(nv));
    for (int a = 0; a < q.num_arrows(); ++a) slot[q.arrows[a].src][q.arrows[a].tgt].push_back(a);
    std::vector<std::vector<Matrix<F>>> G(nv, std::vector<Matrix<F>>(nv));
    std::vector<std::vector<Matrix<F>>> Ginvt(nv, std::vector<Matrix<F>>(nv));
    for (int u = 0; u < nv; ++u)
        for (int v = 0; v < nv; ++v) {
            int m = int(slot[u][v].size());
            if (m == 0) continue;
            G[u][v] = random_invertible<F>(m, rng);
            auto inv = inverse(G[u][v]);
            if (!inv) return false;
            Ginvt[u][v] = inv->transpose();
        }
    int rmax = C.M.hi(), smax = C.N.hi();
    for (int lam = 0; lam < nv; ++lam)
        for (int nu = 0; nu < nv; ++nu)
            for (int r = C.M.lo(); r < rmax; ++r)
                for (int s = C.N.lo(); s < smax; ++s) {
                    // the block from nu to lam collects exactly the arrows
                    // lam -> nu; a basis change mixes arrows within that slot
                    Matrix<F> alt(C.dim_at(lam, r + 1, s + 1), C.dim_at(nu, r, s));
                    const auto& as = slot[lam][nu];
                    int m = int(as.size());
                    for (int i = 0; i < m; ++i) {
                        Matrix<F> ma(C.M.dim(lam, r + 1), C.M.dim(nu, r));
                        Matrix<F> na(C.N.dim(lam, s + 1), C.N.dim(nu, s));
                        for (int j = 0; j < m; ++j) {
                            const F& g = G[lam][nu].at(j, i);
                            const F& gi = Ginvt[lam][nu].at(j, i);
                            Matrix<F> maj = C.M.action(as[j], r);
                            Matrix<F> naj = C.N.action(as[j], s);
                            if (!g.is_zero())
                                for (int x = 0; x < ma.rows(); ++x)
                                    for (int y = 0; y < ma.cols(); ++y)
                                        ma.at(x, y) += g * maj.at(x, y);
                            if (!gi.is_zero())
                                for (int x = 0; x < na.rows(); ++x)
                                    for (int y = 0; y < na.cols(); ++y)
                                        na.at(x, y) += gi * naj.at(x, y);
                        }
                        accumulate_kron(alt, ma, na);
                    }
                    if (!(alt == C.delta_block(lam, nu, r, s))) return false;
                }
    return true;
}

struct HarnessResult {
    int tested = 0;
    int rejected = 0;  // instances skipped by the desk-scale size cap
    bool ok = true;
    std::string detail;
};

// Property harness: n random quadratic presentations paired with random
// bimodules, checking that the pairing differential squares to zero, plus a
// basis-change invariance check on the first `basis_changes` instances.
// Presentations whose total dimension up to the bound exceeds a desk-scale
// cap are rejected and resampled (free algebras on many loops grow too fast
// to test exactly).
template <class F>
HarnessResult delta_property_harness(int n, unsigned seed, int basis_changes,
                                     int max_vertices = 4, int max_arrows = 6,
                                     int dim_cap = 40) {
    HarnessResult res;
    std::mt19937 meta(seed);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    unsigned sub = 0;
    while (res.tested < n) {
        RandomPresentationSpec spec;
        spec.max_vertices = max_vertices;
        spec.max_arrows = max_arrows;
        spec.density = dens(meta);
        spec.seed = seed * 1000003u + (sub++);
        auto p = generate_random<F>(spec);
        p.bound = 3;
        auto A = GradedAlgebra<F>::build_quadratic(p);
        int total = 0;
        for (int d = 0; d <= p.bound; ++d)
            for (int v = 0; v < A->num_vertices(); ++v)
                for (int w = 0; w < A->num_vertices(); ++w) total += A->dim(d, v, w);
        if (total > dim_cap) {
            ++res.rejected;
            continue;
        }
        auto dp = quadratic_dual(p).first;
        dp.bound = p.bound;
        auto D = GradedAlgebra<F>::build_quadratic(dp);
        int dtotal = 0;
        for (int d = 0; d <= dp.bound; ++d)
            for (int v = 0; v < D->num_vertices(); ++v)
                for (int w = 0; w < D->num_vertices(); ++w) dtotal += D->dim(d, v, w);
        if (dtotal > dim_cap) {
            ++res.rejected;
            continue;
        }
        std::mt19937 rng(spec.seed ^ 0x9e3779b9u);
        auto M = random_module<F>(A->opposite(), rng, 2, 1);
        auto N = random_module<F>(D, rng, 2, 1);
        auto C = make_koszul_complex<F>(A, M, N);
        if (!C.delta_squared_zero()) {
            res.ok = false;
            res.detail = "delta squared nonzero at seed " + std::to_string(spec.seed);
            return res;
        }
        if (res.tested < basis_changes && !delta_basis_change_invariant(C, rng)) {
            res.ok = false;
            res.detail = "basis dependence at seed " + std::to_string(spec.seed);
            return res;
        }
        ++res.tested;
    }
    res.detail = "all instances passed";
    return res;
}

// Random (presentation, vertex subset) pairs whose full subcategory is
// generated in degree one, run through the subquotient duality comparison.
template <class F>
HarnessResult subquotient_property_harness(int n, unsigned seed) {
    HarnessResult res;
    std::mt19937 meta(seed);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    unsigned sub = 0;
    while (res.tested < n) {
        RandomPresentationSpec spec;
        spec.density = dens(meta);
        spec.seed = seed * 2000003u + (sub++);
        auto p = generate_random<F>(spec);
        p.bound = 3;
        auto A = GradedAlgebra<F>::build_quadratic(p);
        int total = 0;
        for (int d = 0; d <= p.bound; ++d)
            for (int v = 0; v < A->num_vertices(); ++v)
                for (int w = 0; w < A->num_vertices(); ++w) total += A->dim(d, v, w);
        if (total > 40) {
            ++res.rejected;
            continue;
        }
        int nv = p.quiver.num_vertices();
        std::vector<int> Lambda;
        for (int v = 0; v < nv; ++v)
            if (std::uniform_int_distribution<int>(0, 1)(meta)) Lambda.push_back(v);
        if (Lambda.empty()) Lambda.push_back(std::uniform_int_distribution<int>(0, nv - 1)(meta));
        auto rep = subquotient_duality_check(p, Lambda);
        if (!rep.applicable) {
            ++res.rejected;
            continue;
        }
        if (!rep.ok) {
            res.ok = false;
            res.detail = "subquotient mismatch at seed " + std::to_string(spec.seed) + ": " +
                         rep.detail;
            return res;
        }
        ++res.tested;
    }
    res.detail = "all instances passed";
    return res;
}

}  // namespace koszul
