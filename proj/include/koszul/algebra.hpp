#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/quiver.hpp"

namespace koszul {

// The graded algebra (equivalently, the positively graded category on the
// quiver's vertex set) C = F/<R>, computed degree by degree up to a bound.
//
// Degree-d hom spaces C_d(src, tgt) carry a chosen basis. For degree d >= 2
// the basis lives in the "one arrow off" space
//   W_d(src, tgt) = sum over arrows a into tgt of C_{d-1}(src, src(a)),
// indexed by pairs (a, lower-basis-element); the ideal's degree-d layer is a
// subspace of W_d and the basis of C_d is the canonical complement (non-pivot
// coordinates of the left-to-right RREF). Structure constants for all degree
// splits are tabulated after construction, so derived algebras (opposite,
// subcategory, quotient) can share the same interface without a presentation.
template <class F>
class GradedAlgebra {
public:
    using Ptr = std::shared_ptr<const GradedAlgebra<F>>;

    // --- construction -----------------------------------------------------

    static Ptr build(const Presentation<F>& pres, int bound = -1) {
        if (bound < 0) bound = pres.bound;
        if (bound < 2) throw std::invalid_argument("build_algebra: bound must be >= 2");
        pres.validate();
        auto A = std::make_shared<GradedAlgebra<F>>(private_tag{});
        A->quiver_ = pres.quiver;
        A->bound_ = bound;
        A->nv_ = pres.quiver.num_vertices();
        A->build_from_presentation(pres);
        return A;
    }

    // Quadratic loader: rejects non-quadratic input.
    static Ptr build_quadratic(const Presentation<F>& pres, int bound = -1) {
        if (!pres.is_quadratic())
            throw std::invalid_argument("build_algebra: presentation is not quadratic; "
                                        "use the monomial loader");
        return build(pres, bound);
    }

    // Monomial loader: single-path relations of any degree >= 2.
    static Ptr build_monomial(const Presentation<F>& pres, int bound = -1) {
        if (!pres.is_monomial())
            throw std::invalid_argument("build_algebra_monomial: relations must be single paths");
        return build(pres, bound);
    }

    // --- basic queries ----------------------------------------------------

    const Quiver& quiver() const { return quiver_; }
    int bound() const { return bound_; }
    int num_vertices() const { return nv_; }

    int dim(int d, int src, int tgt) const {
        if (d < 0) return 0;
        if (d > bound_)
            throw std::out_of_range("GradedAlgebra: degree " + std::to_string(d) +
                                    " beyond computed bound " + std::to_string(bound_));
        return dims_[d][src][tgt];
    }
    int dim_total(int d) const {
        int s = 0;
        for (int a = 0; a < nv_; ++a)
            for (int b = 0; b < nv_; ++b) s += dim(d, a, b);
        return s;
    }
    std::vector<int> hilbert() const {
        std::vector<int> h;
        for (int d = 0; d <= bound_; ++d) h.push_back(dim_total(d));
        return h;
    }
    int top_degree() const {
        for (int d = bound_; d >= 0; --d)
            if (dim_total(d) > 0) return d;
        return 0;
    }
    bool finite_within_bound() const { return top_degree() < bound_; }

    // Position of arrow a within the basis of C_1(src(a), tgt(a)).
    int arrow_local_index(int a) const { return arrow_local_[a]; }
    int local_to_arrow(int src, int tgt, int k) const {
        int seen = 0;
        for (int i = 0; i < quiver_.num_arrows(); ++i)
            if (quiver_.arrows[i].src == src && quiver_.arrows[i].tgt == tgt)
                if (seen++ == k) return i;
        throw std::out_of_range("local_to_arrow");
    }

    // --- multiplication ---------------------------------------------------

    // f in C_i(fsrc, ftgt) composed with g in C_j(gsrc, fsrc) ("apply g
    // first"); returns coordinates in C_{i+j}(gsrc, ftgt).
    Vec<F> compose(int i, int fsrc, int ftgt, const Vec<F>& f,
                   int j, int gsrc, const Vec<F>& g) const {
        if (i + j > bound_) throw std::out_of_range("compose: degree beyond bound");
        if (int(f.size()) != dim(i, fsrc, ftgt) || int(g.size()) != dim(j, gsrc, fsrc))
            throw std::invalid_argument("compose: coordinate size mismatch");
        Vec<F> out(dim(i + j, gsrc, ftgt), F(0));
        if (i == 0) {
            if (fsrc != ftgt) return out;
            for (size_t k = 0; k < g.size(); ++k) out[k] = f[0] * g[k];
            return out;
        }
        if (j == 0) {
            if (gsrc != fsrc) return out;
            for (size_t k = 0; k < f.size(); ++k) out[k] = g[0] * f[k];
            return out;
        }
        const Table& t = table(i, j, gsrc, fsrc, ftgt);
        int nf = dim(i, fsrc, ftgt), ng = dim(j, gsrc, fsrc);
        if (t.prod.empty()) return out;
        for (int a = 0; a < nf; ++a) {
            if (f[a].is_zero()) continue;
            for (int b = 0; b < ng; ++b) {
                if (g[b].is_zero()) continue;
                const Vec<F>& prod = t.prod[size_t(a) * ng + b];
                F c = f[a] * g[b];
                for (size_t k = 0; k < prod.size(); ++k) out[k] += c * prod[k];
            }
        }
        return out;
    }

    Vec<F> unit_coords(int /*lam*/) const { return Vec<F>{F(1)}; }
    Vec<F> basis_coords(int d, int src, int tgt, int idx) const {
        Vec<F> v(dim(d, src, tgt), F(0));
        v[idx] = F(1);
        return v;
    }

    // --- degree-one generation and factorization --------------------------

    // W_d(src, tgt) index pairs (arrow into tgt, basis index of C_{d-1}).
    std::vector<std::pair<int, int>> w_pairs(int d, int src, int tgt) const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < quiver_.num_arrows(); ++a) {
            if (quiver_.arrows[a].tgt != tgt) continue;
            int n = dim(d - 1, src, quiver_.arrows[a].src);
            for (int g = 0; g < n; ++g) out.emplace_back(a, g);
        }
        return out;
    }

    bool degree_one_generated() const { return degree_one_generated_; }

    // Rows express the basis of C_d(src, tgt) as combinations of W_d pairs
    // (a, g), i.e. of products a o g. Throws when C is not generated in
    // degree one (then no such expression exists).
    const Matrix<F>& expr(int d, int src, int tgt) const {
        if (!degree_one_generated_)
            throw std::logic_error("GradedAlgebra: not generated in degree one");
        if (d < 2 || d > bound_) throw std::out_of_range("expr: bad degree");
        return expr_[d][src][tgt];
    }

    // --- display ----------------------------------------------------------

    // Expands a basis element into paths (only meaningful for degree-one
    // generated algebras; used for reports).
    std::vector<std::pair<F, std::vector<int>>> path_expansion(int d, int src, int tgt,
                                                               int idx) const {
        std::map<std::vector<int>, F> acc;
        Vec<F> v = basis_coords(d, src, tgt, idx);
        expand_paths(d, src, tgt, v, {}, F(1), acc);
        std::vector<std::pair<F, std::vector<int>>> out;
        for (auto& [path, c] : acc)
            if (!c.is_zero()) out.emplace_back(c, path);
        return out;
    }

    std::string basis_name(int d, int src, int tgt, int idx) const {
        if (d == 0) return "e_" + quiver_.vertices[src];
        auto paths = path_expansion(d, src, tgt, idx);
        std::ostringstream s;
        for (size_t i = 0; i < paths.size(); ++i) {
            if (i) s << " + ";
            if (!paths[i].first.is_one()) s << paths[i].first.str() << "*";
            for (size_t k = 0; k < paths[i].second.size(); ++k) {
                if (k) s << "\xe2\x88\x98";
                s << quiver_.arrows[paths[i].second[k]].name;
            }
        }
        return s.str();
    }

    // --- structural checks ------------------------------------------------

    bool check_associativity() const {
        for (int i = 1; i <= bound_; ++i)
            for (int j = 1; i + j <= bound_; ++j)
                for (int k = 1; i + j + k <= bound_; ++k)
                    for (int l = 0; l < nv_; ++l)
                        for (int m = 0; m < nv_; ++m)
                            for (int n = 0; n < nv_; ++n)
                                for (int o = 0; o < nv_; ++o) {
                                    // f: n->o deg i, g: m->n deg j, h: l->m deg k
                                    for (int fi = 0; fi < dim(i, n, o); ++fi)
                                        for (int gi = 0; gi < dim(j, m, n); ++gi)
                                            for (int hi = 0; hi < dim(k, l, m); ++hi) {
                                                auto f = basis_coords(i, n, o, fi);
                                                auto g = basis_coords(j, m, n, gi);
                                                auto h = basis_coords(k, l, m, hi);
                                                auto fg = compose(i, n, o, f, j, m, g);
                                                auto gh = compose(j, m, n, g, k, l, h);
                                                auto left = compose(i + j, m, o, fg, k, l, h);
                                                auto right = compose(i, n, o, f, j + k, l, gh);
                                                if (left != right) return false;
                                            }
                                }
        return true;
    }

    // --- derived algebras -------------------------------------------------

    Ptr opposite() const {
        auto B = std::make_shared<GradedAlgebra<F>>(private_tag{});
        B->nv_ = nv_;
        B->bound_ = bound_;
        B->quiver_.vertices = quiver_.vertices;
        for (const auto& a : quiver_.arrows) B->quiver_.add_arrow(a.name, a.tgt, a.src);
        B->dims_.assign(bound_ + 1, grid(0));
        for (int d = 0; d <= bound_; ++d)
            for (int s = 0; s < nv_; ++s)
                for (int t = 0; t < nv_; ++t) B->dims_[d][s][t] = dims_[d][t][s];
        // mult^op(f, g) = mult(g, f) on the shared bases
        for (int i = 1; i <= bound_; ++i)
            for (int j = 1; i + j <= bound_; ++j)
                for (int lam = 0; lam < nv_; ++lam)
                    for (int nu = 0; nu < nv_; ++nu)
                        for (int mu = 0; mu < nv_; ++mu) {
                            // op: f in C^op_i(nu,mu) = C_i(mu,nu), g in C^op_j(lam,nu) = C_j(nu,lam)
                            int nf = B->dims_[i][nu][mu], ng = B->dims_[j][lam][nu];
                            if (nf == 0 || ng == 0) continue;
                            Table t;
                            t.prod.resize(size_t(nf) * ng);
                            for (int a = 0; a < nf; ++a)
                                for (int b = 0; b < ng; ++b)
                                    t.prod[size_t(a) * ng + b] =
                                        compose(j, nu, lam, basis_coords(j, nu, lam, b),
                                                i, mu, basis_coords(i, mu, nu, a));
                            B->mult_[key(i, j, lam, nu, mu)] = std::move(t);
                        }
        B->finalize_arrow_index();
        B->compute_expr_generic();
        return B;
    }

    Ptr full_subcategory(const std::vector<int>& Lambda) const {
        check_subset(Lambda);
        auto B = std::make_shared<GradedAlgebra<F>>(private_tag{});
        int m = int(Lambda.size());
        B->nv_ = m;
        B->bound_ = bound_;
        for (int v : Lambda) B->quiver_.vertices.push_back(quiver_.vertices[v]);
        std::vector<int> pos(nv_, -1);
        for (int k = 0; k < m; ++k) pos[Lambda[k]] = k;
        for (const auto& a : quiver_.arrows)
            if (pos[a.src] >= 0 && pos[a.tgt] >= 0)
                B->quiver_.add_arrow(a.name, pos[a.src], pos[a.tgt]);
        B->dims_.assign(bound_ + 1, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
        for (int d = 0; d <= bound_; ++d)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) B->dims_[d][s][t] = dims_[d][Lambda[s]][Lambda[t]];
        for (int i = 1; i <= bound_; ++i)
            for (int j = 1; i + j <= bound_; ++j)
                for (int lam = 0; lam < m; ++lam)
                    for (int nu = 0; nu < m; ++nu)
                        for (int mu = 0; mu < m; ++mu) {
                            int nf = B->dims_[i][nu][mu], ng = B->dims_[j][lam][nu];
                            if (nf == 0 || ng == 0) continue;
                            Table t;
                            t.prod.resize(size_t(nf) * ng);
                            for (int a = 0; a < nf; ++a)
                                for (int b = 0; b < ng; ++b)
                                    t.prod[size_t(a) * ng + b] = compose(
                                        i, Lambda[nu], Lambda[mu], basis_coords(i, Lambda[nu], Lambda[mu], a),
                                        j, Lambda[lam], basis_coords(j, Lambda[lam], Lambda[nu], b));
                            B->mult_[B->key(i, j, lam, nu, mu)] = std::move(t);
                        }
        B->finalize_arrow_index();
        B->compute_expr_generic();
        return B;
    }

    Ptr quotient_category(const std::vector<int>& Lambda) const {
        check_subset(Lambda);
        auto B = std::make_shared<GradedAlgebra<F>>(private_tag{});
        int m = int(Lambda.size());
        B->nv_ = m;
        B->bound_ = bound_;
        for (int v : Lambda) B->quiver_.vertices.push_back(quiver_.vertices[v]);
        std::vector<int> pos(nv_, -1);
        for (int k = 0; k < m; ++k) pos[Lambda[k]] = k;
        std::vector<bool> inside(nv_, false);
        for (int v : Lambda) inside[v] = true;
        for (const auto& a : quiver_.arrows)
            if (pos[a.src] >= 0 && pos[a.tgt] >= 0)
                B->quiver_.add_arrow(a.name, pos[a.src], pos[a.tgt]);

        // per (lam, mu, d): quotient of C_d by composites through outside vertices
        std::vector<std::vector<std::vector<QuotientSpace<F>>>> qs(
            bound_ + 1, std::vector<std::vector<QuotientSpace<F>>>(m, std::vector<QuotientSpace<F>>(m)));
        B->dims_.assign(bound_ + 1, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
        for (int d = 0; d <= bound_; ++d)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) {
                    int n = dims_[d][Lambda[s]][Lambda[t]];
                    std::vector<Vec<F>> rows;
                    for (int split = 1; split < d; ++split)
                        for (int nu = 0; nu < nv_; ++nu) {
                            if (inside[nu]) continue;
                            for (int a = 0; a < dims_[split][nu][Lambda[t]]; ++a)
                                for (int b = 0; b < dims_[d - split][Lambda[s]][nu]; ++b)
                                    rows.push_back(compose(split, nu, Lambda[t],
                                                           basis_coords(split, nu, Lambda[t], a),
                                                           d - split, Lambda[s],
                                                           basis_coords(d - split, Lambda[s], nu, b)));
                        }
                    qs[d][s][t] = QuotientSpace<F>(Matrix<F>::from_rows(rows), n);
                    B->dims_[d][s][t] = qs[d][s][t].dim();
                }
        for (int i = 1; i <= bound_; ++i)
            for (int j = 1; i + j <= bound_; ++j)
                for (int lam = 0; lam < m; ++lam)
                    for (int nu = 0; nu < m; ++nu)
                        for (int mu = 0; mu < m; ++mu) {
                            int nf = B->dims_[i][nu][mu], ng = B->dims_[j][lam][nu];
                            if (nf == 0 || ng == 0) continue;
                            Table t;
                            t.prod.resize(size_t(nf) * ng);
                            for (int a = 0; a < nf; ++a)
                                for (int b = 0; b < ng; ++b) {
                                    Vec<F> fa = qs[i][nu][mu].lift(a);
                                    Vec<F> gb = qs[j][lam][nu].lift(b);
                                    Vec<F> p = compose(i, Lambda[nu], Lambda[mu], fa,
                                                       j, Lambda[lam], gb);
                                    t.prod[size_t(a) * ng + b] = qs[i + j][lam][mu].coords(p);
                                }
                            B->mult_[B->key(i, j, lam, nu, mu)] = std::move(t);
                        }
        B->finalize_arrow_index();
        B->compute_expr_generic();
        return B;
    }

    // Quadratic presentation induced by the degree <= 2 part (arrows = basis
    // of C_1, relations = kernel of the length-2 composition map). Requires
    // degree-one generation in degree 2 at least.
    Presentation<F> induced_quadratic_presentation() const {
        Presentation<F> p;
        p.bound = bound_;
        p.quiver = quiver_;
        for (int lam = 0; lam < nv_; ++lam)
            for (int mu = 0; mu < nv_; ++mu) {
                auto pairs = w_pairs(2, lam, mu);  // (a, local index in C_1(lam, src a))
                if (pairs.empty()) continue;
                Matrix<F> M(dim(2, lam, mu), int(pairs.size()));
                for (size_t c = 0; c < pairs.size(); ++c) {
                    auto [a, g] = pairs[c];
                    int nu = quiver_.arrows[a].src;
                    Vec<F> prod = compose(1, nu, mu, basis_coords(1, nu, mu, arrow_local_[a]),
                                          1, lam, basis_coords(1, lam, nu, g));
                    for (int r = 0; r < M.rows(); ++r) M.at(r, int(c)) = prod[r];
                }
                Matrix<F> K = kernel_basis(M);
                for (int c = 0; c < K.cols(); ++c) {
                    Relation<F> rel;
                    rel.src = lam;
                    rel.tgt = mu;
                    rel.degree = 2;
                    for (size_t r = 0; r < pairs.size(); ++r) {
                        if (K.at(int(r), c).is_zero()) continue;
                        auto [a, g] = pairs[r];
                        int b = local_to_arrow(lam, quiver_.arrows[a].src, g);
                        rel.terms.push_back({K.at(int(r), c), {a, b}});
                    }
                    p.relations.push_back(std::move(rel));
                }
            }
        return p;
    }

    // Rank of the composition map C_1 (x) C_{d-1} -> C_d summed over vertex
    // pairs; used by the subquotient compatibility check.
    int multiplication_rank(int d) const {
        int total = 0;
        for (int lam = 0; lam < nv_; ++lam)
            for (int mu = 0; mu < nv_; ++mu) {
                auto pairs = w_pairs(d, lam, mu);
                if (pairs.empty()) continue;
                Matrix<F> M(dim(d, lam, mu), int(pairs.size()));
                for (size_t c = 0; c < pairs.size(); ++c) {
                    auto [a, g] = pairs[c];
                    int nu = quiver_.arrows[a].src;
                    Vec<F> prod = compose(1, nu, mu, basis_coords(1, nu, mu, arrow_local_[a]),
                                          d - 1, lam, basis_coords(d - 1, lam, nu, g));
                    for (int r = 0; r < M.rows(); ++r) M.at(r, int(c)) = prod[r];
                }
                total += M.rank();
            }
        return total;
    }

    struct private_tag {};
    explicit GradedAlgebra(private_tag) {}

private:
    struct Table {
        std::vector<Vec<F>> prod;  // prod[f * ng + g] = coordinates in C_{i+j}
    };

    std::vector<std::vector<int>> grid(int v) const {
        return std::vector<std::vector<int>>(nv_, std::vector<int>(nv_, v));
    }
    long key(int i, int j, int lam, int nu, int mu) const {
        return (((long(i) * (bound_ + 1) + j) * nv_ + lam) * nv_ + nu) * nv_ + mu;
    }
    const Table& table(int i, int j, int lam, int nu, int mu) const {
        auto it = mult_.find(key(i, j, lam, nu, mu));
        if (it == mult_.end()) {
            static const Table empty;
            return empty;
        }
        return it->second;
    }

    void check_subset(const std::vector<int>& Lambda) const {
        if (Lambda.empty()) throw std::invalid_argument("vertex subset must be nonempty");
        std::vector<bool> seen(nv_, false);
        for (int v : Lambda) {
            if (v < 0 || v >= nv_) throw std::invalid_argument("vertex out of range");
            if (seen[v]) throw std::invalid_argument("duplicate vertex in subset");
            seen[v] = true;
        }
    }

    void finalize_arrow_index() {
        arrow_local_.assign(quiver_.num_arrows(), 0);
        std::map<std::pair<int, int>, int> count;
        for (int a = 0; a < quiver_.num_arrows(); ++a) {
            auto k = std::make_pair(quiver_.arrows[a].src, quiver_.arrows[a].tgt);
            arrow_local_[a] = count[k]++;
        }
        // sanity: arrow counts must match the degree-1 dims
        for (int s = 0; s < nv_; ++s)
            for (int t = 0; t < nv_; ++t) {
                int c = 0;
                for (const auto& a : quiver_.arrows)
                    if (a.src == s && a.tgt == t) ++c;
                if (c != dims_[1][s][t])
                    throw std::logic_error("GradedAlgebra: arrow/degree-1 basis mismatch");
            }
    }

    void build_from_presentation(const Presentation<F>& pres) {
        dims_.assign(bound_ + 1, grid(0));
        for (int v = 0; v < nv_; ++v) dims_[0][v][v] = 1;
        for (const auto& a : quiver_.arrows) dims_[1][a.src][a.tgt]++;
        finalize_arrow_index();

        for (int d = 2; d <= bound_; ++d) {
            for (int lam = 0; lam < nv_; ++lam)
                for (int mu = 0; mu < nv_; ++mu) {
                    auto pairs = w_pairs(d, lam, mu);
                    std::vector<Vec<F>> rows;
                    for (const auto& rel : pres.relations) {
                        if (rel.tgt != mu || rel.degree > d) continue;
                        int cdeg = d - rel.degree;
                        int nc = dim(cdeg, lam, rel.src);
                        for (int ci = 0; ci < nc; ++ci) {
                            Vec<F> row(pairs.size(), F(0));
                            for (const auto& term : rel.terms) {
                                // fold the path tail onto c, keep the head arrow
                                int head = term.path.front();
                                Vec<F> h = basis_coords(cdeg, lam, rel.src, ci);
                                int hdeg = cdeg;
                                int hsrc = lam;
                                for (int k = int(term.path.size()) - 1; k >= 1; --k) {
                                    int a = term.path[k];
                                    h = compose(1, quiver_.arrows[a].src, quiver_.arrows[a].tgt,
                                                basis_coords(1, quiver_.arrows[a].src,
                                                             quiver_.arrows[a].tgt,
                                                             arrow_local_[a]),
                                                hdeg, hsrc, h);
                                    ++hdeg;
                                }
                                // h now lives in C_{d-1}(lam, src(head))
                                for (size_t w = 0; w < pairs.size(); ++w) {
                                    if (pairs[w].first != head) continue;
                                    row[w] += term.coeff * h[pairs[w].second];
                                }
                            }
                            rows.push_back(std::move(row));
                        }
                    }
                    QuotientSpace<F> qs(Matrix<F>::from_rows(rows), int(pairs.size()));
                    dims_[d][lam][mu] = qs.dim();
                    // degree split (1, d-1): reduce each W pair
                    if (!pairs.empty()) {
                        // group by (arrow source vertex) to form tables per nu
                        for (int nu = 0; nu < nv_; ++nu) {
                            int nf = dims_[1][nu][mu], ng = dims_[d - 1][lam][nu];
                            if (nf == 0 || ng == 0) continue;
                            Table t;
                            t.prod.resize(size_t(nf) * ng);
                            for (size_t w = 0; w < pairs.size(); ++w) {
                                auto [a, g] = pairs[w];
                                if (quiver_.arrows[a].src != nu) continue;
                                Vec<F> unit(pairs.size(), F(0));
                                unit[w] = F(1);
                                t.prod[size_t(arrow_local_[a]) * ng + g] = qs.coords(unit);
                            }
                            mult_[key(1, d - 1, lam, nu, mu)] = std::move(t);
                        }
                    }
                    // remember the canonical expression of basis elements in W
                    expr_store(d, lam, mu, qs, pairs);
                }
            // splits (i, d-i) for i >= 2, via the stored expressions
            for (int i = 2; i < d; ++i) fill_split_tables(i, d - i);
        }
        degree_one_generated_ = true;  // quotient of a path algebra by construction
    }

    void expr_store(int d, int lam, int mu, const QuotientSpace<F>& qs,
                    const std::vector<std::pair<int, int>>& pairs) {
        if (int(expr_.size()) <= d) expr_.resize(bound_ + 1);
        if (expr_[d].empty())
            expr_[d].assign(nv_, std::vector<Matrix<F>>(nv_));
        Matrix<F> E(qs.dim(), int(pairs.size()));
        for (int r = 0; r < qs.dim(); ++r) {
            Vec<F> v = qs.lift(r);
            for (size_t c = 0; c < pairs.size(); ++c) E.at(r, int(c)) = v[c];
        }
        expr_[d][lam][mu] = std::move(E);
    }

    void fill_split_tables(int i, int j) {
        for (int lam = 0; lam < nv_; ++lam)
            for (int nu = 0; nu < nv_; ++nu)
                for (int mu = 0; mu < nv_; ++mu) {
                    int nf = dims_[i][nu][mu], ng = dims_[j][lam][nu];
                    if (nf == 0 || ng == 0) continue;
                    Table t;
                    t.prod.resize(size_t(nf) * ng);
                    const Matrix<F>& E = expr_[i][nu][mu];
                    auto pairs = w_pairs(i, nu, mu);
                    for (int a = 0; a < nf; ++a)
                        for (int b = 0; b < ng; ++b) {
                            Vec<F> acc(dims_[i + j][lam][mu], F(0));
                            for (size_t w = 0; w < pairs.size(); ++w) {
                                const F& c = E.at(a, int(w));
                                if (c.is_zero()) continue;
                                auto [ar, g] = pairs[w];
                                int sig = quiver_.arrows[ar].src;
                                // (ar o g) o b = ar o (g o b)
                                Vec<F> inner = compose(i - 1, nu, sig,
                                                       basis_coords(i - 1, nu, sig, g),
                                                       j, lam, basis_coords(j, lam, nu, b));
                                Vec<F> outer = compose(
                                    1, sig, mu,
                                    basis_coords(1, sig, mu, arrow_local_[ar]),
                                    i + j - 1, lam, inner);
                                for (size_t k = 0; k < acc.size(); ++k) acc[k] += c * outer[k];
                            }
                            t.prod[size_t(a) * ng + b] = std::move(acc);
                        }
                    mult_[key(i, j, lam, nu, mu)] = std::move(t);
                }
    }

    // For derived algebras: recover expressions of basis elements as
    // combinations of arrow-times-lower products, if possible.
    void compute_expr_generic() {
        expr_.assign(bound_ + 1, {});
        degree_one_generated_ = true;
        for (int d = 2; d <= bound_; ++d) {
            expr_[d].assign(nv_, std::vector<Matrix<F>>(nv_));
            for (int lam = 0; lam < nv_; ++lam)
                for (int mu = 0; mu < nv_; ++mu) {
                    int n = dims_[d][lam][mu];
                    auto pairs = w_pairs(d, lam, mu);
                    if (n == 0) {
                        expr_[d][lam][mu] = Matrix<F>(0, int(pairs.size()));
                        continue;
                    }
                    Matrix<F> M(n, int(pairs.size()));
                    for (size_t c = 0; c < pairs.size(); ++c) {
                        auto [a, g] = pairs[c];
                        int nu = quiver_.arrows[a].src;
                        Vec<F> prod = compose(1, nu, mu,
                                              basis_coords(1, nu, mu, arrow_local_[a]),
                                              d - 1, lam, basis_coords(d - 1, lam, nu, g));
                        for (int r = 0; r < n; ++r) M.at(r, int(c)) = prod[r];
                    }
                    auto X = solve_matrix(M, Matrix<F>::identity(n));
                    if (!X) {
                        degree_one_generated_ = false;
                        expr_[d][lam][mu] = Matrix<F>(0, int(pairs.size()));
                        continue;
                    }
                    expr_[d][lam][mu] = X->transpose();
                }
        }
    }

    void expand_paths(int d, int src, int tgt, const Vec<F>& v, std::vector<int> suffix,
                      const F& scale, std::map<std::vector<int>, F>& acc) const {
        if (d == 0) {
            if (!v.empty() && !v[0].is_zero()) {
                auto it = acc.find(suffix);
                F add = scale * v[0];
                if (it == acc.end()) acc[suffix] = add;
                else it->second += add;
            }
            return;
        }
        if (d == 1) {
            // suffix holds the outer arrows, outermost first; the remaining
            // degree-1 factor is applied first, i.e. written last
            for (int k = 0; k < int(v.size()); ++k) {
                if (v[k].is_zero()) continue;
                std::vector<int> path = suffix;
                path.push_back(local_to_arrow(src, tgt, k));
                auto it = acc.find(path);
                F add = scale * v[k];
                if (it == acc.end()) acc[path] = add;
                else it->second += add;
            }
            return;
        }
        const Matrix<F>& E = expr(d, src, tgt);
        auto pairs = w_pairs(d, src, tgt);
        for (int r = 0; r < int(v.size()); ++r) {
            if (v[r].is_zero()) continue;
            for (size_t w = 0; w < pairs.size(); ++w) {
                const F& c = E.at(r, int(w));
                if (c.is_zero()) continue;
                auto [a, g] = pairs[w];
                std::vector<int> suf = suffix;
                suf.push_back(a);
                expand_paths(d - 1, src, quiver_.arrows[a].src,
                             basis_coords(d - 1, src, quiver_.arrows[a].src, g), suf,
                             scale * v[r] * c, acc);
            }
        }
    }

    Quiver quiver_;
    int bound_ = 0;
    int nv_ = 0;
    std::vector<std::vector<std::vector<int>>> dims_;  // dims_[d][src][tgt]
    std::map<long, Table> mult_;
    std::vector<std::vector<std::vector<Matrix<F>>>> expr_;  // expr_[d][src][tgt]
    std::vector<int> arrow_local_;
    bool degree_one_generated_ = false;
};

}  // namespace koszul
