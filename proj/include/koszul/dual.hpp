#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/matrix.hpp"
#include "koszul/quiver.hpp"

namespace koszul {

// Bookkeeping for the quadratic dual construction. Dual arrows are created in
// the same index order as the originals, so arrow i of the dual quiver is the
// dual basis vector of arrow i (with source and target exchanged); the name
// gains an apostrophe. Length-2 paths are paired coefficientwise against
// their reversed dual paths, with no signs.
struct DualPairing {
    int dual_of(int a) const { return a; }
    int primal_of(int a) const { return a; }
    static std::string dual_name(const std::string& n) { return n + "'"; }
};

namespace detail {

// Canonical enumeration of length-2 paths from lam to mu: outer arrow a into
// mu first (by arrow index), then inner arrow b out of lam with tgt(b) =
// src(a). The path is written [a, b] (a applied last).
inline std::vector<std::pair<int, int>> quad_paths(const Quiver& q, int lam, int mu) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows[a].tgt != mu) continue;
        for (int b = 0; b < q.num_arrows(); ++b)
            if (q.arrows[b].src == lam && q.arrows[b].tgt == q.arrows[a].src)
                out.emplace_back(a, b);
    }
    return out;
}

// Coefficient rows of the degree-2 relations with the given (src, tgt), in
// the canonical path order.
template <class F>
std::vector<Vec<F>> relation_rows(const Presentation<F>& p, int lam, int mu) {
    auto paths = quad_paths(p.quiver, lam, mu);
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < paths.size(); ++i) index[paths[i]] = int(i);
    std::vector<Vec<F>> rows;
    for (const auto& r : p.relations) {
        if (r.src != lam || r.tgt != mu) continue;
        Vec<F> row(paths.size(), F(0));
        for (const auto& t : r.terms) {
            auto it = index.find({t.path[0], t.path[1]});
            if (it == index.end()) throw std::logic_error("relation path not enumerated");
            row[it->second] += t.coeff;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
bool same_row_space(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b, int ambient) {
    QuotientSpace<F> qa(Matrix<F>::from_rows(a), ambient);
    QuotientSpace<F> qb(Matrix<F>::from_rows(b), ambient);
    return qa.same_subspace(qb);
}

}  // namespace detail

// The quadratic dual presentation: reversed quiver on dual arrows, relations
// the orthogonal complement of the original degree-2 relations under the
// reversed-path pairing. Requires a quadratic presentation.
template <class F>
std::pair<Presentation<F>, DualPairing> quadratic_dual(const Presentation<F>& pres) {
    if (!pres.is_quadratic())
        throw std::invalid_argument("quadratic_dual: presentation is not quadratic");
    pres.validate();
    Presentation<F> d;
    d.bound = pres.bound;
    d.field = pres.field;
    d.prime = pres.prime;
    d.quiver.vertices = pres.quiver.vertices;
    for (const auto& a : pres.quiver.arrows)
        d.quiver.add_arrow(DualPairing::dual_name(a.name), a.tgt, a.src);

    int nv = pres.quiver.num_vertices();
    for (int lam = 0; lam < nv; ++lam)
        for (int mu = 0; mu < nv; ++mu) {
            auto paths = detail::quad_paths(pres.quiver, lam, mu);
            if (paths.empty()) continue;
            auto rows = detail::relation_rows(pres, lam, mu);
            Matrix<F> R = rows.empty() ? Matrix<F>(0, int(paths.size()))
                                       : Matrix<F>::from_rows(rows);
            Matrix<F> K = kernel_basis(R);
            for (int c = 0; c < K.cols(); ++c) {
                Relation<F> rel;
                rel.src = mu;
                rel.tgt = lam;
                rel.degree = 2;
                for (size_t r = 0; r < paths.size(); ++r) {
                    if (K.at(int(r), c).is_zero()) continue;
                    auto [a, b] = paths[r];
                    // path a o b from lam to mu dualizes to b' o a' from mu to lam
                    rel.terms.push_back({K.at(int(r), c), {b, a}});
                }
                d.relations.push_back(std::move(rel));
            }
        }
    d.validate();
    return {std::move(d), DualPairing{}};
}

// Verifies that dualizing twice returns the original quadratic data: same
// quiver shape (with doubled apostrophes on the names) and, for every vertex
// pair, the same degree-2 relation row space.
template <class F>
bool double_dual_check(const Presentation<F>& pres) {
    auto [d1, p1] = quadratic_dual(pres);
    auto [d2, p2] = quadratic_dual(d1);
    (void)p1;
    (void)p2;
    const Quiver& q = pres.quiver;
    if (d2.quiver.num_vertices() != q.num_vertices()) return false;
    if (d2.quiver.num_arrows() != q.num_arrows()) return false;
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (d2.quiver.arrows[a].src != q.arrows[a].src) return false;
        if (d2.quiver.arrows[a].tgt != q.arrows[a].tgt) return false;
        if (d2.quiver.arrows[a].name != q.arrows[a].name + "''") return false;
    }
    for (int lam = 0; lam < q.num_vertices(); ++lam)
        for (int mu = 0; mu < q.num_vertices(); ++mu) {
            auto paths = detail::quad_paths(q, lam, mu);
            if (!detail::same_row_space(detail::relation_rows(pres, lam, mu),
                                        detail::relation_rows(d2, lam, mu), int(paths.size())))
                return false;
        }
    return true;
}

// Result of comparing the dual of a full subcategory with the corresponding
// quotient of the dual.
struct SubquotientReport {
    bool applicable = false;  // false when the subcategory is not generated in degree one
    bool ok = false;
    std::string detail;
};

// For a vertex subset Lambda: the quadratic dual of the full subcategory
// C_Lambda should agree with the quotient category of C^! on Lambda. The
// comparison checks all graded hom dimensions and the rank of degree-1
// multiplication into every degree. Reports "not applicable" when C_Lambda
// is not generated in degree one (its quadratic dual is then a different
// animal from the quotient).
template <class F>
SubquotientReport subquotient_duality_check(const Presentation<F>& pres,
                                            const std::vector<int>& Lambda, int bound = -1) {
    if (bound < 0) bound = pres.bound;
    SubquotientReport rep;
    auto C = GradedAlgebra<F>::build_quadratic(pres, bound);
    auto sub = C->full_subcategory(Lambda);
    if (!sub->degree_one_generated()) {
        rep.applicable = false;
        rep.detail = "subcategory not generated in degree one";
        return rep;
    }
    rep.applicable = true;
    auto subPres = sub->induced_quadratic_presentation();
    auto [subDualPres, pairing] = quadratic_dual(subPres);
    (void)pairing;
    auto subDual = GradedAlgebra<F>::build_quadratic(subDualPres, bound);

    auto [dualPres, pairing2] = quadratic_dual(pres);
    (void)pairing2;
    auto dual = GradedAlgebra<F>::build_quadratic(dualPres, bound);
    auto quot = dual->quotient_category(Lambda);

    int m = int(Lambda.size());
    for (int d = 0; d <= bound; ++d)
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t)
                if (subDual->dim(d, s, t) != quot->dim(d, s, t)) {
                    rep.ok = false;
                    rep.detail = "dimension mismatch in degree " + std::to_string(d);
                    return rep;
                }
    for (int d = 2; d <= bound; ++d)
        if (subDual->multiplication_rank(d) != quot->multiplication_rank(d)) {
            rep.ok = false;
            rep.detail = "multiplication rank mismatch in degree " + std::to_string(d);
            return rep;
        }
    rep.ok = true;
    rep.detail = "match up to degree " + std::to_string(bound);
    return rep;
}

}  // namespace koszul
