#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "koszul/dual.hpp"
#include "koszul/linear_complex.hpp"

using namespace koszul;
using testutil::Q;
using testutil::load_algebra;
using testutil::load_presentation;
using Mod = GradedModule<Q>;
using AlgQ = GradedAlgebra<Q>;
using LC = LinearComplex<Q>;
using VP = std::vector<std::pair<int, int>>;

namespace {

struct Pair {
    AlgQ::Ptr A, Adual, Adualop;
};

Pair sl2_pair() {
    auto pres = load_presentation("sl2.quiver");
    pres.bound = 4;
    auto A = AlgQ::build_quadratic(pres);
    auto dp = quadratic_dual(pres).first;
    dp.bound = 4;
    auto Adual = AlgQ::build_quadratic(dp);
    return {A, Adual, Adual->opposite()};
}

bool modules_equal(const Mod& X, const Mod& Y) {
    if (X.lo() != Y.lo() || X.hi() != Y.hi()) return false;
    const Quiver& q = X.algebra()->quiver();
    for (int v = 0; v < X.algebra()->num_vertices(); ++v)
        for (int d = X.lo(); d <= X.hi(); ++d)
            if (X.dim(v, d) != Y.dim(v, d)) return false;
    for (int a = 0; a < q.num_arrows(); ++a)
        for (int d = X.lo(); d < X.hi(); ++d)
            if (X.action(a, d) != Y.action(a, d)) return false;
    return true;
}

}  // namespace

TEST_CASE("simples over the dual go to single projectives", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto L = epsilon_inverse<Q>(A, Mod::simple(Adual, 0)).trimmed();
    CHECK(L.total_summands() == 1);
    CHECK(L.summands(0) == VP{{0, 1}});
    CHECK(L.check());
    // a simple placed in degree i lands at position i
    auto L3 = epsilon_inverse<Q>(A, Mod::simple(Adual, 1, -3)).trimmed();
    CHECK(L3.summands(-3) == VP{{1, 1}});
    CHECK(L3.total_summands() == 1);
}

TEST_CASE("injectives over the dual go to resolutions of simples", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto I2 = injective_module<Q>(Adual, Adualop, 1, 0, -4);
    auto L2 = epsilon_inverse<Q>(A, I2).trimmed();
    CHECK(L2.summands(0) == VP{{1, 1}});
    CHECK(L2.summands(-1) == VP{{0, 1}});
    CHECK(L2.total_summands() == 2);
    CHECK(L2.check());
    // the connecting block is the action of the dual arrow, nonzero
    CHECK(L2.block(-1, 1, 0, 0).rows() == 1);
    CHECK_FALSE(L2.block(-1, 1, 0, 0).is_zero());

    auto I1 = injective_module<Q>(Adual, Adualop, 0, 0, -4);
    auto L1 = epsilon_inverse<Q>(A, I1).trimmed();
    CHECK(L1.summands(0) == VP{{0, 1}});
    CHECK(L1.summands(-1) == VP{{1, 1}});
    CHECK(L1.summands(-2) == VP{{0, 1}});
    CHECK(L1.total_summands() == 3);
    CHECK(L1.check());
}

TEST_CASE("projectives over the dual go to coresolution-shaped complexes", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto P2 = Mod::projective(Adual, 1, 0, 4);
    auto L2 = epsilon_inverse<Q>(A, P2).trimmed();
    CHECK(L2.summands(0) == VP{{1, 1}});
    CHECK(L2.summands(1) == VP{{0, 1}});
    CHECK(L2.total_summands() == 2);
    CHECK(L2.check());

    auto P1 = Mod::projective(Adual, 0, 0, 4);
    auto L1 = epsilon_inverse<Q>(A, P1).trimmed();
    CHECK(L1.summands(0) == VP{{0, 1}});
    CHECK(L1.summands(1) == VP{{1, 1}});
    CHECK(L1.summands(2) == VP{{0, 1}});
    CHECK(L1.total_summands() == 3);
    CHECK(L1.check());
}

TEST_CASE("the equivalence round-trips on modules", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    std::vector<Mod> samples;
    samples.push_back(Mod::simple(Adual, 0));
    samples.push_back(Mod::projective(Adual, 0, 0, 4));
    samples.push_back(Mod::projective(Adual, 1, -1, 3));
    samples.push_back(injective_module<Q>(Adual, Adualop, 0, 0, -4));
    for (const auto& X : samples) {
        auto L = epsilon_inverse<Q>(A, X);
        CHECK(modules_equal(epsilon<Q>(Adual, L), X));
    }
}

TEST_CASE("the equivalence intertwines grading shifts", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto X = injective_module<Q>(Adual, Adualop, 0, 0, -4);
    auto L = epsilon_inverse<Q>(A, X);
    auto Lj = epsilon_inverse<Q>(A, X.shifted(2));
    for (int v = 0; v < 2; ++v)
        for (int i = Lj.plo(); i <= Lj.phi(); ++i) CHECK(Lj.m(v, i) == L.m(v, i + 2));
    for (int i = Lj.plo(); i < Lj.phi(); ++i)
        for (int mu = 0; mu < 2; ++mu)
            for (int lam = 0; lam < 2; ++lam)
                for (int k = 0; k < A->dim(1, mu, lam); ++k)
                    CHECK(Lj.block(i, mu, lam, k) == L.block(i + 2, mu, lam, k));
}

TEST_CASE("one-summand complexes with zero differential map to shifted simples", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto L = LC::zero(A, -3, -3);
    L.m_ref(0, -3) = 1;
    auto X = epsilon<Q>(Adual, L);
    CHECK(modules_equal(X, Mod::simple(Adual, 0, -3)));
}

TEST_CASE("the square-zero condition detects bad differentials", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    // good: the two-step composite lands in the relation
    auto good = LC::zero(A, 0, 2);
    good.m_ref(0, 0) = good.m_ref(1, 1) = good.m_ref(0, 2) = 1;
    good.normalize_shapes();
    good.block_ref(0, 1, 0, 0).at(0, 0) = Q(1);  // arrow out of the first vertex
    good.block_ref(1, 0, 1, 0).at(0, 0) = Q(1);  // arrow back
    CHECK(good.check());
    // bad: the composite is the surviving degree-two loop
    auto bad = LC::zero(A, 0, 2);
    bad.m_ref(1, 0) = bad.m_ref(0, 1) = bad.m_ref(1, 2) = 1;
    bad.normalize_shapes();
    bad.block_ref(0, 0, 1, 0).at(0, 0) = Q(1);
    bad.block_ref(1, 1, 0, 0).at(0, 0) = Q(1);
    CHECK_FALSE(bad.check());
}

TEST_CASE("linear parts of minimal resolutions of simples", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto L0 = lc_injective<Q>(A, 0, 3).trimmed();
    CHECK(L0.summands(0) == VP{{0, 1}});
    CHECK(L0.summands(-1) == VP{{1, 1}});
    CHECK(L0.summands(-2) == VP{{0, 1}});
    CHECK(L0.total_summands() == 3);
    CHECK(L0.check());
    CHECK_FALSE(L0.block(-1, 0, 1, 0).is_zero());
    CHECK_FALSE(L0.block(-2, 1, 0, 0).is_zero());

    auto L1 = lc_injective<Q>(A, 1, 2).trimmed();
    CHECK(L1.summands(0) == VP{{1, 1}});
    CHECK(L1.summands(-1) == VP{{0, 1}});
    CHECK(L1.total_summands() == 2);
    CHECK(L1.check());
}

TEST_CASE("these objects have simple socle", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    for (int lam = 0; lam < 2; ++lam) {
        auto L = lc_injective<Q>(A, lam, 3).trimmed();
        for (int v = 0; v < 2; ++v)
            for (int i = L.plo(); i <= L.phi(); ++i) {
                INFO("lam=" << lam << " v=" << v << " i=" << i);
                CHECK(L.socle_dim(v, i) == ((v == lam && i == 0) ? 1 : 0));
            }
    }
}

TEST_CASE("linear parts over the chain quiver", "[lc]") {
    auto A = load_algebra("a4.quiver", 4);
    auto Aop = A->opposite();
    // the sink simple is projective: nothing beyond position zero
    auto Ls = lc_injective<Q>(A, 0, 2).trimmed();
    CHECK(Ls.total_summands() == 1);
    CHECK(Ls.summands(0) == VP{{0, 1}});
    // other simples have a one-step linear resolution
    auto L2 = lc_injective<Q>(A, 2, 2).trimmed();
    CHECK(L2.summands(0) == VP{{2, 1}});
    CHECK(L2.summands(-1) == VP{{1, 1}});
    CHECK(L2.check());
    // projective objects point the other way
    auto P1 = lc_projective<Q>(A, Aop, 1, 2).trimmed();
    CHECK(P1.summands(0) == VP{{1, 1}});
    CHECK(P1.summands(1) == VP{{2, 1}});
    CHECK(P1.total_summands() == 2);
    CHECK(P1.check());
}

TEST_CASE("non-linear steps drop out of the linear part", "[lc]") {
    // cube-zero loop: steps two and three of the resolution are not linear
    auto A = AlgQ::build_monomial(load_presentation("b3.quiver"), 5);
    auto R = minimal_projective_resolution(Mod::simple(A, 0), 3);
    auto L = linear_part(R).trimmed();
    CHECK(L.plo() == -1);
    CHECK(L.phi() == 0);
    CHECK(L.summands(0) == VP{{0, 1}});
    CHECK(L.summands(-1) == VP{{0, 1}});
    CHECK_FALSE(L.block(-1, 0, 0, 0).is_zero());

    // a shifted projective alone has empty linear part
    auto [A2, Adual, Adualop] = sl2_pair();
    auto R2 = minimal_projective_resolution(Mod::projective(A2, 0, 5, -3), 1);
    CHECK(linear_part(R2).trimmed().total_summands() == 0);
}

TEST_CASE("projective objects correspond to projectives over the dual", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto Aop = A->opposite();
    for (int lam = 0; lam < 2; ++lam) {
        auto Lp = lc_projective<Q>(A, Aop, lam, 3);
        CHECK(Lp.check());
        auto X = epsilon<Q>(Adual, Lp);
        CHECK(is_isomorphic(X, Mod::projective(Adual, lam, 0, Lp.phi())));
    }
}

TEST_CASE("the relabeling between projective and injective views is invertible", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto L = lc_injective<Q>(A, 0, 3).trimmed();
    auto back = nakayama_inverse(nakayama(L));
    CHECK(back.plo() == L.plo());
    CHECK(back.phi() == L.phi());
    for (int v = 0; v < 2; ++v)
        for (int i = L.plo(); i <= L.phi(); ++i) CHECK(back.m(v, i) == L.m(v, i));
    CHECK(back.block(-1, 0, 1, 0) == L.block(-1, 0, 1, 0));
}

TEST_CASE("realizing a combinatorial complex gives an honest complex", "[lc]") {
    auto [A, Adual, Adualop] = sl2_pair();
    auto L = lc_injective<Q>(A, 0, 3).trimmed();
    auto X = to_graded_complex<Q>(L, 4);
    CHECK(X.check());
    CHECK(X.homology_is_concentrated(0, Mod::simple(A, 0)));

    auto Lp = epsilon_inverse<Q>(A, Mod::projective(Adual, 0, 0, 4)).trimmed();
    auto Y = to_graded_complex<Q>(Lp, 4);
    CHECK(Y.check());
}
