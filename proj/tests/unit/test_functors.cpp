#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "koszul/functors.hpp"

using namespace koszul;
using testutil::Q;
using testutil::load_presentation;
using Mod = GradedModule<Q>;
using AlgQ = GradedAlgebra<Q>;
using Cx = GradedComplex<Q>;

namespace {

struct Setup {
    Presentation<Q> pres;
    AlgQ::Ptr A, Aop, Adual, Adualop;
};

Setup make(const std::string& name, int bound) {
    Setup s;
    s.pres = load_presentation(name);
    s.pres.bound = bound;
    s.A = AlgQ::build_quadratic(s.pres);
    auto dp = quadratic_dual(s.pres).first;
    dp.bound = bound;
    s.Adual = AlgQ::build_quadratic(dp);
    s.Aop = s.A->opposite();
    s.Adualop = s.Adual->opposite();
    return s;
}

ModuleHom<Q> identity_hom(const Mod& M) {
    ModuleHom<Q> h = ModuleHom<Q>::zero(M, M);
    for (int v = 0; v < M.algebra()->num_vertices(); ++v)
        for (int d = M.lo(); d <= M.hi(); ++d)
            h.mat_ref(v, d) = Matrix<Q>::identity(M.dim(v, d));
    return h;
}

std::map<std::pair<int, int>, int> socle_dims(const Mod& M) {
    std::map<std::pair<int, int>, int> out;
    const Quiver& q = M.algebra()->quiver();
    for (int v = 0; v < M.algebra()->num_vertices(); ++v)
        for (int d = M.lo(); d <= M.hi(); ++d) {
            if (M.dim(v, d) == 0) continue;
            std::vector<Vec<Q>> rows;
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrows[a].src != v) continue;
                Matrix<Q> act = M.action(a, d);
                for (int r = 0; r < act.rows(); ++r) rows.push_back(act.row(r));
            }
            Matrix<Q> S = rows.empty() ? Matrix<Q>(0, M.dim(v, d)) : Matrix<Q>::from_rows(rows);
            int k = kernel_basis(S).cols();
            if (k > 0) out[{v, d}] = k;
        }
    return out;
}

}  // namespace

TEST_CASE("simples over the dual realize to single projectives", "[functors]") {
    auto s = make("sl2.quiver", 4);
    for (int lam = 0; lam < 2; ++lam) {
        auto Z = kprime<Q>(s.A, Cx::concentrated(Mod::simple(s.Adual, lam), 0), 4);
        CHECK(Z.check());
        CHECK(Z.plo == 0);
        CHECK(Z.phi == 0);
        CHECK(is_isomorphic(Z.term(0), Mod::projective(s.A, lam, 0, 4)));
    }
}

TEST_CASE("dual injectives realize to resolutions of simples", "[functors]") {
    auto s = make("sl2.quiver", 4);
    for (int lam = 0; lam < 2; ++lam) {
        auto I = injective_module<Q>(s.Adual, s.Adualop, lam, 0, -4);
        auto Z = kprime<Q>(s.A, Cx::concentrated(I, 0), 4);
        CHECK(Z.check());
        CHECK(Z.phi == 0);
        CHECK(Z.homology_is_concentrated(0, Mod::simple(s.A, lam)));
    }
}

TEST_CASE("realization obeys the shift rule", "[functors]") {
    auto s = make("sl2.quiver", 4);
    // input <j>[i] comes out as <-j>[i+j]
    int i = 1, j = 1;
    auto Z = kprime<Q>(s.A, Cx::concentrated(Mod::simple(s.Adual, 0, -j), -i), 5);
    CHECK(Z.check());
    CHECK(Z.homology_is_concentrated(-(i + j), Mod::projective(s.A, 0, -j, 4)));
}

TEST_CASE("simples map to dual injectives", "[functors]") {
    auto s = make("sl2.quiver", 4);
    for (int lam = 0; lam < 2; ++lam) {
        auto K = kfunctor<Q>(s.Adual, Cx::concentrated(Mod::simple(s.A, lam), 0));
        CHECK(K.plo == 0);
        CHECK(K.phi == 0);
        CHECK(K.term(0).check());
        auto I = injective_module<Q>(s.Adual, s.Adualop, lam, 0, K.term(0).lo());
        CHECK(is_isomorphic(K.term(0), I));
        // simple socle at the right spot, one-dimensional
        auto soc = socle_dims(K.term(0));
        REQUIRE(soc.size() == 1);
        CHECK(soc.begin()->first == std::make_pair(lam, 0));
        CHECK(soc.begin()->second == 1);
    }
}

TEST_CASE("the functor obeys the shift rule", "[functors]") {
    auto s = make("sl2.quiver", 4);
    int i = 1, j = 2;
    auto K = kfunctor<Q>(s.Adual, Cx::concentrated(Mod::simple(s.A, 0, -j), -i));
    CHECK(K.check());
    auto I = injective_module<Q>(s.Adual, s.Adualop, 0, 0, -2).shifted(-j);
    CHECK(K.homology_is_concentrated(-(i + j), I));
}

TEST_CASE("projectives map to dual simples over a Koszul algebra", "[functors]") {
    auto s = make("sl2.quiver", 4);
    for (int lam = 0; lam < 2; ++lam) {
        INFO("lam=" << lam);
        CHECK(koszulity_cross_check<Q>(s.A, s.Adual, lam, 4));
    }
}

TEST_CASE("both computation paths agree", "[functors]") {
    auto s = make("sl2.quiver", 4);
    std::vector<Cx> inputs;
    inputs.push_back(Cx::concentrated(Mod::simple(s.A, 0), 0));
    inputs.push_back(Cx::concentrated(Mod::simple(s.A, 1), 0));
    inputs.push_back(Cx::concentrated(Mod::simple(s.A, 1, -1), -1));
    for (const auto& X : inputs) {
        auto K1 = kfunctor<Q>(s.Adual, X);
        auto K2 = kfunctor_via_duality<Q>(s.pres, s.Aop, s.Adual, X, 4);
        CHECK(K2.check());
        for (int n = std::min(K1.plo, K2.plo); n <= std::max(K1.phi, K2.phi); ++n) {
            Mod h1 = K1.in_range(n) ? K1.homology(n) : Mod::zero(s.Adual, 0, 0);
            Mod h2 = K2.in_range(n) ? K2.homology(n) : Mod::zero(s.Adual, 0, 0);
            INFO("n=" << n);
            CHECK(is_isomorphic(h1, h2));
        }
    }
}

TEST_CASE("over a semisimple algebra both functors act trivially", "[functors]") {
    auto s = make("semisimple.quiver", 2);
    auto X = Cx::concentrated(Mod::simple(s.A, 0), 0);
    auto K = kfunctor<Q>(s.Adual, X);
    CHECK(K.homology_is_concentrated(0, Mod::simple(s.Adual, 0)));
    auto Z = kprime<Q>(s.A, Cx::concentrated(Mod::simple(s.Adual, 0), 0), 2);
    CHECK(Z.homology_is_concentrated(0, Mod::simple(s.A, 0)));
}

TEST_CASE("linearity scan across the example algebras", "[functors]") {
    auto s = make("sl2.quiver", 6);
    CHECK(koszulity_check<Q>(s.A, 4).koszul);
    auto a4 = make("a4.quiver", 6);
    CHECK(koszulity_check<Q>(a4.A, 4).koszul);
    auto b2 = AlgQ::build_quadratic(load_presentation("b2.quiver"), 8);
    CHECK(koszulity_check<Q>(b2, 6).koszul);
    auto b3 = AlgQ::build_monomial(load_presentation("b3.quiver"), 8);
    auto v = koszulity_check<Q>(b3, 3);
    CHECK_FALSE(v.koszul);
    CHECK(v.witness_vertex == 0);
    CHECK(v.witness_position == -2);
    CHECK(v.witness_shift == -3);
}

TEST_CASE("truncated-infinite duals are refused", "[functors]") {
    auto s = make("b2.quiver", 4);  // dual is polynomial: no finite support
    CHECK_THROWS(kfunctor<Q>(s.Adual, Cx::concentrated(Mod::simple(s.A, 0), 0)));
}

TEST_CASE("the equivalences are mutually inverse on the corpus", "[functors]") {
    auto s = make("sl2.quiver", 4);
    std::vector<Mod> dual_corpus;
    dual_corpus.push_back(Mod::simple(s.Adual, 0));
    dual_corpus.push_back(Mod::simple(s.Adual, 1));
    dual_corpus.push_back(Mod::simple(s.Adual, 0, -1));
    dual_corpus.push_back(Mod::projective(s.Adual, 0, 0, 4));
    dual_corpus.push_back(Mod::projective(s.Adual, 1, 0, 4));
    dual_corpus.push_back(injective_module<Q>(s.Adual, s.Adualop, 0, 0, -4));
    dual_corpus.push_back(injective_module<Q>(s.Adual, s.Adualop, 1, 0, -4));
    for (size_t k = 0; k < dual_corpus.size(); ++k) {
        INFO("dual corpus item " << k);
        CHECK(roundtrip_through_projectives<Q>(s.A, s.Adual, dual_corpus[k], 5));
    }
    std::vector<Mod> corpus;
    corpus.push_back(Mod::simple(s.A, 0));
    corpus.push_back(Mod::simple(s.A, 1, -1));
    corpus.push_back(Mod::projective(s.A, 0, 0, 4));
    for (size_t k = 0; k < corpus.size(); ++k) {
        INFO("corpus item " << k);
        CHECK(roundtrip_through_dual<Q>(s.A, s.Adual, corpus[k], 6));
    }
}

TEST_CASE("adjunction dimensions match on sample pairs", "[functors]") {
    auto s = make("sl2.quiver", 4);
    std::vector<Mod> ys;
    ys.push_back(Mod::simple(s.Adual, 0));
    ys.push_back(Mod::simple(s.Adual, 1, -1));
    std::vector<Mod> xs;
    xs.push_back(Mod::simple(s.A, 0));
    xs.push_back(Mod::projective(s.A, 1, 0, 4));
    for (size_t yi = 0; yi < ys.size(); ++yi)
        for (size_t xi = 0; xi < xs.size(); ++xi) {
            auto Ycx = Cx::concentrated(ys[yi], 0);
            auto Xcx = Cx::concentrated(xs[xi], 0);
            int left = homotopy_hom_dim(kprime<Q>(s.A, Ycx, 4), Xcx);
            int right = homotopy_hom_dim(Ycx, kfunctor<Q>(s.Adual, Xcx));
            INFO("y=" << yi << " x=" << xi);
            CHECK(left == right);
        }
}

TEST_CASE("acyclic input stays acyclic", "[functors]") {
    auto s = make("sl2.quiver", 4);
    auto M = Mod::projective(s.Adual, 0, 0, 4);
    Cx cone;
    cone.A = s.Adual;
    cone.plo = -1;
    cone.phi = 0;
    cone.terms = {M, M};
    cone.diffs = {identity_hom(M)};
    REQUIRE(cone.check());
    auto Z = kprime<Q>(s.A, cone, 4);
    CHECK(Z.check());
    for (int n = Z.plo; n <= Z.phi; ++n) {
        INFO("n=" << n);
        CHECK(Z.homology(n).is_zero());
    }
}
