#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "koszul/dual.hpp"
#include "koszul/koszul_complex.hpp"

using namespace koszul;
using testutil::Q;
using testutil::load_presentation;
using Mod = GradedModule<Q>;
using AlgQ = GradedAlgebra<Q>;
using MQ = Matrix<Q>;

namespace {

struct Triple {
    AlgQ::Ptr A, Aop, Adual, Adualop;
};

Triple algebras(const std::string& name, int bound) {
    auto pres = load_presentation(name);
    pres.bound = bound;
    auto A = AlgQ::build_quadratic(pres);
    auto dp = quadratic_dual(pres).first;
    dp.bound = bound;
    auto Adual = AlgQ::build_quadratic(dp);
    return {A, A->opposite(), Adual, Adual->opposite()};
}

}  // namespace

TEST_CASE("no arrows means zero differential", "[kc]") {
    auto T = algebras("semisimple.quiver", 4);
    auto P = build_P_complex<Q>(T.A, T.Aop, T.Adual, 4, 4);
    CHECK(P.complex.delta_squared_zero());
    for (int v = 0; v < T.A->num_vertices(); ++v) {
        CHECK(P.complex.dim_at(v, 0, 0) == 1);
        for (int w = 0; w < T.A->num_vertices(); ++w)
            CHECK(P.complex.delta_block(w, v, 0, 0).is_zero());
    }
    // everything sits in bidegree (0, 0): one copy per vertex
    CHECK(P.complex.copy_dim() == T.A->num_vertices());
}

TEST_CASE("the bimodule pairing complex squares to zero", "[kc]") {
    auto T = algebras("sl2.quiver", 4);
    auto P = build_P_complex<Q>(T.A, T.Aop, T.Adual, 4, 4);
    CHECK(P.complex.delta_squared_zero());
    // components are built from full hom-space slices of both algebras
    for (int v = 0; v < 2; ++v) {
        int mr = 0, ns = 0;
        for (int w = 0; w < 2; ++w) {
            mr += T.A->dim(1, v, w);
            ns += T.Adual->dim(1, w, v);
        }
        CHECK(P.complex.M.dim(v, 1) == mr);
        CHECK(P.complex.N.dim(v, 1) == ns);
    }
    // both grading views agree up to the shift
    CHECK(P.complex.dims_shifted(1, 0, 0, 0) == P.complex.dims_positional(0, 1, 1));
    CHECK(P.complex.dims_shifted(2, 1, -1, 0) == P.complex.dims_positional(1, 1, 2));
}

TEST_CASE("delta respects both outer module structures", "[kc]") {
    for (const char* name : {"sl2.quiver", "a4.quiver", "b2.quiver"}) {
        auto T = algebras(name, 4);
        auto P = build_P_complex<Q>(T.A, T.Aop, T.Adual, 4, 4);
        INFO(name);
        CHECK(P.complex.delta_squared_zero());
        CHECK(bigraded_bimodule_check(P));
    }
}

TEST_CASE("square-zero loop pairs with its dual into the classical complex", "[kc]") {
    auto T = algebras("b2.quiver", 4);
    // right module: the algebra itself; left dual module: the dual of the
    // dual algebra, truncated to degrees -4..0
    auto M = Mod::projective(T.Aop, 0, 0, 4);
    auto N = injective_module<Q>(T.Adual, T.Adualop, 0, 0, -4);
    auto C = make_koszul_complex<Q>(T.A, M, N);
    CHECK(C.delta_squared_zero());
    // one copy of the algebra (dims 1,1) per dual degree: the classical
    // two-term periodic pattern
    for (int s = -4; s <= 0; ++s) {
        CHECK(C.dim_at(0, 0, s) == 1);
        CHECK(C.dim_at(0, 1, s) == 1);
        CHECK(C.dim_at(0, 2, s) == 0);
    }
    for (int s = -4; s < 0; ++s) {
        INFO("s=" << s);
        CHECK_FALSE(C.delta_block(0, 0, 0, s).is_zero());
        CHECK(C.delta_block(0, 0, 1, s).is_zero());  // x acts as zero on top
    }
}

TEST_CASE("mismatched orientations are rejected", "[kc]") {
    auto T = algebras("sl2.quiver", 4);
    auto M = Mod::projective(T.Aop, 0, 0, 4);
    auto N = Mod::projective(T.Adual, 0, 0, 4);
    CHECK_THROWS(make_koszul_complex<Q>(T.A, Mod::projective(T.A, 0, 0, 4), N));
    CHECK_NOTHROW(make_koszul_complex<Q>(T.A, M, N));
}

TEST_CASE("the canonical element splits for any subspace", "[kc]") {
    // empty subspace
    CHECK(verify_canonical_element_decomposition(MQ(0, 3), 3));
    // full space
    CHECK(verify_canonical_element_decomposition(MQ::identity(4), 4));
    // a slanted plane in dimension four
    MQ H(2, 4);
    H.at(0, 0) = Q(1);
    H.at(0, 2) = Q(2);
    H.at(1, 1) = Q(1);
    H.at(1, 3) = Q(-1);
    CHECK(verify_canonical_element_decomposition(H, 4));
    // the two-vertex relation span (one relation in a one-dimensional
    // quadratic slot)
    MQ R(1, 1);
    R.at(0, 0) = Q(1);
    CHECK(verify_canonical_element_decomposition(R, 1));
}

TEST_CASE("delta does not depend on the arrow basis", "[kc]") {
    // two parallel arrows, no relations: a two-dimensional degree-one slot
    auto pres = parse_presentation<Q>(
        "field Q\nvertex u\nvertex v\narrow a u v\narrow b u v\nbound 3\n");
    auto A = AlgQ::build_quadratic(pres);
    auto dp = quadratic_dual(pres).first;
    dp.bound = 3;
    auto Adual = AlgQ::build_quadratic(dp);
    auto P = build_P_complex<Q>(A, A->opposite(), Adual, 3, 3);
    const auto& C = P.complex;
    // change of basis G on the slot, inverse-transpose on the dual slot
    MQ G(2, 2), Ginvt(2, 2);
    G.at(0, 0) = Q(1);
    G.at(0, 1) = Q(1);
    G.at(1, 1) = Q(1);
    Ginvt.at(0, 0) = Q(1);
    Ginvt.at(1, 0) = Q(-1);
    Ginvt.at(1, 1) = Q(1);
    for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s) {
            // transformed arrows: a_i' = sum_j G(j,i) a_j, dual via Ginvt
            Matrix<Q> alt(C.dim_at(0, r + 1, s + 1), C.dim_at(1, r, s));
            for (int i = 0; i < 2; ++i) {
                Matrix<Q> ma(C.M.dim(0, r + 1), C.M.dim(1, r));
                Matrix<Q> na(C.N.dim(0, s + 1), C.N.dim(1, s));
                for (int j = 0; j < 2; ++j) {
                    if (!G.at(j, i).is_zero())
                        for (int x = 0; x < ma.rows(); ++x)
                            for (int y = 0; y < ma.cols(); ++y)
                                ma.at(x, y) += G.at(j, i) * C.M.action(j, r).at(x, y);
                    if (!Ginvt.at(j, i).is_zero())
                        for (int x = 0; x < na.rows(); ++x)
                            for (int y = 0; y < na.cols(); ++y)
                                na.at(x, y) += Ginvt.at(j, i) * C.N.action(j, s).at(x, y);
                }
                accumulate_kron(alt, ma, na);
            }
            INFO("r=" << r << " s=" << s);
            CHECK(alt == C.delta_block(0, 1, r, s));
        }
}
