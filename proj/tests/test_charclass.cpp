#include <gtest/gtest.h>

#include "symprod/charclass.hpp"
#include "symprod/selfcheck.hpp"
#include "test_oracles.hpp"

using namespace symprod;
using test_oracles::cpn_total_direct;
using test_oracles::delta_free_readout;

namespace {

ExtElement<Int> wedge(const ExtAlgebra& alg, std::vector<int> idx, long c = 1) {
    ExtElement<Int> e(alg);
    e.add_term(ExtMonomial::from_indices(std::move(idx)), Int(c));
    return e;
}

TEST(ChernClosed, GenusZeroIsProjectiveSpace) {
    for (int n = 2; n <= 4; ++n) {
        ChernClosed cc = chern_total_closed(0, n);
        EXPECT_EQ(cc.total, cpn_total_direct(n)) << "n=" << n;
        EXPECT_EQ(cc.c[1], eta(0, n).scaled(Rat(n + 1))) << "n=" << n;
    }
}

TEST(ChernClosed, GenusOnePowerTwo) {
    ChernClosed cc = chern_total_closed(1, 2);
    TensorElement<Rat> e = eta(1, 2);
    TensorElement<Rat> xx = xi(1, 1, 2) * xi_prime(1, 1, 2);
    EXPECT_EQ(cc.c[1], e.scaled(Rat(2)) - xx);
    EXPECT_EQ(cc.c[2], e * e - e * xx);
    EXPECT_EQ(cc.c[0], TensorElement<Rat>::unit(1, 2));
}

TEST(ChernClosed, ChernClassesAreInvariant) {
    for (auto [g, n] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}}) {
        ChernClosed cc = chern_total_closed(g, n);
        for (const auto& cq : cc.c) {
            bool ok = true;
            for_each_permutation(n, [&](const std::vector<int>& sigma) {
                if (ok && permute(sigma, cq) != cq) ok = false;
            });
            EXPECT_TRUE(ok) << "g=" << g << " n=" << n;
        }
    }
}

TEST(ChernClosed, NegativeExponentPath) {
    // g=3, n=2 forces (1+eta)^(-3); the result must still be an exact
    // integral class with the right Euler characteristic.
    ChernClosed cc = chern_total_closed(3, 2);
    for (const auto& [m, c] : cc.total.terms()) EXPECT_TRUE(is_integral(c)) << m.str();
    EXPECT_EQ(euler_char(cc), 6);  // coefficient of z^2 in (1-z)^4
}

TEST(ChernPunctured, GenusZeroIsTrivial) {
    ChernPunctured cd = chern_total_punctured(0, 3, 2);
    EXPECT_EQ(cd.total, ExtElement<Int>::unit(cd.alg));
    for (int q = 1; q <= cd.n; ++q) EXPECT_TRUE(cd.c[static_cast<std::size_t>(q)].is_zero());
    // k=1 gives the degenerate unit-only algebra.
    ChernPunctured disk = chern_total_punctured(0, 1, 3);
    EXPECT_EQ(disk.alg.gens, 0);
    EXPECT_EQ(disk.total, ExtElement<Int>::unit(disk.alg));
}

TEST(ChernPunctured, GenusTwoExpansion) {
    ChernPunctured cd = chern_total_punctured(2, 1, 4);
    ExtAlgebra alg = cd.alg;
    EXPECT_EQ(cd.c[1], wedge(alg, {1, 2}, -1) + wedge(alg, {3, 4}, -1));
    EXPECT_EQ(cd.c[2], wedge(alg, {1, 2, 3, 4}));
}

TEST(ChernPunctured, TruncationKillsTopClass) {
    ChernPunctured cd = chern_total_punctured(1, 2, 2);
    EXPECT_EQ(cd.c[1], wedge(cd.alg, {1, 2}, -1));
    EXPECT_TRUE(cd.c[2].is_zero());
}

TEST(Restriction, EtaDiesAndPairsSurvive) {
    MacdonaldBasis basis(2, 3);
    EXPECT_TRUE(restrict_punctured(eta(2, 3), 2, 1, 3, basis).is_zero());
    ExtAlgebra alg{4, 3};
    EXPECT_EQ(restrict_punctured(xi(1, 2, 3) * xi_prime(1, 2, 3), 2, 1, 3, basis), wedge(alg, {1, 2}));
    EXPECT_EQ(restrict_punctured(xi(2, 2, 3) * xi_prime(2, 2, 3), 2, 1, 3, basis), wedge(alg, {3, 4}));
}

TEST(Restriction, TotalClassMatchesDirectProduct) {
    // The full module grid, including the negative-exponent closed classes.
    for (int g = 0; g <= 3; ++g)
        for (int n = 2; n <= 5; ++n) {
            ChernClosed cc = chern_total_closed(g, n);
            MacdonaldBasis basis(g, n);
            for (int k = 1; k <= 3; ++k) {
                ChernPunctured direct = chern_total_punctured(g, k, n);
                ChernPunctured restricted = restrict_chern(cc, k, basis);
                EXPECT_EQ(restricted.total, direct.total) << "g=" << g << " k=" << k << " n=" << n;
                for (int q = 0; q <= n; ++q)
                    EXPECT_EQ(restricted.c[static_cast<std::size_t>(q)], direct.c[static_cast<std::size_t>(q)]);
            }
        }
}

TEST(Restriction, AgreesWithDeltaFreeReadout) {
    for (auto [g, n] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        ChernClosed cc = chern_total_closed(g, n);
        MacdonaldBasis basis(g, n);
        for (int k = 1; k <= 2; ++k)
            EXPECT_EQ(restrict_punctured(cc.total, g, k, n, basis), delta_free_readout(cc.total, g, k, n))
                << "g=" << g << " n=" << n << " k=" << k;
    }
}

TEST(Restriction, RejectsNonSubringElements) {
    MacdonaldBasis basis(1, 2);
    TensorElement<Rat> t(1, 2);
    TensorMonomial m;
    m.slot = {SurfaceClass::gamma(1), SurfaceClass::unit()};
    t.add_term(m, Rat(1));
    EXPECT_THROW(restrict_punctured(t, 1, 1, 2, basis), std::invalid_argument);
}

TEST(StiefelWhitney, OddClassesVanishEvenOnesReduce) {
    ChernPunctured cd = chern_total_punctured(2, 2, 3);
    auto w = stiefel_whitney(cd);
    ASSERT_EQ(w.size(), 7u);  // degrees 0..6
    EXPECT_EQ(w[0], ExtElement<GF2>::unit(cd.alg));
    EXPECT_TRUE(w[1].is_zero());
    EXPECT_TRUE(w[3].is_zero());
    EXPECT_TRUE(w[5].is_zero());
    ExtElement<GF2> expected(cd.alg);
    expected.add_term(ExtMonomial::from_indices({1, 2}), GF2(1));
    expected.add_term(ExtMonomial::from_indices({3, 4}), GF2(1));
    EXPECT_EQ(w[2], expected);
    EXPECT_EQ(w[2], reduce_mod2(cd.c[1]));
}

TEST(StiefelWhitney, ClosedProjectivePlane) {
    // Sym^2 of the sphere: c1 = 3 eta, so w2 = eta mod 2, nonzero.
    ChernClosed cc = chern_total_closed(0, 2);
    TensorElement<GF2> w2 = reduce_mod2(cc.c[1]);
    EXPECT_FALSE(w2.is_zero());
    TensorElement<GF2> eta2 = reduce_mod2(eta(0, 2));
    EXPECT_EQ(w2, eta2);
}

TEST(Pontrjagin, PuncturedVanishesAsElements) {
    ChernPunctured cd = chern_total_punctured(2, 1, 4);
    // Intermediate values of the defining identity p1 = c1^2 - 2 c2.
    ExtElement<Int> c1sq = cd.c[1] * cd.c[1];
    EXPECT_EQ(c1sq, wedge(cd.alg, {1, 2, 3, 4}, 2));
    auto p = pontrjagin(cd);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_TRUE(p[0].is_zero());
    EXPECT_TRUE(p[1].is_zero());
}

TEST(Pontrjagin, ClosedProjectivePlaneRecoversClassicalValue) {
    ChernClosed cc = chern_total_closed(0, 2);
    auto p = pontrjagin(cc);
    ASSERT_EQ(p.size(), 1u);
    TensorElement<Rat> eta_sq = eta(0, 2) * eta(0, 2);
    EXPECT_EQ(p[0], eta_sq.scaled(Rat(3)));
}

TEST(Pontrjagin, ClosedGenusOneVanishesAsElement) {
    ChernClosed cc = chern_total_closed(1, 2);
    auto p = pontrjagin(cc);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_TRUE(p[0].is_zero());
}

TEST(W2Form, Examples) {
    AltFormZ2 f = w2_form(1, 2, 2);
    ASSERT_EQ(f.dim(), 3);
    EXPECT_EQ(f.m.at(0, 1), 1);
    EXPECT_EQ(f.m.at(1, 0), 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!((i == 0 && j == 1) || (i == 1 && j == 0))) {
                EXPECT_EQ(f.m.at(i, j), 0);
            }

    AltFormZ2 flat = w2_form(0, 4, 2);
    for (int i = 0; i < flat.dim(); ++i)
        for (int j = 0; j < flat.dim(); ++j) EXPECT_EQ(flat.m.at(i, j), 0);

    AltFormZ2 two_blocks = w2_form(2, 1, 2);
    ASSERT_EQ(two_blocks.dim(), 4);
    EXPECT_EQ(two_blocks.m.at(0, 1), 1);
    EXPECT_EQ(two_blocks.m.at(2, 3), 1);
    EXPECT_EQ(two_blocks.m.at(1, 2), 0);
}

TEST(W2Form, MatchesPipelineMatrix) {
    CheckResult r = selfcheck::w2_matrix_consistency();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(W2Form, AlternatingValidation) {
    GF2Mat bad_diag(2, 2);
    bad_diag.at(0, 0) = 1;
    EXPECT_THROW(AltFormZ2 f(bad_diag), std::invalid_argument);
    GF2Mat asym(2, 2);
    asym.at(0, 1) = 1;
    EXPECT_THROW(AltFormZ2 f(asym), std::invalid_argument);
}

TEST(EulerCharacteristic, ClosedValues) {
    for (int n = 2; n <= 4; ++n) EXPECT_EQ(euler_char_closed(0, n), n + 1);
    EXPECT_EQ(euler_char_closed(1, 2), 0);
    EXPECT_EQ(euler_char_closed(2, 2), 1);
    CheckResult r = selfcheck::euler_generating_function();
    EXPECT_TRUE(r.pass) << r.detail;
}

}  // namespace
