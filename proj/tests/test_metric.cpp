#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cygan/heisenberg.hpp"
#include "cygan/metric.hpp"
#include "support.hpp"

using namespace cygan;
using cygan::testing::random_boundary;
using cygan::testing::random_finite;
using cygan::testing::random_interior;
using cygan::testing::rel_err;

namespace {

double d(const ClosurePoint& p, const ClosurePoint& q) {
    return rho(p, q).value();
}

ClosurePoint pt(double re, double im, double v, double u) {
    return ClosurePoint::finite(re, im, v, u);
}

GeneratorWord random_similarity(Rng& rng) {
    return {{gen::Translation{Complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(-3, 3)},
             gen::Rotation{rng.uniform(0.0, 2.0 * std::numbers::pi)}, gen::Conjugation{},
             make_dilation(std::exp(rng.uniform(-1.0, 1.0)))}};
}

} // namespace

TEST(Rho, SmallExamples) {
    EXPECT_EQ(d(ClosurePoint::origin(), pt(0, 0, 0, 4)), 2.0);
    EXPECT_EQ(d(ClosurePoint::origin(), pt(0, 0, 4, 0)), 2.0);
    EXPECT_EQ(d(pt(1, 0, 0, 0), pt(0, 0, 0, 0)), 1.0);
    EXPECT_TRUE(rho(pt(1, 0, 0, 0), ClosurePoint::infinity()).is_infinite());
    EXPECT_TRUE(rho(ClosurePoint::infinity(), pt(1, 0, 0, 3)).is_infinite());
    EXPECT_EQ(d(ClosurePoint::infinity(), ClosurePoint::infinity()), 0.0);
}

// Reference values from tests/oracle/oracle.py.
TEST(Rho, MatchesOracleTable) {
    EXPECT_LT(rel_err(d(pt(1, 2, 3, 0.75), pt(-0.5, 0.25, -2, 0)), 2.5608077566088631), 1e-15);
    EXPECT_LT(rel_err(d(pt(0.3, -0.7, 1.1, 2), pt(2, 1, -1, 0)), 2.8085341543574518), 1e-15);
    EXPECT_LT(rel_err(d(pt(1, 2, 3, 0.75), pt(-0.5, 0.25, -2, 1.5)), 2.5608077566088631), 1e-15);
    EXPECT_LT(rel_err(d(pt(0, 0, 0, 1), pt(0, 0, 0, 3)), std::sqrt(2.0)), 1e-15);
}

TEST(Rho, MetricAxioms) {
    Rng rng(21);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto p = random_finite(rng), q = random_finite(rng), r = random_finite(rng);
        EXPECT_EQ(d(p, p), 0.0);
        EXPECT_GT(d(p, q), 0.0);
        EXPECT_LT(rel_err(d(p, q), d(q, p)), 1e-14);
        EXPECT_LE(d(p, q), (d(p, r) + d(r, q)) * (1.0 + 1e-12));
    }
}

TEST(Rho, SimilaritiesScaleByDilationFactor) {
    Rng rng(22);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto w = random_similarity(rng);
        const double k = *is_similarity(w);
        const auto p = random_finite(rng), q = random_finite(rng);
        EXPECT_LT(rel_err(d(apply_word(w, p), apply_word(w, q)), k * d(p, q)), 1e-11);
    }
}

TEST(Rho, EqualsHeisenbergMetricOnAHorosphere) {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        const double u = rng.uniform(0.0, 5.0);
        const auto a = cygan::testing::random_h(rng), b = cygan::testing::random_h(rng);
        EXPECT_TRUE(rho_matches_d_heis(ClosurePoint::finite(a.zeta, a.v, u), ClosurePoint::finite(b.zeta, b.v, u)));
    }
    EXPECT_THROW(rho_matches_d_heis(pt(0, 0, 0, 1), pt(0, 0, 0, 2)), Error);
}

TEST(Rho, SquareIsLiftPairingWhenOnePointIsOnTheBoundary) {
    Rng rng(24);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto p = random_finite(rng), q = random_boundary(rng);
        const double pairing = std::abs(hermitian_form(standard_lift(p.coords()), standard_lift(q.coords())));
        EXPECT_LT(rel_err(d(p, q) * d(p, q), pairing), 1e-12);
    }
}

TEST(Rho, SquareDiffersFromLiftPairingForInteriorPairs) {
    // rho^2 = |u1 - u2| = 2 but |<z, w>| = u1 + u2 = 4: the pairing adds heights.
    const auto p = pt(0, 0, 0, 1), q = pt(0, 0, 0, 3);
    const double pairing = std::abs(hermitian_form(standard_lift(p.coords()), standard_lift(q.coords())));
    EXPECT_DOUBLE_EQ(pairing, 4.0);
    EXPECT_DOUBLE_EQ(d(p, q) * d(p, q), 2.0);

    Rng rng(25);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto a = random_interior(rng), b = random_interior(rng);
        const double pr = std::abs(hermitian_form(standard_lift(a.coords()), standard_lift(b.coords())));
        EXPECT_GT(rel_err(d(a, b) * d(a, b), pr), 1e-12);
    }
}

TEST(Generators, ClosureInversion) {
    const gen::InversionClosure inv;
    EXPECT_TRUE(apply_generator(inv, ClosurePoint::origin()).is_infinity());
    EXPECT_TRUE(apply_generator(inv, ClosurePoint::infinity()).is_origin());

    // Reference image from tests/oracle/oracle.py (swap of lift coordinates).
    const auto ip = apply_generator(inv, pt(1, 2, 3, 0.75)).coords();
    EXPECT_NEAR(ip.zeta.real(), 0.0059435364041604755, 1e-16);
    EXPECT_NEAR(ip.zeta.imag(), -0.34472511144130758, 1e-15);
    EXPECT_NEAR(ip.v, -0.071322436849925706, 1e-16);
    EXPECT_NEAR(ip.u, 0.017830609212481426, 1e-16);

    Rng rng(26);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto p = random_finite(rng);
        const auto back = apply_generator(inv, apply_generator(inv, p)).coords();
        EXPECT_LT(std::abs(back.zeta - p.coords().zeta), 1e-10);
        EXPECT_NEAR(back.v, p.coords().v, 1e-10);
        EXPECT_NEAR(back.u, p.coords().u, 1e-10);
    }
}

TEST(Generators, ClosureInversionIdentityHoldsWithABoundaryPoint) {
    Rng rng(27);
    const auto o = ClosurePoint::origin();
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto p = random_finite(rng), q = random_boundary(rng);
        const auto ip = apply_generator(gen::InversionClosure{}, p);
        const auto iq = apply_generator(gen::InversionClosure{}, q);
        EXPECT_LT(rel_err(d(ip, o) * d(p, o), 1.0), 1e-12);
        EXPECT_LT(rel_err(d(ip, iq) * d(p, o) * d(o, q), d(p, q)), 1e-11);
    }
}

// The extended metric does not satisfy the pair identity when both points are
// interior. Pinned here so that a change in this behaviour is noticed.
TEST(Generators, ClosureInversionIdentityFailsForInteriorPairs) {
    const auto p = pt(1, 2, 3, 0.75), q = pt(-0.5, 0.25, -2, 1.5);
    const auto o = ClosurePoint::origin();
    const auto ip = apply_generator(gen::InversionClosure{}, p);
    const auto iq = apply_generator(gen::InversionClosure{}, q);
    // Both sides from tests/oracle/oracle.py.
    EXPECT_LT(rel_err(d(ip, iq) * d(p, o) * d(o, q), 2.7647223309725972), 1e-14);
    EXPECT_LT(rel_err(d(p, q), 2.5608077566088631), 1e-15);
}

TEST(Generators, HoroInversionKeepsHeight) {
    const gen::InversionHoro iu;
    EXPECT_TRUE(apply_generator(iu, ClosurePoint::origin()).is_infinity());
    EXPECT_THROW(apply_generator(iu, ClosurePoint::infinity()), Error);
    try {
        apply_generator(iu, pt(0, 0, 0, 2));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndefinedImage);
    }
    Rng rng(28);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_interior(rng);
        EXPECT_EQ(apply_generator(iu, p).coords().u, p.coords().u);
    }
}

TEST(Generators, DilationScalesHeightQuadratically) {
    const auto p = apply_generator(make_dilation(2.0), pt(1, 1, 1, 1)).coords();
    EXPECT_EQ(p.zeta, Complex(2, 2));
    EXPECT_EQ(p.v, 4.0);
    EXPECT_EQ(p.u, 4.0);
    EXPECT_TRUE(apply_generator(make_dilation(2.0), ClosurePoint::infinity()).is_infinity());
}

TEST(Words, StageIndexOnUndefinedImage) {
    const GeneratorWord w{{gen::Translation{Complex(0, 0), 0.0}, gen::Rotation{1.0}, gen::InversionHoro{}}};
    try {
        apply_word(w, pt(0, 0, 0, 1));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndefinedImage);
        EXPECT_EQ(e.stage(), 2u);
    }
}

TEST(Words, Similarity) {
    EXPECT_EQ(is_similarity({}), 1.0);
    EXPECT_EQ(is_similarity({{make_dilation(2.0), gen::Rotation{1.0}, make_dilation(3.0)}}), 6.0);
    EXPECT_FALSE(is_similarity({{gen::InversionHoro{}}}).has_value());
    EXPECT_FALSE(is_similarity({{gen::InversionClosure{}}}).has_value());
}
