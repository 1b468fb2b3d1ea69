#include <gtest/gtest.h>

#include <numbers>

#include "cygan/cross_ratio.hpp"
#include "cygan/metric.hpp"
#include "support.hpp"

using namespace cygan;
using cygan::testing::random_finite;
using cygan::testing::rel_err;

namespace {

ClosurePoint pt(double re, double im, double v, double u) {
    return ClosurePoint::finite(re, im, v, u);
}

const ClosurePoint kInf = ClosurePoint::infinity();

} // namespace

// Reference values from tests/oracle/oracle.py.
TEST(CrossRatio, MatchesOracleTable) {
    const auto a = cross_ratio_values(make_quadruple(pt(1, 2, 3, 1), pt(-1, 0.5, 2, 0), pt(3, 1, -1, 2), pt(0, 1, 1, 0.5)));
    EXPECT_LT(rel_err(a.x1, 1.0304966998709873), 1e-14);
    EXPECT_LT(rel_err(a.x2, 1.4812560439921828), 1e-14);

    const auto b = cross_ratio_values(make_quadruple(pt(0.5, 0.5, 1, 0), kInf, pt(-1, 2, 0, 3), pt(2, -2, 2, 0)));
    EXPECT_LT(rel_err(b.x1, 0.92796889766037805), 1e-14);
    EXPECT_LT(rel_err(b.x2, 1.7647196110346993), 1e-14);
}

TEST(CrossRatio, InfinityCancelsSymbolically) {
    // (inf, 2, 1, 0) on the standard circle of height 0.
    const auto q = make_quadruple(kInf, pt(2, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 0, 0));
    const auto x = x1_x2(q);
    EXPECT_EQ(x.x1.value(), 2.0);
    EXPECT_EQ(x.x2.value(), 1.0);
    for (int slot = 0; slot < 4; ++slot) {
        std::array<ClosurePoint, 4> pts{pt(0, 0, 0, 1), pt(1, 0, 0, 0), pt(0, 2, 1, 0), pt(3, 0, 0, 2)};
        pts[slot] = kInf;
        const auto v = cross_ratio_values(make_quadruple(pts));
        EXPECT_TRUE(std::isfinite(v.x1) && v.x1 > 0.0);
        EXPECT_TRUE(std::isfinite(v.x2) && v.x2 > 0.0);
    }
}

TEST(CrossRatio, DegenerateThrows) {
    const auto p = pt(1, 0, 0, 0);
    try {
        cross_ratio(p, p, pt(2, 0, 0, 0), pt(3, 0, 0, 0));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateQuadruple);
    }
}

TEST(CrossRatio, KleinFourRelabelingsPreservePair) {
    Rng rng(31);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto q = make_quadruple(random_finite(rng), random_finite(rng), random_finite(rng), random_finite(rng));
        const auto x = cross_ratio_values(q);
        for (const auto& perm : {std::array{1, 0, 3, 2}, std::array{2, 3, 0, 1}, std::array{3, 2, 1, 0}}) {
            const auto y = cross_ratio_values(q.permuted(perm));
            EXPECT_LT(rel_err(x.x1, y.x1), 1e-13);
            EXPECT_LT(rel_err(x.x2, y.x2), 1e-13);
        }
    }
}

TEST(CrossRatio, InvariantUnderSimilarities) {
    Rng rng(32);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const GeneratorWord w{{gen::Translation{Complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(-3, 3)},
                               make_dilation(std::exp(rng.uniform(-1, 1))),
                               gen::Rotation{rng.uniform(0.0, 2.0 * std::numbers::pi)}, gen::Conjugation{}}};
        std::array<ClosurePoint, 4> pts{random_finite(rng), random_finite(rng), random_finite(rng), random_finite(rng)};
        if (rng.bernoulli(0.25))
            pts[rng.below(4)] = kInf;
        const auto q = make_quadruple(pts);
        const auto image =
            make_quadruple(apply_word(w, q[0]), apply_word(w, q[1]), apply_word(w, q[2]), apply_word(w, q[3]));
        const auto a = cross_ratio_values(q), b = cross_ratio_values(image);
        EXPECT_LT(rel_err(a.x1, b.x1), 1e-11);
        EXPECT_LT(rel_err(a.x2, b.x2), 1e-11);
    }
}

TEST(CrossRatio, InvariantUnderInversionOnBoundaryQuadruples) {
    Rng rng(33);
    for (int i = 0; i < cygan::testing::kTrials; ++i) {
        const auto q = make_quadruple(cygan::testing::random_boundary(rng), cygan::testing::random_boundary(rng),
                                      cygan::testing::random_boundary(rng), random_finite(rng));
        const gen::InversionClosure inv;
        const auto image = make_quadruple(apply_generator(inv, q[0]), apply_generator(inv, q[1]),
                                          apply_generator(inv, q[2]), apply_generator(inv, q[3]));
        const auto a = cross_ratio_values(q), b = cross_ratio_values(image);
        EXPECT_LT(rel_err(a.x1, b.x1), 1e-10);
        EXPECT_LT(rel_err(a.x2, b.x2), 1e-10);
    }
}

TEST(PtolemaeanInequality, HoldsOnRandomQuadruples) {
    Rng rng(34);
    for (int i = 0; i < 20000; ++i) {
        std::array<ClosurePoint, 4> pts{random_finite(rng), random_finite(rng), random_finite(rng), random_finite(rng)};
        if (rng.bernoulli(0.2))
            pts[rng.below(4)] = kInf;
        const auto x = cross_ratio_values(make_quadruple(pts));
        EXPECT_GE(x.x1 + x.x2, 1.0 - 1e-9);
        EXPECT_LE(std::abs(x.x1 - x.x2), 1.0 + 1e-9);
    }
}
