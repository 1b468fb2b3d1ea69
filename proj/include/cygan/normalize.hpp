#pragma once

#include <array>

#include "cygan/core.hpp"

namespace cygan {

enum class ReductionBranch { AlreadyAtInfinity, Boundary, Interior };

/// Output of the normalisation steps. The input quadruple is first relabelled
/// by `permutation` (output slot i holds input point permutation[i]); the
/// relabelling is always one of the Klein-four symmetries of the cross-ratio,
/// so (x1, x2) are unchanged by it. The points are then mapped by `word`,
/// with `height_shift` subtracted from every height after the translation
/// stage (it is not a generator).
struct Normalized {
    Quadruple quadruple;
    GeneratorWord word;
    std::array<int, 4> permutation{0, 1, 2, 3};
    double height_shift = 0.0;
    ReductionBranch branch = ReductionBranch::AlreadyAtInfinity;
};

/// Relabelling that brings input slot `index` to slot 4 and preserves x1, x2.
std::array<int, 4> relabel_to_last(int index);

/// Lowest point (ties to the lowest index) goes to slot 4, then everything is
/// translated by T(-zeta4, -v4) and lowered by u4, so slot 4 becomes o.
/// Throws NotInterior unless all four points are finite with u > 0.
Normalized translate_min_height_to_origin(const Quadruple& q);

/// Applies InversionClosure to all points; slot 4 goes from o to infinity.
/// Throws BadBasePoint unless slot 4 is exactly o.
Normalized invert_to_infinity(const Quadruple& q);

/// Brings any quadruple to the form (p, q, r, inf).
Normalized reduce_to_infinity_form(const Quadruple& q);

} // namespace cygan
