#pragma once

#include <optional>

#include "cygan/core.hpp"

namespace cygan {

/// Extended Cygan metric on the closure:
///   rho(p, q) = | |zeta1 - zeta2|^2 + |u1 - u2| + i (v2 - v1 - 2 Im(zeta1 conj(zeta2))) |^(1/2),
/// rho(p, inf) = +inf for finite p and rho(inf, inf) = 0.
ExtReal rho(const ClosurePoint& p, const ClosurePoint& q);

/// Finite-only convenience; both arguments must be finite.
double rho_finite(const Horospherical& p, const Horospherical& q);

/// Checks that rho on a common horosphere equals the Heisenberg metric of the
/// (zeta, v) projections. Throws HeightMismatch if the heights differ.
bool rho_matches_d_heis(const ClosurePoint& p, const ClosurePoint& q);

/// Throws UndefinedImage where the generator has no image (InversionHoro at
/// (0, 0, u) with u > 0, or at infinity).
ClosurePoint apply_generator(const Generator& g, const ClosurePoint& p);

/// Left-to-right composition. UndefinedImage carries the failing stage index.
ClosurePoint apply_word(const GeneratorWord& w, const ClosurePoint& p);

/// Product of dilation factors for inversion-free words, nullopt otherwise.
std::optional<double> is_similarity(const GeneratorWord& w);

} // namespace cygan
