#pragma once

#include <algorithm>
#include <cmath>

#include "cygan/core.hpp"
#include "cygan/rng.hpp"

namespace cygan::testing {

inline constexpr int kTrials = 2000;

inline double rel_err(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline HeisenbergPoint random_h(Rng& rng, double s = 5.0) {
    return {Complex(rng.uniform(-s, s), rng.uniform(-s, s)), rng.uniform(-s, s)};
}

inline ClosurePoint random_boundary(Rng& rng, double s = 5.0) {
    return ClosurePoint::boundary(random_h(rng, s));
}

inline ClosurePoint random_interior(Rng& rng, double s = 5.0) {
    const auto h = random_h(rng, s);
    return ClosurePoint::finite(h.zeta, h.v, s * (1.0 - rng.uniform01()));
}

inline ClosurePoint random_finite(Rng& rng, double s = 5.0) {
    return rng.bernoulli(0.5) ? random_interior(rng, s) : random_boundary(rng, s);
}

} // namespace cygan::testing
