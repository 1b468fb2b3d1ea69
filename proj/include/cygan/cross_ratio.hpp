#pragma once

#include "cygan/core.hpp"

namespace cygan {

/// X(p1,p2,p3,p4) = [rho(p2,p4) / rho(p2,p3)] * [rho(p1,p3) / rho(p1,p4)].
///
/// With one point at infinity exactly one numerator and one denominator factor
/// are infinite; they cancel symbolically ("inf : inf = 1") before any floating
/// division takes place. Throws DegenerateQuadruple on coincident points.
ExtReal cross_ratio(const ClosurePoint& p1, const ClosurePoint& p2, const ClosurePoint& p3,
                    const ClosurePoint& p4);

struct CrossRatioPair {
    ExtReal x1;
    ExtReal x2;
};

/// x1 = X(p1,p2,p3,p4), x2 = X(p1,p3,p2,p4).
CrossRatioPair x1_x2(const Quadruple& q);

/// Plain doubles of x1_x2, both guaranteed finite and positive.
struct CrossRatioValues {
    double x1 = 0.0;
    double x2 = 0.0;
};
CrossRatioValues cross_ratio_values(const Quadruple& q);

} // namespace cygan
