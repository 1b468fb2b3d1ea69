#include "cygan/cross_ratio.hpp"

#include <array>
#include <cmath>

#include "cygan/metric.hpp"

namespace cygan {

ExtReal cross_ratio(const ClosurePoint& p1, const ClosurePoint& p2, const ClosurePoint& p3,
                    const ClosurePoint& p4) {
    make_quadruple(p1, p2, p3, p4); // distinctness check

    const std::array<ExtReal, 2> numer{rho(p2, p4), rho(p1, p3)};
    const std::array<ExtReal, 2> denom{rho(p2, p3), rho(p1, p4)};

    int numer_inf = 0;
    int denom_inf = 0;
    double value = 1.0;
    for (const auto& f : numer) {
        if (f.is_infinite())
            ++numer_inf;
        else
            value *= f.value();
    }
    for (const auto& f : denom) {
        if (f.is_infinite())
            ++denom_inf;
        else
            value /= f.value();
    }
    // Pairwise distinct points allow at most one infinity, which appears in
    // exactly one numerator and one denominator factor.
    if (numer_inf != denom_inf)
        throw Error(ErrorKind::Numeric, "unbalanced infinite factors in cross-ratio");
    if (!(value > 0.0) || !std::isfinite(value))
        throw Error(ErrorKind::Numeric, "cross-ratio is not finite and positive");
    return ExtReal::finite(value);
}

CrossRatioPair x1_x2(const Quadruple& q) {
    return {cross_ratio(q[0], q[1], q[2], q[3]), cross_ratio(q[0], q[2], q[1], q[3])};
}

CrossRatioValues cross_ratio_values(const Quadruple& q) {
    const auto pair = x1_x2(q);
    return {pair.x1.value(), pair.x2.value()};
}

} // namespace cygan
