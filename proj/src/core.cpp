#include "cygan/core.hpp"

#include <cmath>
#include <string>

namespace cygan {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::HeightMismatch: return "HeightMismatch";
    case ErrorKind::UndefinedImage: return "UndefinedImage";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::BadBasePoint: return "BadBasePoint";
    case ErrorKind::DegenerateParams: return "DegenerateParams";
    case ErrorKind::NoEqualityHolds: return "NoEqualityHolds";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Numeric: return "NumericError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

ClosurePoint ClosurePoint::finite(Complex zeta, double v, double u) {
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()) || !std::isfinite(v) || !std::isfinite(u))
        throw Error(ErrorKind::Numeric, "non-finite coordinate");
    if (u < 0.0)
        throw Error(ErrorKind::InvalidArgument, "negative height u");
    // Normalise -0.0 so that exact equality and text round trips agree.
    auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
    return ClosurePoint(Horospherical{Complex(clean(zeta.real()), clean(zeta.imag())), clean(v), clean(u)});
}

const Horospherical& ClosurePoint::coords() const {
    if (!coords_)
        throw Error(ErrorKind::InvalidArgument, "infinity has no coordinates");
    return *coords_;
}

bool points_equal(const ClosurePoint& p, const ClosurePoint& q) {
    if (p.is_infinity() || q.is_infinity())
        return p.is_infinity() && q.is_infinity();
    return p.coords() == q.coords();
}

ExtReal ExtReal::finite(double value) {
    if (std::isnan(value))
        throw Error(ErrorKind::Numeric, "NaN is not an extended real");
    if (std::isinf(value) && value > 0.0)
        return pos_infinity();
    if (value < 0.0)
        throw Error(ErrorKind::InvalidArgument, "ExtReal must be nonnegative");
    return ExtReal(value);
}

double ExtReal::value() const {
    return value_ ? *value_ : HUGE_VAL;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
    // Values are never NaN, so the partial order is total here.
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*a.value_ > *b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Quadruple Quadruple::permuted(const std::array<int, 4>& perm) const {
    return make_quadruple(points_[perm[0]], points_[perm[1]], points_[perm[2]], points_[perm[3]]);
}

Quadruple make_quadruple(const ClosurePoint& p1, const ClosurePoint& p2, const ClosurePoint& p3,
                         const ClosurePoint& p4) {
    return make_quadruple(std::array<ClosurePoint, 4>{p1, p2, p3, p4});
}

Quadruple make_quadruple(const std::array<ClosurePoint, 4>& pts) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (points_equal(pts[i], pts[j]))
                throw Error(ErrorKind::DegenerateQuadruple,
                            "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    return Quadruple(pts);
}

Generator make_dilation(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive and finite");
    return gen::Dilation{delta};
}

} // namespace cygan
