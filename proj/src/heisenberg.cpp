#include "cygan/heisenberg.hpp"

#include <cmath>

namespace cygan {

HeisenbergPoint h_mul(const HeisenbergPoint& p, const HeisenbergPoint& q) {
    const double twist = 2.0 * (std::conj(q.zeta) * p.zeta).imag();
    return {p.zeta + q.zeta, p.v + q.v + twist};
}

HeisenbergPoint h_inverse(const HeisenbergPoint& p) {
    return {-p.zeta, -p.v};
}

double koranyi_gauge(const HeisenbergPoint& p) {
    // |-|zeta|^2 + i v|^(1/2); hypot avoids squaring |zeta|^2 a second time.
    return std::sqrt(std::hypot(std::norm(p.zeta), p.v));
}

double d_heis(const HeisenbergPoint& p, const HeisenbergPoint& q) {
    return koranyi_gauge(h_mul(h_inverse(p), q));
}

LiftVector standard_lift_boundary(const HeisenbergPoint& p) {
    return standard_lift(Horospherical{p.zeta, p.v, 0.0});
}

LiftVector standard_lift(const Horospherical& p) {
    return LiftVector{{Complex(-std::norm(p.zeta) - p.u, p.v), std::sqrt(2.0) * p.zeta, Complex(1.0, 0.0)}};
}

Complex hermitian_form(const LiftVector& z, const LiftVector& w) {
    return std::conj(w.c[2]) * z.c[0] + std::conj(w.c[1]) * z.c[1] + std::conj(w.c[0]) * z.c[2];
}

double d_heis_via_lift(const HeisenbergPoint& p, const HeisenbergPoint& q) {
    return std::sqrt(std::abs(hermitian_form(standard_lift_boundary(p), standard_lift_boundary(q))));
}

std::optional<HeisenbergPoint> boundary_inversion(const HeisenbergPoint& p) {
    const Complex denom(-std::norm(p.zeta), p.v);
    if (denom == Complex(0.0, 0.0))
        return std::nullopt;
    return HeisenbergPoint{p.zeta / denom, -p.v / std::norm(denom)};
}

HeisenbergPoint translate(const HeisenbergPoint& by, const HeisenbergPoint& p) {
    return h_mul(by, p);
}

HeisenbergPoint rotate(double theta, const HeisenbergPoint& p) {
    return {std::polar(1.0, theta) * p.zeta, p.v};
}

HeisenbergPoint dilate(double delta, const HeisenbergPoint& p) {
    return {delta * p.zeta, delta * delta * p.v};
}

HeisenbergPoint conjugate(const HeisenbergPoint& p) {
    return {std::conj(p.zeta), -p.v};
}

} // namespace cygan
