#pragma once

#include <array>
#include <optional>

#include "cygan/core.hpp"

namespace cygan {

/// Group law (zeta, v) * (zeta', v') = (zeta + zeta', v + v' + 2 Im(conj(zeta') zeta)).
HeisenbergPoint h_mul(const HeisenbergPoint& p, const HeisenbergPoint& q);

HeisenbergPoint h_inverse(const HeisenbergPoint& p);

/// Koranyi gauge (|zeta|^4 + v^2)^(1/4).
double koranyi_gauge(const HeisenbergPoint& p);

/// Heisenberg metric |p^-1 * q| in gauge form.
double d_heis(const HeisenbergPoint& p, const HeisenbergPoint& q);

/// Vector of C^{2,1} in non-homogeneous coordinates.
struct LiftVector {
    std::array<Complex, 3> c;
};

/// (-|zeta|^2 + i v, sqrt(2) zeta, 1), a null vector.
LiftVector standard_lift_boundary(const HeisenbergPoint& p);

/// (-|zeta|^2 - u + i v, sqrt(2) zeta, 1). Coincides with the boundary lift at u = 0.
LiftVector standard_lift(const Horospherical& p);

/// Signature (2,1) form conj(w3) z1 + conj(w2) z2 + conj(w1) z3.
Complex hermitian_form(const LiftVector& z, const LiftVector& w);

/// Heisenberg metric through the Hermitian pairing of standard lifts,
/// |<z_p, z_q>|^(1/2). Independent of the group law; used as an oracle for d_heis.
double d_heis_via_lift(const HeisenbergPoint& p, const HeisenbergPoint& q);

/// Boundary inversion. Returns nullopt (infinity) for the origin.
std::optional<HeisenbergPoint> boundary_inversion(const HeisenbergPoint& p);

// Boundary similarities, used both directly and per horosphere.
HeisenbergPoint translate(const HeisenbergPoint& by, const HeisenbergPoint& p);
HeisenbergPoint rotate(double theta, const HeisenbergPoint& p);
HeisenbergPoint dilate(double delta, const HeisenbergPoint& p);
HeisenbergPoint conjugate(const HeisenbergPoint& p);

} // namespace cygan
