#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cygan/error.hpp"

namespace cygan {

using Complex = std::complex<double>;

/// Boundary point (zeta, v) of the Heisenberg group.
struct HeisenbergPoint {
    Complex zeta;
    double v = 0.0;

    friend bool operator==(const HeisenbergPoint&, const HeisenbergPoint&) = default;
};

/// Horospherical coordinates of a finite point of the closure, u >= 0.
struct Horospherical {
    Complex zeta;
    double v = 0.0;
    double u = 0.0;

    HeisenbergPoint horizontal() const { return {zeta, v}; }

    friend bool operator==(const Horospherical&, const Horospherical&) = default;
};

/// A point of the compactified space: finite horospherical coordinates or infinity.
class ClosurePoint {
public:
    static ClosurePoint infinity() { return ClosurePoint(); }
    static ClosurePoint finite(Complex zeta, double v, double u);
    static ClosurePoint finite(double zeta_re, double zeta_im, double v, double u) {
        return finite(Complex(zeta_re, zeta_im), v, u);
    }
    static ClosurePoint boundary(const HeisenbergPoint& p) { return finite(p.zeta, p.v, 0.0); }
    static ClosurePoint origin() { return finite(Complex(0.0, 0.0), 0.0, 0.0); }

    bool is_infinity() const noexcept { return !coords_.has_value(); }
    bool is_finite() const noexcept { return coords_.has_value(); }
    bool is_boundary() const noexcept { return coords_ && coords_->u == 0.0; }
    bool is_interior() const noexcept { return coords_ && coords_->u > 0.0; }
    bool is_origin() const noexcept {
        return coords_ && coords_->zeta == Complex(0.0, 0.0) && coords_->v == 0.0 && coords_->u == 0.0;
    }

    /// Throws InvalidArgument on the infinity variant.
    const Horospherical& coords() const;

private:
    ClosurePoint() = default;
    explicit ClosurePoint(const Horospherical& h) : coords_(h) {}

    std::optional<Horospherical> coords_;
};

/// Exact equality: both infinity, or both finite with identical coordinates.
bool points_equal(const ClosurePoint& p, const ClosurePoint& q);

/// Nonnegative real extended with +infinity. NaN cannot be represented.
class ExtReal {
public:
    static ExtReal finite(double value);
    static ExtReal pos_infinity() { return ExtReal(); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }
    /// +inf for PosInfinity.
    double value() const;

    friend bool operator==(const ExtReal&, const ExtReal&) = default;
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

private:
    ExtReal() = default;
    explicit ExtReal(double v) : value_(v) {}

    std::optional<double> value_;
};

/// Four pairwise distinct closure points.
class Quadruple {
public:
    const ClosurePoint& operator[](std::size_t i) const { return points_.at(i); }
    const std::array<ClosurePoint, 4>& points() const noexcept { return points_; }

    /// Reorders as (p[perm[0]], ..., p[perm[3]]).
    Quadruple permuted(const std::array<int, 4>& perm) const;

    friend Quadruple make_quadruple(const std::array<ClosurePoint, 4>&);

private:
    explicit Quadruple(std::array<ClosurePoint, 4> pts) : points_(std::move(pts)) {}

    std::array<ClosurePoint, 4> points_;
};

/// Throws DegenerateQuadruple if any of the six pairs is equal.
Quadruple make_quadruple(const ClosurePoint& p1, const ClosurePoint& p2, const ClosurePoint& p3,
                         const ClosurePoint& p4);
Quadruple make_quadruple(const std::array<ClosurePoint, 4>& pts);

namespace gen {

/// Left Heisenberg translation by (zeta, v).
struct Translation {
    Complex zeta;
    double v = 0.0;
};
struct Rotation {
    double theta = 0.0;
};
struct Dilation {
    double delta = 1.0;
};
struct Conjugation {};
/// Inversion of the whole closure, swaps o and infinity.
struct InversionClosure {};
/// Boundary inversion applied on each horosphere, height kept.
struct InversionHoro {};

} // namespace gen

using Generator = std::variant<gen::Translation, gen::Rotation, gen::Dilation, gen::Conjugation,
                               gen::InversionClosure, gen::InversionHoro>;

/// Dilation factor is validated here; a non-positive delta throws InvalidArgument.
Generator make_dilation(double delta);

/// Generators applied left to right. Empty is the identity.
struct GeneratorWord {
    std::vector<Generator> generators;

    bool empty() const noexcept { return generators.empty(); }
    std::size_t size() const noexcept { return generators.size(); }
};

} // namespace cygan
