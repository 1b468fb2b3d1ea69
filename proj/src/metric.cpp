#include "cygan/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cygan/heisenberg.hpp"
#include "overloaded.hpp"

namespace cygan {
namespace {

using detail::overloaded;

ClosurePoint with_height(const HeisenbergPoint& h, double u) {
    return ClosurePoint::finite(h.zeta, h.v, u);
}

ClosurePoint invert_closure(const ClosurePoint& p) {
    if (p.is_infinity())
        return ClosurePoint::origin();
    if (p.is_origin())
        return ClosurePoint::infinity();
    const auto& c = p.coords();
    const Complex denom(-std::norm(c.zeta) - c.u, c.v);
    const double denom_sq = std::norm(denom);
    return ClosurePoint::finite(c.zeta / denom, -c.v / denom_sq, c.u / denom_sq);
}

ClosurePoint invert_horo(const ClosurePoint& p) {
    if (p.is_infinity())
        throw Error(ErrorKind::UndefinedImage, "InversionHoro is not defined at infinity");
    const auto& c = p.coords();
    const auto image = boundary_inversion(c.horizontal());
    if (!image) {
        if (c.u == 0.0)
            return ClosurePoint::infinity();
        throw Error(ErrorKind::UndefinedImage,
                    "InversionHoro is not defined at (0,0,u) with u=" + std::to_string(c.u));
    }
    return with_height(*image, c.u);
}

} // namespace

double rho_finite(const Horospherical& p, const Horospherical& q) {
    const double re = std::norm(p.zeta - q.zeta) + std::abs(p.u - q.u);
    const double im = q.v - p.v - 2.0 * (p.zeta * std::conj(q.zeta)).imag();
    return std::sqrt(std::hypot(re, im));
}

ExtReal rho(const ClosurePoint& p, const ClosurePoint& q) {
    if (p.is_infinity() && q.is_infinity())
        return ExtReal::finite(0.0);
    if (p.is_infinity() || q.is_infinity())
        return ExtReal::pos_infinity();
    return ExtReal::finite(rho_finite(p.coords(), q.coords()));
}

bool rho_matches_d_heis(const ClosurePoint& p, const ClosurePoint& q) {
    if (!p.is_finite() || !q.is_finite())
        throw Error(ErrorKind::HeightMismatch, "infinity lies on no horosphere");
    const auto& a = p.coords();
    const auto& b = q.coords();
    if (a.u != b.u)
        throw Error(ErrorKind::HeightMismatch, "points lie on different horospheres");
    const double r = rho_finite(a, b);
    return std::abs(r - d_heis(a.horizontal(), b.horizontal())) <= 1e-12 * std::max(1.0, r);
}

ClosurePoint apply_generator(const Generator& g, const ClosurePoint& p) {
    return std::visit(
        overloaded{
            [&](const gen::Translation& t) {
                if (p.is_infinity())
                    return p;
                const auto& c = p.coords();
                return with_height(translate({t.zeta, t.v}, c.horizontal()), c.u);
            },
            [&](const gen::Rotation& r) {
                if (p.is_infinity())
                    return p;
                const auto& c = p.coords();
                return with_height(rotate(r.theta, c.horizontal()), c.u);
            },
            [&](const gen::Dilation& d) {
                if (p.is_infinity())
                    return p;
                const auto& c = p.coords();
                return with_height(dilate(d.delta, c.horizontal()), d.delta * d.delta * c.u);
            },
            [&](const gen::Conjugation&) {
                if (p.is_infinity())
                    return p;
                const auto& c = p.coords();
                return with_height(conjugate(c.horizontal()), c.u);
            },
            [&](const gen::InversionClosure&) { return invert_closure(p); },
            [&](const gen::InversionHoro&) { return invert_horo(p); },
        },
        g);
}

ClosurePoint apply_word(const GeneratorWord& w, const ClosurePoint& p) {
    ClosurePoint current = p;
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
        try {
            current = apply_generator(w.generators[i], current);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::UndefinedImage)
                throw e.with_stage(i);
            throw;
        }
    }
    return current;
}

std::optional<double> is_similarity(const GeneratorWord& w) {
    double factor = 1.0;
    for (const auto& g : w.generators) {
        if (std::holds_alternative<gen::InversionClosure>(g) || std::holds_alternative<gen::InversionHoro>(g))
            return std::nullopt;
        if (const auto* d = std::get_if<gen::Dilation>(&g))
            factor *= d->delta;
    }
    return factor;
}

} // namespace cygan
