#include "cygan/rcircle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cygan/metric.hpp"

namespace cygan {
namespace {

bool same_param(const CircleParam& a, const CircleParam& b) {
    return a.x == b.x;
}

} // namespace

RCircle::RCircle(double height, GeneratorWord word) : height_(height), word_(std::move(word)) {
    if (!(height >= 0.0) || !std::isfinite(height))
        throw Error(ErrorKind::InvalidArgument, "circle height must be finite and nonnegative");
    for (const auto& g : word_.generators)
        if (std::holds_alternative<gen::InversionClosure>(g))
            throw Error(ErrorKind::InvalidArgument, "InversionClosure does not preserve horospheres");
    double scale = 1.0;
    for (const auto& g : word_.generators)
        if (const auto* d = std::get_if<gen::Dilation>(&g))
            scale *= d->delta;
    source_height_ = height_ / (scale * scale);
}

ClosurePoint standard_point(double u, const CircleParam& t) {
    if (t.is_infinity())
        return ClosurePoint::infinity();
    return ClosurePoint::finite(*t.x, 0.0, 0.0, u);
}

ClosurePoint circle_point(const RCircle& c, const CircleParam& t) {
    return apply_word(c.word(), standard_point(c.source_height(), t));
}

bool separates(const CircleParam& a, const CircleParam& c, const CircleParam& b, const CircleParam& d) {
    const std::array<const CircleParam*, 4> all{&a, &b, &c, &d};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (same_param(*all[i], *all[j]))
                throw Error(ErrorKind::DegenerateParams, "circle parameters must be pairwise distinct");

    // Sign of ((b - a)(d - c)) / ((d - a)(b - c)); a factor containing the
    // infinite parameter is dropped together with its partner.
    auto diff = [](const CircleParam& p, const CircleParam& q) -> std::optional<double> {
        if (p.is_infinity() || q.is_infinity())
            return std::nullopt;
        return *p.x - *q.x;
    };
    int negatives = 0;
    for (const auto& f : {diff(b, a), diff(d, c), diff(d, a), diff(b, c)})
        if (f && *f < 0.0)
            ++negatives;
    return negatives % 2 == 1;
}

SeparationPattern separation_pattern(const std::array<CircleParam, 4>& t) {
    if (separates(t[0], t[2], t[1], t[3]))
        return SeparationPattern::P1P3;
    if (separates(t[0], t[1], t[2], t[3]))
        return SeparationPattern::P1P2;
    return SeparationPattern::P1P4;
}

CircleQuadruple quadruple_on_circle(const RCircle& c, const std::array<CircleParam, 4>& t) {
    const SeparationPattern pattern = separation_pattern(t);
    return {make_quadruple(circle_point(c, t[0]), circle_point(c, t[1]), circle_point(c, t[2]),
                           circle_point(c, t[3])),
            pattern};
}

int expected_case(SeparationPattern pattern) {
    switch (pattern) {
    case SeparationPattern::P1P3: return 1;
    case SeparationPattern::P1P2: return 2;
    case SeparationPattern::P1P4: return 3;
    }
    return 0;
}

CaseLabel ptolemaeus_case(const Quadruple& q, SeparationPattern pattern, double rel_tol) {
    CaseLabel label;
    label.values = cross_ratio_values(q);
    const double x1 = label.values.x1;
    const double x2 = label.values.x2;
    const double scale = std::max({x1, x2, 1.0});
    label.residuals = {std::abs(x1 - x2 - 1.0) / scale, std::abs(x2 - x1 - 1.0) / scale,
                       std::abs(x1 + x2 - 1.0) / scale};
    const auto best = std::min_element(label.residuals.begin(), label.residuals.end());
    if (!(*best <= rel_tol)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "x1=" << x1 << " x2=" << x2 << " smallest residual " << *best;
        throw Error(ErrorKind::NoEqualityHolds, msg.str());
    }
    label.equality_case = static_cast<int>(best - label.residuals.begin()) + 1;
    label.expected_case = expected_case(pattern);
    label.matches_expected = label.equality_case == label.expected_case;
    return label;
}

} // namespace cygan
