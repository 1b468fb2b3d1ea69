#pragma once

#include <array>
#include <optional>

#include "cygan/core.hpp"
#include "cygan/cross_ratio.hpp"

namespace cygan {

/// Parameter on R u {inf}; nullopt x is the point at infinity.
struct CircleParam {
    std::optional<double> x;

    static CircleParam at(double value) { return {value}; }
    static CircleParam infinity() { return {std::nullopt}; }
    bool is_infinity() const noexcept { return !x.has_value(); }
};

/// An R-circle given as the image of the standard one {(x, 0, u0)} under a
/// height-preserving word. `height` is the height of the image; the source
/// height u0 is height / (product of dilation factors)^2.
class RCircle {
public:
    /// Throws InvalidArgument for a negative height or a word containing
    /// InversionClosure, which does not preserve horospheres.
    RCircle(double height, GeneratorWord word);

    double height() const noexcept { return height_; }
    double source_height() const noexcept { return source_height_; }
    const GeneratorWord& word() const noexcept { return word_; }

private:
    double height_;
    double source_height_;
    GeneratorWord word_;
};

/// (x, 0, 0, u) for finite t, infinity otherwise.
ClosurePoint standard_point(double u, const CircleParam& t);

ClosurePoint circle_point(const RCircle& c, const CircleParam& t);

/// True iff b and d lie in different components of (R u {inf}) \ {a, c}.
/// Throws DegenerateParams on coincident parameters.
bool separates(const CircleParam& a, const CircleParam& c, const CircleParam& b, const CircleParam& d);

/// Which pair containing p1 separates the remaining two.
enum class SeparationPattern {
    P1P3, ///< p1, p3 separate p2, p4
    P1P2, ///< p1, p2 separate p3, p4
    P1P4, ///< p1, p4 separate p2, p3
};

SeparationPattern separation_pattern(const std::array<CircleParam, 4>& t);

struct CircleQuadruple {
    Quadruple quadruple;
    SeparationPattern pattern;
};

CircleQuadruple quadruple_on_circle(const RCircle& c, const std::array<CircleParam, 4>& t);

/// Equality cases of Ptolemaeus' theorem:
/// 1: x1 - x2 = 1, 2: x2 - x1 = 1, 3: x1 + x2 = 1.
struct CaseLabel {
    int equality_case = 0;
    int expected_case = 0;
    bool matches_expected = false;
    CrossRatioValues values;
    /// |x1 - x2 - 1|, |x2 - x1 - 1|, |x1 + x2 - 1| divided by max(x1, x2, 1).
    std::array<double, 3> residuals{};
};

int expected_case(SeparationPattern pattern);

inline constexpr double kPtolemaeusTolerance = 1e-9;

/// Throws NoEqualityHolds when no residual is within `rel_tol`.
CaseLabel ptolemaeus_case(const Quadruple& q, SeparationPattern pattern,
                          double rel_tol = kPtolemaeusTolerance);

} // namespace cygan
