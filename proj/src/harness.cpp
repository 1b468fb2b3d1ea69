#include "cygan/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "cygan/heisenberg.hpp"
#include "cygan/metric.hpp"
#include "cygan/normalize.hpp"

namespace cygan {
namespace {

constexpr std::size_t kMaxResampling = 10000;

struct Outcome {
    std::optional<double> x1;
    std::optional<double> x2;
    double slack_lo = 0.0;
    double slack_hi = 0.0;
    bool violated = false;
    std::vector<std::pair<std::string, double>> values;
    std::string message;
};

Outcome single_slack(double slack, bool violated) {
    Outcome o;
    o.slack_lo = o.slack_hi = slack;
    o.violated = violated;
    return o;
}

using Sampler = std::function<SampleInput(Rng&, const CampaignConfig&, std::size_t&)>;
using Evaluator = std::function<Outcome(const SampleInput&, const CampaignConfig&)>;

struct CheckSpec {
    std::string name;
    std::string stream;
    /// Draws per --samples unit; 1e5 samples reproduce the acceptance sizes.
    double ratio = 1.0;
    std::string slack_meaning;
    Sampler sample;
    Evaluator evaluate;
};

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double dist(const ClosurePoint& p, const ClosurePoint& q) {
    return rho(p, q).value();
}

Quadruple as_quadruple(const SampleInput& in) {
    return make_quadruple(in.points.at(0), in.points.at(1), in.points.at(2), in.points.at(3));
}

// Resamples `draw` until it yields a usable value; throwing attempts and
// draws rejected by the predicate both count as rejections.
template <class Draw>
auto draw_until(std::size_t& rejections, Draw&& draw) {
    for (std::size_t attempt = 0; attempt < kMaxResampling; ++attempt) {
        try {
            if (auto value = draw())
                return std::move(*value);
        } catch (const Error&) {
        }
        ++rejections;
    }
    throw Error(ErrorKind::InvalidArgument, "sampler exceeded the resampling limit");
}

bool usable(const Quadruple& q) {
    return min_pairwise_distance(q) >= kNearDegenerate;
}

SampleInput quadruple_input(const Quadruple& q) {
    SampleInput in;
    in.points.assign(q.points().begin(), q.points().end());
    return in;
}

Region finite_region(Rng& rng) {
    return rng.bernoulli(0.5) ? Region::Interior : Region::Boundary;
}

SampleInput sample_closure_quadruple(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        const auto q = make_quadruple(sample_point(rng, s, Region::ClosureWithInfinity),
                                      sample_point(rng, s, Region::ClosureWithInfinity),
                                      sample_point(rng, s, Region::ClosureWithInfinity),
                                      sample_point(rng, s, Region::ClosureWithInfinity));
        if (!usable(q))
            return std::nullopt;
        return quadruple_input(q);
    });
}

SampleInput sample_finite_quadruple(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        const auto q = make_quadruple(sample_point(rng, s, finite_region(rng)), sample_point(rng, s, finite_region(rng)),
                                      sample_point(rng, s, finite_region(rng)), sample_point(rng, s, finite_region(rng)));
        if (!usable(q))
            return std::nullopt;
        return quadruple_input(q);
    });
}

enum class GenKind { T, R, D, J, I, Iu };

Generator random_generator(Rng& rng, double scale, GenKind kind) {
    switch (kind) {
    case GenKind::T:
        return gen::Translation{Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
                                rng.uniform(-scale, scale)};
    case GenKind::R: return gen::Rotation{rng.uniform(0.0, 2.0 * std::numbers::pi)};
    case GenKind::D: return make_dilation(std::exp(rng.uniform(-1.0, 1.0)));
    case GenKind::J: return gen::Conjugation{};
    case GenKind::I: return gen::InversionClosure{};
    case GenKind::Iu: return gen::InversionHoro{};
    }
    return gen::Conjugation{};
}

GeneratorWord random_word(Rng& rng, double scale, const std::vector<GenKind>& alphabet, std::size_t min_len,
                          std::size_t max_len) {
    GeneratorWord w;
    const std::size_t len = min_len + rng.below(max_len - min_len + 1);
    for (std::size_t i = 0; i < len; ++i)
        w.generators.push_back(random_generator(rng, scale, alphabet[rng.below(alphabet.size())]));
    return w;
}

CircleParam random_param(Rng& rng, double scale) {
    if (rng.bernoulli(0.1))
        return CircleParam::infinity();
    return CircleParam::at(rng.uniform(-scale, scale));
}

double positive_height(Rng& rng, double scale) {
    return scale * (1.0 - rng.uniform01());
}

// --- inequality -----------------------------------------------------------

Outcome eval_inequality(const SampleInput& in, const CampaignConfig& cfg) {
    const auto r = check_ptolemaean_inequality(as_quadruple(in), cfg.tolerance);
    Outcome o;
    o.x1 = r.values.x1;
    o.x2 = r.values.x2;
    o.slack_lo = r.sum_slack;
    o.slack_hi = r.diff_slack;
    o.violated = !r.pass;
    o.values = {{"x1", r.values.x1}, {"x2", r.values.x2}, {"x1+x2-1", r.sum_slack}, {"|x1-x2|-1", r.diff_slack}};
    return o;
}

Outcome eval_product_form(const SampleInput& in, const CampaignConfig& cfg) {
    const auto r = check_equivalent_ptolemaean_form(as_quadruple(in), cfg.tolerance);
    const double worst = *std::min_element(r.margins.begin(), r.margins.end());
    Outcome o = single_slack(worst, !r.pass || r.pass != r.cross_ratio_pass);
    o.values = {{"margin13_24", r.margins[0]}, {"margin12_34", r.margins[1]}, {"margin14_23", r.margins[2]}};
    if (r.pass != r.cross_ratio_pass)
        o.message = "product form and cross-ratio form disagree";
    return o;
}

// --- equality (Ptolemaeus) --------------------------------------------------

SampleInput sample_closed_form(Rng& rng, const CampaignConfig& cfg, std::size_t&) {
    const double s = cfg.coordinate_scale;
    const double x3 = positive_height(rng, s);
    const double x2 = x3 + positive_height(rng, s);
    SampleInput in;
    in.variant = static_cast<int>(rng.below(2));
    in.height = static_cast<double>(in.variant);
    in.params = {CircleParam::infinity(), CircleParam::at(x2), CircleParam::at(x3), CircleParam::at(0.0)};
    return in;
}

Outcome eval_closed_form(const SampleInput& in, const CampaignConfig&) {
    const RCircle circle(in.height.value(), {});
    const std::array<CircleParam, 4> t{in.params.at(0), in.params.at(1), in.params.at(2), in.params.at(3)};
    const auto cq = quadruple_on_circle(circle, t);
    const auto x = cross_ratio_values(cq.quadruple);
    const double a = *t[1].x;
    const double b = *t[2].x;
    const double x1_expected = a / (a - b);
    const double x2_expected = b / (a - b);
    const double err = std::max(std::abs(x.x1 - x1_expected) / x1_expected, std::abs(x.x2 - x2_expected) / x2_expected);
    Outcome o = single_slack(err, !(err <= kClosedFormTolerance) || cq.pattern != SeparationPattern::P1P3);
    o.x1 = x.x1;
    o.x2 = x.x2;
    o.values = {{"x1", x.x1}, {"x2", x.x2}, {"x1_expected", x1_expected}, {"x2_expected", x2_expected},
                {"x1-x2", x.x1 - x.x2}};
    return o;
}

SampleInput sample_circle_quadruple(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    static const std::vector<GenKind> alphabet{GenKind::T, GenKind::R, GenKind::D, GenKind::J, GenKind::Iu};
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        SampleInput in;
        in.height = positive_height(rng, s);
        in.word = random_word(rng, s, alphabet, 0, 5);
        in.params = {random_param(rng, s), random_param(rng, s), random_param(rng, s), random_param(rng, s)};
        const RCircle circle(*in.height, *in.word);
        const auto cq = quadruple_on_circle(circle, {in.params[0], in.params[1], in.params[2], in.params[3]});
        if (!usable(cq.quadruple))
            return std::nullopt;
        in.points.assign(cq.quadruple.points().begin(), cq.quadruple.points().end());
        return in;
    });
}

Outcome eval_circle_quadruple(const SampleInput& in, const CampaignConfig& cfg) {
    const RCircle circle(in.height.value(), in.word.value());
    const auto cq = quadruple_on_circle(circle, {in.params.at(0), in.params.at(1), in.params.at(2), in.params.at(3)});
    const int want = expected_case(cq.pattern);
    try {
        const auto label = ptolemaeus_case(cq.quadruple, cq.pattern, cfg.tolerance);
        const double own = label.residuals[want - 1];
        double others = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k)
            if (k != want - 1)
                others = std::min(others, label.residuals[k]);
        Outcome o = single_slack(own, !label.matches_expected || !(others > cfg.tolerance));
        o.x1 = label.values.x1;
        o.x2 = label.values.x2;
        o.values = {{"x1", label.values.x1},          {"x2", label.values.x2},
                    {"expected_case", want},          {"observed_case", label.equality_case},
                    {"residual_case1", label.residuals[0]}, {"residual_case2", label.residuals[1]},
                    {"residual_case3", label.residuals[2]}};
        if (!label.matches_expected)
            o.message = "equality case does not match the separation pattern";
        return o;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoEqualityHolds)
            throw;
        const auto x = cross_ratio_values(cq.quadruple);
        const double scale = std::max({x.x1, x.x2, 1.0});
        Outcome o = single_slack(std::abs(want == 3 ? x.x1 + x.x2 - 1.0 : std::abs(x.x1 - x.x2) - 1.0) / scale, true);
        o.x1 = x.x1;
        o.x2 = x.x2;
        o.values = {{"x1", x.x1}, {"x2", x.x2}, {"expected_case", want}};
        o.message = e.what();
        return o;
    }
}

Outcome eval_negative_control(const SampleInput& in, const CampaignConfig& cfg) {
    const auto q = as_quadruple(in);
    const auto x = cross_ratio_values(q);
    const double scale = std::max({x.x1, x.x2, 1.0});
    const double closest = std::min({std::abs(x.x1 - x.x2 - 1.0), std::abs(x.x2 - x.x1 - 1.0),
                                     std::abs(x.x1 + x.x2 - 1.0)}) / scale;
    bool equality_found = true;
    try {
        ptolemaeus_case(q, SeparationPattern::P1P3, cfg.tolerance);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoEqualityHolds)
            throw;
        equality_found = false;
    }
    Outcome o = single_slack(closest, equality_found);
    o.x1 = x.x1;
    o.x2 = x.x2;
    o.values = {{"x1", x.x1}, {"x2", x.x2}, {"closest_residual", closest}};
    if (equality_found)
        o.message = "off-circle quadruple satisfies a Ptolemaeus equality";
    return o;
}

// --- triangle ---------------------------------------------------------------

SampleInput sample_interior_triple(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        SampleInput in;
        in.points = {sample_point(rng, s, Region::Interior), sample_point(rng, s, Region::Interior),
                     sample_point(rng, s, Region::Interior)};
        for (int i = 0; i < 3; ++i)
            if (dist(in.points[i], in.points[(i + 1) % 3]) < kNearDegenerate)
                return std::nullopt;
        return in;
    });
}

Outcome eval_triangle(const SampleInput& in, const CampaignConfig& cfg) {
    // All three labelings of rho(a,b) <= rho(a,c) + rho(c,b).
    double worst = std::numeric_limits<double>::infinity();
    bool violated = false;
    for (int k = 0; k < 3; ++k) {
        const auto& a = in.points.at(k);
        const auto& b = in.points.at((k + 1) % 3);
        const auto& c = in.points.at((k + 2) % 3);
        const double direct = dist(a, b);
        const double slack = dist(a, c) + dist(c, b) - direct;
        worst = std::min(worst, slack);
        if (slack < -cfg.tolerance * std::max(1.0, direct))
            violated = true;
    }
    Outcome o = single_slack(worst, violated);
    o.values = {{"min_slack", worst}};
    return o;
}

enum class Perturbation { None = 0, VerticalV = 1, Height = 2, NonReal = 3, SameSign = 4 };

// Equality configuration p1 = (x1,0,u), p2 = (x2,0,u), p3 = (0,0,u) with
// x1 x2 < 0, optionally perturbed in one condition, then moved by a random
// translation and rotation (isometries, so equality is unaffected).
SampleInput sample_equality_config(Rng& rng, const CampaignConfig& cfg, Perturbation kind) {
    const double s = std::max(cfg.coordinate_scale, 2.0);
    const double u = positive_height(rng, s);
    double x1 = rng.uniform(1.0, s);
    double x2 = -rng.uniform(1.0, s);
    if (rng.bernoulli(0.5))
        std::swap(x1, x2);
    const double eps = rng.uniform(0.1, 1.0);

    Complex z1(x1, 0.0);
    Complex z2(x2, 0.0);
    double v1 = 0.0;
    double u2 = u;
    switch (kind) {
    case Perturbation::None: break;
    case Perturbation::VerticalV: v1 = rng.bernoulli(0.5) ? eps : -eps; break;
    case Perturbation::Height: u2 = u + eps; break;
    case Perturbation::NonReal: z1 = Complex(x1, rng.bernoulli(0.5) ? eps : -eps); break;
    case Perturbation::SameSign: z2 = -z2; break;
    }

    const GeneratorWord motion{{gen::Translation{Complex(rng.uniform(-s, s), rng.uniform(-s, s)), rng.uniform(-s, s)},
                                gen::Rotation{rng.uniform(0.0, 2.0 * std::numbers::pi)}}};
    SampleInput in;
    in.variant = static_cast<int>(kind);
    in.points = {apply_word(motion, ClosurePoint::finite(z1, v1, u)), apply_word(motion, ClosurePoint::finite(z2, 0.0, u2)),
                 apply_word(motion, ClosurePoint::finite(Complex(0.0, 0.0), 0.0, u))};
    return in;
}

Outcome eval_equality_config(const SampleInput& in, const CampaignConfig&) {
    const auto& p1 = in.points.at(0);
    const auto& p2 = in.points.at(1);
    const auto& p3 = in.points.at(2);
    const double gap = dist(p1, p3) + dist(p3, p2) - dist(p1, p2);
    Outcome o;
    if (in.variant == static_cast<int>(Perturbation::None)) {
        o = single_slack(std::abs(gap), !(std::abs(gap) <= kEqualityLocusTolerance));
        o.values = {{"rho12-rho13-rho32", -gap}};
    } else {
        // A perturbed configuration has to be strictly above the equality noise floor.
        o = single_slack(gap, !(gap > kEqualityLocusTolerance));
        o.values = {{"margin", gap}};
        if (o.violated)
            o.message = "perturbed configuration did not restore strict inequality";
    }
    return o;
}

// --- invariance ---------------------------------------------------------------

enum class WordFamily { General = 0, Horospherical = 1 };

std::optional<Quadruple> apply_diagonal(const GeneratorWord& w, const Quadruple& q) {
    const auto image = make_quadruple(apply_word(w, q[0]), apply_word(w, q[1]), apply_word(w, q[2]), apply_word(w, q[3]));
    if (!usable(image))
        return std::nullopt;
    return image;
}

SampleInput sample_word_quadruple(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    static const std::vector<GenKind> general{GenKind::T, GenKind::R, GenKind::D, GenKind::J, GenKind::I};
    static const std::vector<GenKind> horo{GenKind::T, GenKind::R, GenKind::D, GenKind::J, GenKind::Iu};
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        const auto family = rng.bernoulli(0.5) ? WordFamily::General : WordFamily::Horospherical;
        std::optional<Quadruple> q;
        if (family == WordFamily::General) {
            q = make_quadruple(sample_point(rng, s, Region::ClosureWithInfinity),
                               sample_point(rng, s, Region::ClosureWithInfinity),
                               sample_point(rng, s, Region::ClosureWithInfinity),
                               sample_point(rng, s, Region::ClosureWithInfinity));
        } else {
            const double u = rng.bernoulli(0.25) ? 0.0 : positive_height(rng, s);
            std::array<ClosurePoint, 4> pts{ClosurePoint::infinity(), ClosurePoint::infinity(), ClosurePoint::infinity(),
                                            ClosurePoint::infinity()};
            for (auto& p : pts) {
                const auto base = sample_point(rng, s, Region::Boundary).coords();
                p = ClosurePoint::finite(base.zeta, base.v, u);
            }
            q = make_quadruple(pts);
        }
        if (!usable(*q))
            return std::nullopt;
        SampleInput in = quadruple_input(*q);
        in.variant = static_cast<int>(family);
        in.word = random_word(rng, s, family == WordFamily::General ? general : horo, 1, 5);
        if (!apply_diagonal(*in.word, *q))
            return std::nullopt;
        return in;
    });
}

Outcome eval_word_invariance(const SampleInput& in, const CampaignConfig& cfg) {
    const auto q = as_quadruple(in);
    const auto image = make_quadruple(apply_word(*in.word, q[0]), apply_word(*in.word, q[1]),
                                      apply_word(*in.word, q[2]), apply_word(*in.word, q[3]));
    const auto before = cross_ratio_values(q);
    const auto after = cross_ratio_values(image);
    const double err = std::max(rel_diff(before.x1, after.x1), rel_diff(before.x2, after.x2));
    Outcome o = single_slack(err, !(err <= cfg.tolerance));
    o.x1 = before.x1;
    o.x2 = before.x2;
    o.values = {{"x1_before", before.x1}, {"x2_before", before.x2}, {"x1_after", after.x1}, {"x2_after", after.x2}};
    return o;
}

SampleInput sample_pair_off_origin(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        SampleInput in;
        in.points = {sample_point(rng, s, finite_region(rng)), sample_point(rng, s, finite_region(rng))};
        if (in.points[0].is_origin() || in.points[1].is_origin() || dist(in.points[0], in.points[1]) < kNearDegenerate)
            return std::nullopt;
        return in;
    });
}

Outcome eval_inversion_identity(const SampleInput& in, const CampaignConfig& cfg) {
    const auto& p = in.points.at(0);
    const auto& q = in.points.at(1);
    const auto o_pt = ClosurePoint::origin();
    const auto ip = apply_generator(gen::InversionClosure{}, p);
    const auto iq = apply_generator(gen::InversionClosure{}, q);
    const double rpo = dist(p, o_pt);
    const double rqo = dist(o_pt, q);
    const double reciprocal = std::abs(dist(ip, o_pt) * rpo - 1.0);
    const double cross = rel_diff(dist(ip, iq) * rpo * rqo, dist(p, q));
    const double err = std::max(reciprocal, cross);
    Outcome o = single_slack(err, !(err <= cfg.tolerance));
    o.values = {{"reciprocal_error", reciprocal}, {"pair_error", cross},
                {"interior_points", static_cast<double>(p.is_interior() + q.is_interior())}};
    return o;
}

SampleInput sample_sphere_point(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const auto p = sample_point(rng, cfg.coordinate_scale, finite_region(rng));
        const double r = dist(p, ClosurePoint::origin());
        if (r < kNearDegenerate)
            return std::nullopt;
        SampleInput in;
        in.points = {apply_generator(make_dilation(1.0 / r), p)};
        return in;
    });
}

Outcome eval_unit_sphere(const SampleInput& in, const CampaignConfig&) {
    const auto& p = in.points.at(0);
    const auto o_pt = ClosurePoint::origin();
    const double before = dist(p, o_pt);
    const double after = dist(apply_generator(gen::InversionClosure{}, p), o_pt);
    const double err = std::abs(after - 1.0);
    Outcome o = single_slack(err, !(err <= kUnitSphereTolerance));
    o.values = {{"rho_p_o", before}, {"rho_Ip_o", after}};
    return o;
}

Outcome eval_reduction_distances(const SampleInput& in, const CampaignConfig&) {
    const auto q = as_quadruple(in);
    const auto r = reduce_to_infinity_form(q);
    const auto relabelled = q.permuted(r.permutation);
    std::array<ClosurePoint, 4> stage = relabelled.points();
    for (const auto& g : r.word.generators)
        if (std::holds_alternative<gen::Translation>(g))
            for (auto& p : stage)
                p = apply_generator(g, p);
    if (r.height_shift != 0.0)
        for (auto& p : stage)
            if (p.is_finite())
                p = ClosurePoint::finite(p.coords().zeta, p.coords().v, p.coords().u - r.height_shift);

    double err = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const auto a = rho(relabelled[i], relabelled[j]);
            const auto b = rho(stage[i], stage[j]);
            if (a.is_infinite() || b.is_infinite())
                err = std::max(err, a == b ? 0.0 : std::numeric_limits<double>::max());
            else
                err = std::max(err, rel_diff(a.value(), b.value()));
        }
    Outcome o = single_slack(err, !(err <= kDistancePreservationTolerance));
    o.values = {{"max_relative_distance_change", err}, {"branch", static_cast<double>(r.branch)}};
    return o;
}

std::size_t interior_count(const Quadruple& q) {
    return static_cast<std::size_t>(std::count_if(q.points().begin(), q.points().end(),
                                                  [](const ClosurePoint& p) { return p.is_interior(); }));
}

Outcome eval_reduction_cross_ratio(const SampleInput& in, const CampaignConfig& cfg) {
    const auto q = as_quadruple(in);
    const auto r = reduce_to_infinity_form(q);
    const auto before = cross_ratio_values(q);
    const auto after = cross_ratio_values(r.quadruple);
    const double err = std::max(rel_diff(before.x1, after.x1), rel_diff(before.x2, after.x2));
    Outcome o = single_slack(err, !(err <= cfg.tolerance));
    o.x1 = before.x1;
    o.x2 = before.x2;
    o.values = {{"x1_before", before.x1},
                {"x2_before", before.x2},
                {"x1_after", after.x1},
                {"x2_after", after.x2},
                {"branch", static_cast<double>(r.branch)},
                {"interior_points", static_cast<double>(interior_count(q))}};
    return o;
}

// --- oracle -------------------------------------------------------------------

SampleInput sample_pair(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections, Region a, Region b) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        SampleInput in;
        in.points = {sample_point(rng, cfg.coordinate_scale, a), sample_point(rng, cfg.coordinate_scale, b)};
        if (rng.bernoulli(0.5))
            std::swap(in.points[0], in.points[1]);
        if (dist(in.points[0], in.points[1]) < kNearDegenerate)
            return std::nullopt;
        return in;
    });
}

Outcome eval_heis_lift(const SampleInput& in, const CampaignConfig&) {
    const auto p = in.points.at(0).coords().horizontal();
    const auto q = in.points.at(1).coords().horizontal();
    const double gauge = d_heis(p, q);
    const double lift = d_heis_via_lift(p, q);
    const double err = rel_diff(gauge, lift);
    Outcome o = single_slack(err, !(err <= kOracleTolerance));
    o.values = {{"d_heis", gauge}, {"d_heis_via_lift", lift}};
    return o;
}

double pairing_modulus(const ClosurePoint& p, const ClosurePoint& q) {
    return std::abs(hermitian_form(standard_lift(p.coords()), standard_lift(q.coords())));
}

Outcome eval_rho_pairing(const SampleInput& in, const CampaignConfig&) {
    const double r = dist(in.points.at(0), in.points.at(1));
    const double pairing = pairing_modulus(in.points[0], in.points[1]);
    const double err = rel_diff(r * r, pairing);
    Outcome o = single_slack(err, !(err <= kOracleTolerance));
    o.values = {{"rho_squared", r * r}, {"pairing_modulus", pairing}};
    return o;
}

Outcome eval_interior_mismatch(const SampleInput& in, const CampaignConfig&) {
    const double r = dist(in.points.at(0), in.points.at(1));
    const double pairing = pairing_modulus(in.points[0], in.points[1]);
    const double mismatch = rel_diff(r * r, pairing);
    // Agreement here would contradict the "only if" direction.
    Outcome o = single_slack(mismatch, mismatch <= kOracleTolerance);
    o.values = {{"rho_squared", r * r}, {"pairing_modulus", pairing}};
    return o;
}

SampleInput sample_horosphere_pair(Rng& rng, const CampaignConfig& cfg, std::size_t& rejections) {
    return draw_until(rejections, [&]() -> std::optional<SampleInput> {
        const double s = cfg.coordinate_scale;
        const double u = positive_height(rng, s);
        const auto a = sample_point(rng, s, Region::Boundary).coords();
        const auto b = sample_point(rng, s, Region::Boundary).coords();
        SampleInput in;
        in.points = {ClosurePoint::finite(a.zeta, a.v, u), ClosurePoint::finite(b.zeta, b.v, u)};
        if (dist(in.points[0], in.points[1]) < kNearDegenerate)
            return std::nullopt;
        return in;
    });
}

Outcome eval_horosphere(const SampleInput& in, const CampaignConfig&) {
    const auto& p = in.points.at(0);
    const auto& q = in.points.at(1);
    const double r = dist(p, q);
    const double d = d_heis(p.coords().horizontal(), q.coords().horizontal());
    Outcome o = single_slack(std::abs(r - d) / std::max(1.0, r), !rho_matches_d_heis(p, q));
    o.values = {{"rho", r}, {"d_heis", d}};
    return o;
}

// --- registry -------------------------------------------------------------------

const std::vector<CheckSpec>& all_checks() {
    static const std::vector<CheckSpec> checks = [] {
        std::vector<CheckSpec> c;
        auto perturbed = [](Perturbation kind) {
            return [kind](Rng& rng, const CampaignConfig& cfg, std::size_t&) {
                return sample_equality_config(rng, cfg, kind);
            };
        };
        auto pair = [](Region a, Region b) {
            return [a, b](Rng& rng, const CampaignConfig& cfg, std::size_t& rej) {
                return sample_pair(rng, cfg, rej, a, b);
            };
        };
        c.push_back({"inequality/cross_ratio", "inequality/closure", 1.0,
                     "lo: x1+x2-1 (>= -tol); hi: |x1-x2|-1 (<= tol)", sample_closure_quadruple, eval_inequality});
        c.push_back({"inequality/product_form", "inequality/finite", 1.0,
                     "smallest relative margin of the three product inequalities", sample_finite_quadruple,
                     eval_product_form});
        c.push_back({"equality/closed_form", "equality/closed_form", 0.01,
                     "relative error against x2/(x2-x3), x3/(x2-x3) (<= 1e-12)", sample_closed_form, eval_closed_form});
        c.push_back({"equality/ptolemaeus", "equality/circles", 0.1,
                     "residual of the separation-predicted equality (<= tol)", sample_circle_quadruple,
                     eval_circle_quadruple});
        c.push_back({"equality/negative_control", "equality/off_circle", 0.01,
                     "smallest residual of the three equalities (> tol)", sample_closure_quadruple,
                     eval_negative_control});
        c.push_back({"triangle/random", "triangle/random", 1.0,
                     "min over labelings of rho13+rho32-rho12 (>= -tol*max(1,rho12))", sample_interior_triple,
                     eval_triangle});
        c.push_back({"triangle/equality_locus", "triangle/locus", 0.01, "|rho12-rho13-rho32| (<= 1e-10)",
                     perturbed(Perturbation::None), eval_equality_config});
        c.push_back({"triangle/perturb_v", "triangle/perturb_v", 0.01, "rho13+rho32-rho12 (> 1e-10)",
                     perturbed(Perturbation::VerticalV), eval_equality_config});
        c.push_back({"triangle/perturb_height", "triangle/perturb_height", 0.01, "rho13+rho32-rho12 (> 1e-10)",
                     perturbed(Perturbation::Height), eval_equality_config});
        c.push_back({"triangle/perturb_nonreal", "triangle/perturb_nonreal", 0.01, "rho13+rho32-rho12 (> 1e-10)",
                     perturbed(Perturbation::NonReal), eval_equality_config});
        c.push_back({"triangle/perturb_same_sign", "triangle/perturb_same_sign", 0.01, "rho13+rho32-rho12 (> 1e-10)",
                     perturbed(Perturbation::SameSign), eval_equality_config});
        c.push_back({"invariance/words", "invariance/words", 0.1, "max relative change of x1, x2 (<= tol)",
                     sample_word_quadruple, eval_word_invariance});
        c.push_back({"invariance/inversion_identity", "invariance/inversion", 0.1,
                     "max relative error of the two inversion identities (<= tol)", sample_pair_off_origin,
                     eval_inversion_identity});
        c.push_back({"invariance/unit_sphere", "invariance/sphere", 0.01, "|rho(I(p),o)-1| (<= 1e-12)",
                     sample_sphere_point, eval_unit_sphere});
        c.push_back({"invariance/reduction_distances", "invariance/reduction", 0.1,
                     "max relative change of the six distances through the translation stage (<= 1e-12)",
                     sample_closure_quadruple, eval_reduction_distances});
        c.push_back({"invariance/reduction_cross_ratio", "invariance/reduction", 0.1,
                     "max relative change of x1, x2 through the full reduction (<= tol)", sample_closure_quadruple,
                     eval_reduction_cross_ratio});
        c.push_back({"oracle/heis_lift", "oracle/heis_lift", 1.0, "relative gap gauge vs lift form (<= 1e-12)",
                     pair(Region::Boundary, Region::Boundary), eval_heis_lift});
        c.push_back({"oracle/rho_pairing", "oracle/rho_pairing", 0.1,
                     "relative gap rho^2 vs |<z1,z2>| with a boundary point (<= 1e-12)",
                     pair(Region::Interior, Region::Boundary), eval_rho_pairing});
        c.push_back({"oracle/interior_mismatch", "oracle/interior_mismatch", 0.1,
                     "relative gap rho^2 vs |<z1,z2>| for interior pairs (expected > 1e-12)",
                     pair(Region::Interior, Region::Interior), eval_interior_mismatch});
        c.push_back({"oracle/horosphere", "oracle/horosphere", 0.1,
                     "|rho - d_heis| / max(1, rho) on a common horosphere (<= 1e-12)", sample_horosphere_pair,
                     eval_horosphere});
        return c;
    }();
    return checks;
}

std::string_view suite_prefix(Suite s) {
    return to_string(s);
}

const CheckSpec& find_spec(std::string_view name) {
    for (const auto& c : all_checks())
        if (c.name == name)
            return c;
    throw Error(ErrorKind::InvalidArgument, "unknown check " + std::string(name));
}

struct SampleResult {
    Outcome outcome;
    SampleInput input;
    std::size_t rejections = 0;
};

SampleResult run_one(const CheckSpec& spec, const CampaignConfig& cfg, std::size_t index) {
    Rng rng = Rng::substream(cfg.seed, Rng::stream_id(spec.stream), index);
    SampleResult r;
    r.input = spec.sample(rng, cfg, r.rejections);
    try {
        r.outcome = spec.evaluate(r.input, cfg);
    } catch (const Error& e) {
        r.outcome = single_slack(std::numeric_limits<double>::quiet_NaN(), true);
        r.outcome.message = e.what();
    }
    return r;
}

void run_check(const CheckSpec& spec, const CampaignConfig& cfg, CampaignReport& report) {
    const auto n = static_cast<std::size_t>(std::max(1.0, std::round(static_cast<double>(cfg.samples) * spec.ratio)));
    std::vector<SampleResult> results(n);

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = run_one(spec, cfg, i);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < n; i += threads)
                    results[i] = run_one(spec, cfg, i);
            });
    }

    // Deterministic reduction in sample order.
    CheckSummary summary;
    summary.name = spec.name;
    summary.slack_meaning = spec.slack_meaning;
    summary.samples = n;
    summary.min_slack = std::numeric_limits<double>::infinity();
    summary.max_slack = -std::numeric_limits<double>::infinity();
    const std::size_t check_index = report.checks.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& r = results[i];
        summary.rejections += r.rejections;
        if (!std::isnan(r.outcome.slack_lo))
            summary.min_slack = std::min(summary.min_slack, r.outcome.slack_lo);
        if (!std::isnan(r.outcome.slack_hi))
            summary.max_slack = std::max(summary.max_slack, r.outcome.slack_hi);
        report.rows.push_back({check_index, i, r.outcome.x1, r.outcome.x2, r.outcome.slack_lo, r.outcome.slack_hi,
                               r.outcome.violated});
        if (r.outcome.violated) {
            ++summary.violations;
            report.violations.push_back({spec.name, i, std::move(r.input), std::move(r.outcome.values),
                                         r.outcome.slack_lo, std::move(r.outcome.message)});
        }
    }
    report.rejections += summary.rejections;
    report.checks.push_back(std::move(summary));
}

CampaignReport run_suite(Suite suite, const CampaignConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.suite = std::string(to_string(suite));
    report.seed = cfg.seed;
    report.samples = cfg.samples;
    report.tolerance = cfg.tolerance;
    for (const auto& name : check_names(suite))
        run_check(find_spec(name), cfg, report);

    report.min_slack = std::numeric_limits<double>::infinity();
    report.max_slack = -std::numeric_limits<double>::infinity();
    for (const auto& c : report.checks) {
        report.min_slack = std::min(report.min_slack, c.min_slack);
        report.max_slack = std::max(report.max_slack, c.max_slack);
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace

std::string_view to_string(Suite s) {
    switch (s) {
    case Suite::Inequality: return "inequality";
    case Suite::Equality: return "equality";
    case Suite::Triangle: return "triangle";
    case Suite::Invariance: return "invariance";
    case Suite::Oracle: return "oracle";
    case Suite::All: return "all";
    }
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (auto s : {Suite::Inequality, Suite::Equality, Suite::Triangle, Suite::Invariance, Suite::Oracle, Suite::All})
        if (to_string(s) == name)
            return s;
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

void validate(const CampaignConfig& config) {
    if (config.samples < 1)
        throw Error(ErrorKind::InvalidArgument, "samples must be at least 1");
    if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (!(config.coordinate_scale > 0.0) || !std::isfinite(config.coordinate_scale))
        throw Error(ErrorKind::InvalidArgument, "coordinate scale must be positive");
}

std::uint64_t Rng::stream_id(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return Rng(mix(mix(mix(seed) ^ stream) ^ index));
}

ClosurePoint sample_point(Rng& rng, double scale, Region region) {
    if (region == Region::ClosureWithInfinity) {
        if (rng.bernoulli(0.1))
            return ClosurePoint::infinity();
        region = rng.bernoulli(0.5) ? Region::Interior : Region::Boundary;
    }
    const double re = rng.uniform(-scale, scale);
    const double im = rng.uniform(-scale, scale);
    const double v = rng.uniform(-scale, scale);
    const double u = region == Region::Interior ? positive_height(rng, scale) : 0.0;
    return ClosurePoint::finite(re, im, v, u);
}

double min_pairwise_distance(const Quadruple& q) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const auto d = rho(q[i], q[j]);
            if (d.is_finite())
                best = std::min(best, d.value());
        }
    return best;
}

InequalityResult check_ptolemaean_inequality(const Quadruple& q, double tol) {
    InequalityResult r;
    r.values = cross_ratio_values(q);
    r.sum_slack = r.values.x1 + r.values.x2 - 1.0;
    r.diff_slack = std::abs(r.values.x1 - r.values.x2) - 1.0;
    r.pass = r.sum_slack >= -tol && r.diff_slack <= tol;
    return r;
}

ProductFormResult check_equivalent_ptolemaean_form(const Quadruple& q, double tol) {
    for (const auto& p : q.points())
        if (p.is_infinity())
            throw Error(ErrorKind::InvalidArgument, "product form needs four finite points");
    auto d = [&](int i, int j) { return dist(q[i - 1], q[j - 1]); };
    const double a = d(1, 3) * d(2, 4); // diagonals
    const double b = d(1, 2) * d(3, 4);
    const double c = d(2, 3) * d(1, 4);
    auto margin = [](double lhs, double rhs) { return (rhs - lhs) / std::max(lhs, rhs); };
    ProductFormResult r;
    r.margins = {margin(a, b + c), margin(b, a + c), margin(c, a + b)};
    r.pass = std::all_of(r.margins.begin(), r.margins.end(), [&](double m) { return m >= -tol; });
    r.cross_ratio_pass = check_ptolemaean_inequality(q, tol).pass;
    return r;
}

const CheckSummary* CampaignReport::find_check(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::vector<std::string> check_names(Suite suite) {
    std::vector<std::string> names;
    for (const auto& c : all_checks()) {
        const auto prefix = std::string(suite_prefix(suite)) + "/";
        if (suite == Suite::All || c.name.starts_with(prefix))
            names.push_back(c.name);
    }
    return names;
}

CampaignReport check_inequality_suite(const CampaignConfig& config) {
    return run_suite(Suite::Inequality, config);
}
CampaignReport check_ptolemaeus_suite(const CampaignConfig& config) {
    return run_suite(Suite::Equality, config);
}
CampaignReport check_triangle_suite(const CampaignConfig& config) {
    return run_suite(Suite::Triangle, config);
}
CampaignReport check_invariance_suite(const CampaignConfig& config) {
    return run_suite(Suite::Invariance, config);
}
CampaignReport check_oracle_suite(const CampaignConfig& config) {
    return run_suite(Suite::Oracle, config);
}

CampaignReport run_campaign(const CampaignConfig& config) {
    return run_suite(config.suite, config);
}

bool replay_violation(const Violation& v, const CampaignConfig& config) {
    const auto& spec = find_spec(v.check);
    try {
        return spec.evaluate(v.inputs, config).violated;
    } catch (const Error&) {
        return true;
    }
}

} // namespace cygan
