#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cygan/core.hpp"
#include "cygan/cross_ratio.hpp"
#include "cygan/rcircle.hpp"
#include "cygan/rng.hpp"

namespace cygan {

enum class Suite { Inequality, Equality, Triangle, Invariance, Oracle, All };

std::string_view to_string(Suite s);
/// Throws InvalidArgument for unknown names.
Suite parse_suite(std::string_view name);

struct CampaignConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    double tolerance = 1e-9;
    Suite suite = Suite::All;
    /// Half-width of the sampling box for zeta components and v; heights in (0, scale].
    double coordinate_scale = 10.0;
    /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
    unsigned threads = 0;
};

/// Throws InvalidArgument unless samples >= 1, tolerance > 0 and scale > 0.
void validate(const CampaignConfig& config);

// Tolerances that are part of the acceptance contract and do not follow --tol.
inline constexpr double kOracleTolerance = 1e-12;
inline constexpr double kClosedFormTolerance = 1e-12;
inline constexpr double kEqualityLocusTolerance = 1e-10;
inline constexpr double kUnitSphereTolerance = 1e-12;
inline constexpr double kDistancePreservationTolerance = 1e-12;
/// Minimum pairwise Cygan distance below which sampled tuples are resampled.
inline constexpr double kNearDegenerate = 1e-8;

enum class Region { Interior, Boundary, ClosureWithInfinity };

/// zeta components and v uniform in [-scale, scale]; u uniform in (0, scale]
/// for Interior, 0 for Boundary. ClosureWithInfinity returns infinity with
/// probability 1/10, otherwise an interior or boundary point with equal odds.
ClosurePoint sample_point(Rng& rng, double scale, Region region);

/// Smallest of the six pairwise distances (infinite pairs ignored).
double min_pairwise_distance(const Quadruple& q);

struct InequalityResult {
    bool pass = false;
    CrossRatioValues values;
    double sum_slack = 0.0;  ///< x1 + x2 - 1, must be >= -tol
    double diff_slack = 0.0; ///< |x1 - x2| - 1, must be <= tol
};

/// x1 + x2 >= 1 - tol and |x1 - x2| <= 1 + tol.
InequalityResult check_ptolemaean_inequality(const Quadruple& q, double tol);

struct ProductFormResult {
    bool pass = false;
    /// (rhs - lhs) / max(lhs, rhs) for the pairings
    /// r13 r24 <= r12 r34 + r23 r14, r12 r34 <= r13 r24 + r14 r23, r14 r23 <= r12 r34 + r13 r24.
    std::array<double, 3> margins{};
    /// Pass/fail of the cross-ratio form on the same quadruple, for comparison.
    bool cross_ratio_pass = false;
};

/// Six-distance product form of the inequality. Requires four finite points
/// (throws InvalidArgument otherwise).
ProductFormResult check_equivalent_ptolemaean_form(const Quadruple& q, double tol);

/// Inputs of one sample. Only the fields relevant to a check are set.
struct SampleInput {
    std::vector<ClosurePoint> points;
    std::optional<GeneratorWord> word;
    std::optional<double> height;
    std::vector<CircleParam> params;
    /// Check-specific discriminator (perturbation kind, height index, ...).
    int variant = 0;
};

struct Violation {
    std::string check;
    std::size_t index = 0;
    SampleInput inputs;
    std::vector<std::pair<std::string, double>> values;
    double slack = 0.0;
    std::string message;
};

/// One row per evaluated sample. slack_lo and slack_hi coincide for checks
/// with a single slack quantity.
struct SampleRow {
    std::size_t check = 0; ///< index into CampaignReport::checks
    std::size_t index = 0;
    std::optional<double> x1;
    std::optional<double> x2;
    double slack_lo = 0.0;
    double slack_hi = 0.0;
    bool violated = false;
};

struct CheckSummary {
    std::string name;
    std::string slack_meaning;
    std::size_t samples = 0;
    std::size_t violations = 0;
    std::size_t rejections = 0;
    double min_slack = 0.0;
    double max_slack = 0.0;
};

struct CampaignReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tolerance = 0.0;
    std::vector<Violation> violations;
    double max_slack = 0.0;
    double min_slack = 0.0;
    std::size_t rejections = 0;
    double elapsed_ms = 0.0;
    std::vector<CheckSummary> checks;
    std::vector<SampleRow> rows;

    bool passed() const noexcept { return violations.empty(); }
    const CheckSummary* find_check(std::string_view name) const;
};

CampaignReport check_inequality_suite(const CampaignConfig& config);
/// Ptolemaeus cases on R-circles, closed forms on standard circles, off-circle negative control.
CampaignReport check_ptolemaeus_suite(const CampaignConfig& config);
CampaignReport check_triangle_suite(const CampaignConfig& config);
CampaignReport check_invariance_suite(const CampaignConfig& config);
CampaignReport check_oracle_suite(const CampaignConfig& config);

/// Runs config.suite; All concatenates the five suites in the order above.
CampaignReport run_campaign(const CampaignConfig& config);

/// Names of the checks belonging to a suite, in report order.
std::vector<std::string> check_names(Suite suite);

/// Re-evaluates a recorded sample; true iff it still violates its check.
bool replay_violation(const Violation& v, const CampaignConfig& config);

/// Report JSON: {suite, seed, samples, tolerance, violations, max_slack,
/// min_slack, rejections, elapsed_ms, checks}.
std::string report_to_json(const CampaignReport& report);
/// Header `check,index,x1,x2,slack_lo,slack_hi,violated`, one row per sample.
std::string report_to_csv(const CampaignReport& report);

} // namespace cygan
