#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cygan/cross_ratio.hpp"
#include "cygan/harness.hpp"
#include "cygan/metric.hpp"
#include "cygan/normalize.hpp"
#include "cygan/rcircle.hpp"
#include "cygan/text.hpp"

namespace cygan::cli {
namespace {

struct Options {
    std::vector<std::string> points;

    double height = 0.0;
    std::string word;
    std::string params;
    std::size_t rcircle_samples = 0;

    std::string suite = "all";
    std::optional<std::uint64_t> seed;
    std::size_t samples = 100000;
    double tol = 1e-9;
    double scale = 10.0;
    unsigned threads = 0;
    std::string format = "json";
    std::string output;
};

std::vector<ClosurePoint> parse_points(const std::vector<std::string>& texts) {
    std::vector<ClosurePoint> pts;
    for (const auto& t : texts)
        pts.push_back(parse_point(t));
    return pts;
}

std::string pair_text(const CrossRatioValues& x) {
    return "X1=" + format_double(x.x1) + " X2=" + format_double(x.x2);
}

std::string_view pattern_text(SeparationPattern p) {
    switch (p) {
    case SeparationPattern::P1P3: return "p1,p3 separate p2,p4";
    case SeparationPattern::P1P2: return "p1,p2 separate p3,p4";
    case SeparationPattern::P1P4: return "p1,p4 separate p2,p3";
    }
    return "?";
}

std::string_view case_text(int c) {
    switch (c) {
    case 1: return "X1-X2=1";
    case 2: return "X2-X1=1";
    case 3: return "X1+X2=1";
    }
    return "?";
}

std::string_view branch_text(ReductionBranch b) {
    switch (b) {
    case ReductionBranch::AlreadyAtInfinity: return "infinity";
    case ReductionBranch::Boundary: return "boundary";
    case ReductionBranch::Interior: return "interior";
    }
    return "?";
}

int cmd_dist(const Options& o, std::ostream& out) {
    const auto pts = parse_points(o.points);
    out << format_ext_real(rho(pts[0], pts[1])) << '\n';
    return kExitOk;
}

int cmd_cr(const Options& o, std::ostream& out, std::ostream& err) {
    const auto pts = parse_points(o.points);
    const auto q = make_quadruple(pts[0], pts[1], pts[2], pts[3]);
    const auto x = cross_ratio_values(q);
    out << pair_text(x) << '\n';

    const double scale = std::max({x.x1, x.x2, 1.0});
    const double sum = (x.x1 + x.x2 - 1.0) / scale;
    const double diff = (std::abs(x.x1 - x.x2) - 1.0) / scale;
    if (std::abs(sum) <= kPtolemaeusTolerance)
        out << "X1+X2=1 (tight)\n";
    else
        out << "X1+X2>=1 (slack " << format_double(sum) << ")\n";
    if (std::abs(diff) <= kPtolemaeusTolerance)
        out << (x.x1 >= x.x2 ? "X1-X2=1" : "X2-X1=1") << " (tight)\n";
    else
        out << "|X1-X2|<=1 (slack " << format_double(-diff) << ")\n";

    const double closest = min_pairwise_distance(q);
    if (closest < kNearDegenerate)
        err << "warning: near-degenerate quadruple, min pairwise distance " << format_double(closest) << '\n';
    if (sum < -kPtolemaeusTolerance || diff > kPtolemaeusTolerance) {
        out << "VIOLATION\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const auto pts = parse_points(o.points);
    const auto q = make_quadruple(pts[0], pts[1], pts[2], pts[3]);
    const auto r = reduce_to_infinity_form(q);
    out << "quadruple:";
    for (const auto& p : r.quadruple.points())
        out << ' ' << format_point(p);
    out << "\nword: " << format_word(r.word) << '\n';
    out << "permutation: " << r.permutation[0] + 1 << ',' << r.permutation[1] + 1 << ',' << r.permutation[2] + 1
        << ',' << r.permutation[3] + 1 << '\n';
    out << "height_shift: " << format_double(r.height_shift) << '\n';
    out << "branch: " << branch_text(r.branch) << '\n';
    out << "before: " << pair_text(cross_ratio_values(q)) << '\n';
    out << "after: " << pair_text(cross_ratio_values(r.quadruple)) << '\n';
    return kExitOk;
}

void print_row(std::ostream& out, const CircleParam& t, const ClosurePoint& p) {
    out << format_param(t) << ',' << (p.is_infinity() ? "inf,inf,inf,inf" : format_point(p)) << '\n';
}

int cmd_rcircle(const Options& o, std::ostream& out, std::ostream& err) {
    const auto word = parse_word(o.word);
    for (const auto& g : word.generators)
        if (std::holds_alternative<gen::InversionClosure>(g))
            throw Error(ErrorKind::InvalidArgument, "closure inversion I does not preserve horospheres; use Iu");
    const RCircle circle(o.height, word);

    std::vector<CircleParam> params;
    if (!o.params.empty()) {
        params = parse_params(o.params);
    } else {
        const auto n = static_cast<double>(o.rcircle_samples);
        for (std::size_t k = 0; k < o.rcircle_samples; ++k)
            params.push_back(CircleParam::at(
                std::tan(std::numbers::pi * (static_cast<double>(k) + 0.5) / n - std::numbers::pi / 2.0)));
    }

    std::vector<ClosurePoint> pts;
    for (const auto& t : params)
        pts.push_back(circle_point(circle, t));

    int code = kExitOk;
    if (!o.params.empty() && params.size() == 4) {
        const std::array<CircleParam, 4> t{params[0], params[1], params[2], params[3]};
        const auto cq = quadruple_on_circle(circle, t);
        out << "# separation: " << pattern_text(cq.pattern) << '\n';
        try {
            const auto label = ptolemaeus_case(cq.quadruple, cq.pattern);
            out << "# case: " << label.equality_case << " (" << case_text(label.equality_case) << ")\n";
            out << "# " << pair_text(label.values) << '\n';
            if (!label.matches_expected) {
                err << "case " << label.equality_case << " does not match the predicted case "
                    << label.expected_case << '\n';
                code = kExitViolation;
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoEqualityHolds)
                throw;
            out << "# case: none\n";
            err << e.what() << '\n';
            code = kExitViolation;
        }
    }
    out << "t,zre,zim,v,u\n";
    for (std::size_t i = 0; i < params.size(); ++i)
        print_row(out, params[i], pts[i]);
    return code;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("CYGAN_SEED");
    if (env == nullptr || *env == '\0')
        return 1;
    std::uint64_t seed = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorKind::InvalidArgument, "CYGAN_SEED is not an unsigned integer: '" + std::string(text) + "'");
    return seed;
}

int cmd_campaign(const Options& o, std::ostream& out, std::ostream& err) {
    CampaignConfig cfg;
    cfg.suite = parse_suite(o.suite);
    cfg.seed = o.seed ? *o.seed : default_seed();
    cfg.samples = o.samples;
    cfg.tolerance = o.tol;
    cfg.coordinate_scale = o.scale;
    cfg.threads = o.threads;
    validate(cfg);

    const auto report = run_campaign(cfg);
    const std::string text = o.format == "csv" ? report_to_csv(report) : report_to_json(report);
    if (o.output.empty() || o.output == "-") {
        out << text;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        file << text;
        if (!file)
            throw Error(ErrorKind::InvalidArgument, "cannot write " + o.output);
    }

    for (const auto& c : report.checks)
        err << (c.violations == 0 ? "ok   " : "FAIL ") << c.name << "  samples=" << c.samples
            << " violations=" << c.violations << " rejections=" << c.rejections
            << " slack=[" << format_double(c.min_slack) << ", " << format_double(c.max_slack) << "]\n";
    return report.passed() ? kExitOk : kExitViolation;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cygan metric, cross-ratios and Ptolemaeus checks on the complex hyperbolic plane"};
    app.name("cygan");
    app.require_subcommand(1);
    Options o;

    auto* dist = app.add_subcommand("dist", "Cygan distance between two points");
    dist->add_option("points", o.points, "`inf` or zre,zim,v,u")->expected(2)->required();

    auto* cr = app.add_subcommand("cr", "cross-ratio pair (X1, X2) of four points");
    cr->add_option("points", o.points)->expected(4)->required();

    auto* reduce = app.add_subcommand("reduce", "bring a quadruple to the form (p, q, r, inf)");
    reduce->add_option("points", o.points)->expected(4)->required();

    auto* rcircle = app.add_subcommand("rcircle", "sample an R-circle as CSV");
    rcircle->add_option("--height", o.height, "height of the circle")->check(CLI::NonNegativeNumber);
    rcircle->add_option("--word", o.word, "height-preserving word, e.g. \"T:1,0,2;R:0.5;Iu\"");
    auto* params = rcircle->add_option("--params", o.params, "comma-separated parameters, `inf` allowed");
    auto* rsamples = rcircle->add_option("--samples", o.rcircle_samples, "number of evenly spread parameters")
                         ->check(CLI::PositiveNumber);
    params->excludes(rsamples);
    rcircle->callback([&] {
        if (o.params.empty() && o.rcircle_samples == 0)
            throw CLI::ValidationError("rcircle", "one of --params or --samples is required");
    });

    auto* campaign = app.add_subcommand("campaign", "run a verification campaign");
    campaign->add_option("--suite", o.suite)
        ->check(CLI::IsMember({"inequality", "equality", "triangle", "invariance", "oracle", "all"}));
    campaign->add_option("--seed", o.seed, "defaults to $CYGAN_SEED, then 1");
    campaign->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    campaign->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    campaign->add_option("--scale", o.scale)->check(CLI::PositiveNumber);
    campaign->add_option("--threads", o.threads, "worker threads, 0 = hardware concurrency");
    campaign->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    campaign->add_option("--output", o.output, "report path, stdout by default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*dist)
            return cmd_dist(o, out);
        if (*cr)
            return cmd_cr(o, out, err);
        if (*reduce)
            return cmd_reduce(o, out);
        if (*rcircle)
            return cmd_rcircle(o, out, err);
        return cmd_campaign(o, out, err);
    } catch (const Error& e) {
        switch (e.kind()) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidArgument:
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        case ErrorKind::DegenerateQuadruple:
            out << "DEGENERATE\n";
            err << e.what() << '\n';
            return kExitViolation;
        default:
            err << "error: " << e.what() << '\n';
            return kExitViolation;
        }
    }
}

} // namespace cygan::cli
