#include <gtest/gtest.h>

#include "cygan/harness.hpp"
#include "json.hpp"

using namespace cygan;

namespace {

CampaignConfig small(Suite suite, unsigned threads = 1) {
    CampaignConfig cfg;
    cfg.suite = suite;
    cfg.samples = 2000;
    cfg.threads = threads;
    return cfg;
}

std::string without_elapsed(std::string json) {
    auto j = nlohmann::ordered_json::parse(json);
    j.erase("elapsed_ms");
    return j.dump();
}

} // namespace

TEST(Config, Validation) {
    CampaignConfig cfg;
    EXPECT_NO_THROW(validate(cfg));
    cfg.samples = 0;
    EXPECT_THROW(validate(cfg), Error);
    cfg = {};
    cfg.tolerance = 0.0;
    EXPECT_THROW(validate(cfg), Error);
    cfg = {};
    cfg.coordinate_scale = -1.0;
    EXPECT_THROW(validate(cfg), Error);
}

TEST(Config, SuiteNames) {
    for (auto s : {Suite::Inequality, Suite::Equality, Suite::Triangle, Suite::Invariance, Suite::Oracle, Suite::All})
        EXPECT_EQ(parse_suite(to_string(s)), s);
    EXPECT_THROW(parse_suite("bogus"), Error);
}

TEST(Rng, SubstreamsAreReproducibleAndDistinct) {
    auto a = Rng::substream(1, Rng::stream_id("x"), 5);
    auto b = Rng::substream(1, Rng::stream_id("x"), 5);
    auto c = Rng::substream(1, Rng::stream_id("x"), 6);
    auto d = Rng::substream(2, Rng::stream_id("x"), 5);
    const double va = a.uniform01();
    EXPECT_EQ(va, b.uniform01());
    EXPECT_NE(va, c.uniform01());
    EXPECT_NE(va, d.uniform01());
    EXPECT_NE(Rng::stream_id("x"), Rng::stream_id("y"));
}

TEST(Sampling, RegionsAndRange) {
    Rng rng(3);
    int inf = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto in = sample_point(rng, 2.0, Region::Interior);
        EXPECT_TRUE(in.is_interior());
        EXPECT_LE(in.coords().u, 2.0);
        EXPECT_LE(std::abs(in.coords().v), 2.0);
        EXPECT_TRUE(sample_point(rng, 2.0, Region::Boundary).is_boundary());
        inf += sample_point(rng, 2.0, Region::ClosureWithInfinity).is_infinity();
    }
    EXPECT_GT(inf, 350);
    EXPECT_LT(inf, 650);
}

TEST(Inequality, ProductFormAgreesWithCrossRatioForm) {
    const auto q = make_quadruple(ClosurePoint::finite(1, 2, 3, 1), ClosurePoint::finite(-1, 0.5, 2, 0),
                                  ClosurePoint::finite(3, 1, -1, 2), ClosurePoint::finite(0, 1, 1, 0.5));
    const auto r = check_equivalent_ptolemaean_form(q, 1e-9);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.cross_ratio_pass);
    const auto withinf = make_quadruple(ClosurePoint::infinity(), ClosurePoint::finite(-1, 0.5, 2, 0),
                                        ClosurePoint::finite(3, 1, -1, 2), ClosurePoint::finite(0, 1, 1, 0.5));
    EXPECT_THROW(check_equivalent_ptolemaean_form(withinf, 1e-9), Error);
}

TEST(Campaign, InequalityEqualityTriangleOracleSuitesPass) {
    for (auto s : {Suite::Inequality, Suite::Equality, Suite::Triangle, Suite::Oracle}) {
        const auto r = run_campaign(small(s));
        EXPECT_TRUE(r.passed()) << to_string(s) << ": " << r.violations.size() << " violations, first "
                                << (r.violations.empty() ? "" : r.violations[0].check);
    }
}

TEST(Campaign, InvarianceViolationsNeedTwoInteriorPoints) {
    const auto r = check_invariance_suite(small(Suite::Invariance));
    for (const auto& v : r.violations) {
        ASSERT_TRUE(v.check == "invariance/words" || v.check == "invariance/inversion_identity" ||
                    v.check == "invariance/reduction_cross_ratio")
            << v.check;
        // Every recorded violation involves at least two interior points.
        int interior = 0;
        for (const auto& p : v.inputs.points)
            interior += p.is_interior();
        EXPECT_GE(interior, 2) << v.check << " #" << v.index;
    }
    EXPECT_EQ(r.find_check("invariance/unit_sphere")->violations, 0u);
    EXPECT_EQ(r.find_check("invariance/reduction_distances")->violations, 0u);
}

TEST(Campaign, DeterministicAcrossThreadCounts) {
    const auto one = report_to_json(run_campaign(small(Suite::All, 1)));
    const auto four = report_to_json(run_campaign(small(Suite::All, 4)));
    EXPECT_EQ(without_elapsed(one), without_elapsed(four));
    EXPECT_EQ(report_to_csv(run_campaign(small(Suite::Triangle, 1))),
              report_to_csv(run_campaign(small(Suite::Triangle, 3))));
}

TEST(Campaign, SeedChangesSamples) {
    auto a = small(Suite::Inequality);
    auto b = a;
    b.seed = 2;
    EXPECT_NE(report_to_csv(run_campaign(a)), report_to_csv(run_campaign(b)));
}

TEST(Report, JsonSchema) {
    const auto r = run_campaign(small(Suite::Invariance));
    const auto j = nlohmann::ordered_json::parse(report_to_json(r));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "seed", "samples", "tolerance", "violations", "max_slack",
                                              "min_slack", "rejections", "elapsed_ms", "checks"}));
    EXPECT_EQ(j["suite"], "invariance");
    ASSERT_FALSE(j["violations"].empty());
    const auto& v = j["violations"][0];
    EXPECT_TRUE(v.contains("inputs"));
    EXPECT_TRUE(v.contains("values"));
    EXPECT_TRUE(v.contains("slack"));
}

TEST(Report, CsvOneRowPerSample) {
    const auto r = run_campaign(small(Suite::Oracle));
    const auto csv = report_to_csv(r);
    EXPECT_EQ(csv.rfind("check,index,x1,x2,slack_lo,slack_hi,violated\n", 0), 0u);
    std::size_t rows = 0;
    for (const auto& c : r.checks)
        rows += c.samples;
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rows + 1);
}

TEST(Replay, RecordedViolationStillViolates) {
    const auto cfg = small(Suite::Invariance);
    const auto r = run_campaign(cfg);
    ASSERT_FALSE(r.violations.empty());
    for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 20); ++i)
        EXPECT_TRUE(replay_violation(r.violations[i], cfg));
}
