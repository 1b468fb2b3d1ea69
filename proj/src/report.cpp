#include <cmath>
#include <sstream>

#include "json.hpp"

#include "cygan/harness.hpp"
#include "cygan/text.hpp"

namespace cygan {
namespace {

using json = nlohmann::ordered_json;

// Non-finite values have no JSON literal; they are written as strings in the
// same spelling the text format uses.
json number(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return format_double(x);
    return x;
}

std::string cell(double x) {
    return std::isnan(x) ? "nan" : format_double(x);
}

json inputs_json(const SampleInput& in) {
    json j = json::object();
    if (!in.points.empty()) {
        json pts = json::array();
        for (const auto& p : in.points)
            pts.push_back(format_point(p));
        j["points"] = std::move(pts);
    }
    if (in.word)
        j["word"] = format_word(*in.word);
    if (in.height)
        j["height"] = number(*in.height);
    if (!in.params.empty()) {
        json ps = json::array();
        for (const auto& t : in.params)
            ps.push_back(format_param(t));
        j["params"] = std::move(ps);
    }
    j["variant"] = in.variant;
    return j;
}

} // namespace

std::string report_to_json(const CampaignReport& report) {
    json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["tolerance"] = report.tolerance;
    json violations = json::array();
    for (const auto& v : report.violations) {
        json values = json::object();
        for (const auto& [k, x] : v.values)
            values[k] = number(x);
        violations.push_back({{"check", v.check},
                              {"index", v.index},
                              {"inputs", inputs_json(v.inputs)},
                              {"values", std::move(values)},
                              {"slack", number(v.slack)},
                              {"message", v.message}});
    }
    j["violations"] = std::move(violations);
    j["max_slack"] = number(report.max_slack);
    j["min_slack"] = number(report.min_slack);
    j["rejections"] = report.rejections;
    j["elapsed_ms"] = report.elapsed_ms;
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"slack", c.slack_meaning},
                          {"samples", c.samples},
                          {"violations", c.violations},
                          {"rejections", c.rejections},
                          {"min_slack", number(c.min_slack)},
                          {"max_slack", number(c.max_slack)}});
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string report_to_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "check,index,x1,x2,slack_lo,slack_hi,violated\n";
    for (const auto& r : report.rows) {
        out << report.checks.at(r.check).name << ',' << r.index << ',' << (r.x1 ? cell(*r.x1) : "") << ','
            << (r.x2 ? cell(*r.x2) : "") << ',' << cell(r.slack_lo) << ',' << cell(r.slack_hi) << ','
            << (r.violated ? 1 : 0) << '\n';
    }
    return out.str();
}

} // namespace cygan
