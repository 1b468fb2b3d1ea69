#include "cygan/text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "overloaded.hpp"

namespace cygan {
namespace {

using detail::overloaded;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

Error parse_error(std::string_view what, std::string_view text) {
    return Error(ErrorKind::Parse, std::string(what) + ": '" + std::string(text) + "'");
}

} // namespace

std::string format_double(double x) {
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (x == 0.0)
        return "0";
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc())
        throw Error(ErrorKind::Numeric, "cannot format double");
    return std::string(buf.data(), end);
}

std::string format_ext_real(const ExtReal& x) {
    return x.is_infinite() ? "inf" : format_double(x.value());
}

double parse_double(std::string_view text) {
    text = trim(text);
    if (text.empty())
        throw parse_error("empty number", text);
    if (text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw parse_error("not a decimal literal", text);
    if (!std::isfinite(value))
        throw parse_error("non-finite value", text);
    if (std::abs(value) > kMaxCoordinate)
        throw parse_error("magnitude above 1e100", text);
    return value;
}

std::string format_point(const ClosurePoint& p) {
    if (p.is_infinity())
        return "inf";
    const auto& c = p.coords();
    return format_double(c.zeta.real()) + "," + format_double(c.zeta.imag()) + "," + format_double(c.v) + "," +
           format_double(c.u);
}

ClosurePoint parse_point(std::string_view text) {
    if (trim(text) == "inf")
        return ClosurePoint::infinity();
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw parse_error("expected `inf` or four comma-separated numbers", text);
    std::array<double, 4> c{};
    for (std::size_t i = 0; i < 4; ++i)
        c[i] = parse_double(parts[i]);
    if (c[3] < 0.0)
        throw parse_error("height u must be nonnegative", text);
    return ClosurePoint::finite(c[0], c[1], c[2], c[3]);
}

std::string format_word(const GeneratorWord& w) {
    std::string out;
    for (const auto& g : w.generators) {
        if (!out.empty())
            out += ';';
        out += std::visit(overloaded{
                              [](const gen::Translation& t) {
                                  return "T:" + format_double(t.zeta.real()) + "," + format_double(t.zeta.imag()) +
                                         "," + format_double(t.v);
                              },
                              [](const gen::Rotation& r) { return "R:" + format_double(r.theta); },
                              [](const gen::Dilation& d) { return "D:" + format_double(d.delta); },
                              [](const gen::Conjugation&) { return std::string("J"); },
                              [](const gen::InversionClosure&) { return std::string("I"); },
                              [](const gen::InversionHoro&) { return std::string("Iu"); },
                          },
                          g);
    }
    return out;
}

GeneratorWord parse_word(std::string_view text) {
    GeneratorWord w;
    if (trim(text).empty())
        return w;
    for (auto item : split(text, ';')) {
        item = trim(item);
        if (item == "J") {
            w.generators.emplace_back(gen::Conjugation{});
        } else if (item == "I") {
            w.generators.emplace_back(gen::InversionClosure{});
        } else if (item == "Iu") {
            w.generators.emplace_back(gen::InversionHoro{});
        } else if (item.starts_with("T:")) {
            const auto args = split(item.substr(2), ',');
            if (args.size() != 3)
                throw parse_error("translation takes re,im,v", item);
            w.generators.emplace_back(
                gen::Translation{Complex(parse_double(args[0]), parse_double(args[1])), parse_double(args[2])});
        } else if (item.starts_with("R:")) {
            w.generators.emplace_back(gen::Rotation{parse_double(item.substr(2))});
        } else if (item.starts_with("D:")) {
            const double delta = parse_double(item.substr(2));
            if (!(delta > 0.0))
                throw parse_error("dilation factor must be positive", item);
            w.generators.emplace_back(gen::Dilation{delta});
        } else {
            throw parse_error("unknown generator", item);
        }
    }
    return w;
}

std::string format_param(const CircleParam& t) {
    return t.is_infinity() ? "inf" : format_double(*t.x);
}

std::vector<CircleParam> parse_params(std::string_view text) {
    std::vector<CircleParam> params;
    for (auto item : split(text, ',')) {
        item = trim(item);
        if (item == "inf")
            params.push_back(CircleParam::infinity());
        else
            params.push_back(CircleParam::at(parse_double(item)));
    }
    return params;
}

} // namespace cygan
