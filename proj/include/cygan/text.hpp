#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cygan/core.hpp"
#include "cygan/rcircle.hpp"

namespace cygan {

/// Coordinates above this magnitude are rejected when parsing.
inline constexpr double kMaxCoordinate = 1e100;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);
std::string format_ext_real(const ExtReal& x);

/// `inf`, or `zre,zim,v,u` with no spaces.
std::string format_point(const ClosurePoint& p);
ClosurePoint parse_point(std::string_view text);

/// Semicolon-separated `T:re,im,v` | `R:theta` | `D:delta` | `J` | `I` | `Iu`.
std::string format_word(const GeneratorWord& w);
GeneratorWord parse_word(std::string_view text);

std::string format_param(const CircleParam& t);
/// Comma-separated list of reals and `inf`.
std::vector<CircleParam> parse_params(std::string_view text);

/// Strict decimal literal; throws ParseError.
double parse_double(std::string_view text);

} // namespace cygan
