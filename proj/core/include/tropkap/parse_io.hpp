#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tropkap/puiseux.hpp"
#include "tropkap/rational.hpp"
#include "tropkap/tropical.hpp"

namespace tropkap {

/// `[sign] digits [ "/" digits ]`, surrounding whitespace ignored.
/// Throws ParseError on bad syntax or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a series literal:
///
///   series   := [sign] term { sign term }
///   term     := coeff [ "*" monomial ] | monomial
///   monomial := "t" [ "^" exponent ]
///   coeff    := integer [ "/" positive-integer ]
///   exponent := [-]integer | "(" [-]integer "/" positive-integer ")"
///   sign     := "+" | "-" | U+2212
///
/// Whitespace is allowed between tokens. Errors carry the byte position
/// and what was expected there.
PuiseuxSeries parse_series(std::string_view text);

/// Canonical text, ascending exponents, e.g. "1 - t^2" or "-1/2*t^(1/3)".
/// Round-trips through `parse_series`.
std::string format_series(const PuiseuxSeries& s);

/// One row per line, whitespace-separated rationals; blank lines and lines
/// starting with '#' are skipped.
TropicalMatrix parse_tropical_matrix(std::string_view text);

/// One row per line, ';'-separated series literals; blank lines and lines
/// starting with '#' are skipped.
PuiseuxMatrix parse_puiseux_matrix(std::string_view text);

std::string format_tropical_matrix(const TropicalMatrix& m);
std::string format_puiseux_matrix(const PuiseuxMatrix& m);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

TropicalMatrix load_tropical_matrix(const std::filesystem::path& path);
PuiseuxMatrix load_puiseux_matrix(const std::filesystem::path& path);

}  // namespace tropkap
