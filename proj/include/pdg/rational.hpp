#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace pdg {

// Exact rational arithmetic for charge bookkeeping. All amounts that flow
// through the discharging engine are Rationals; no floating point anywhere.
using Rational = boost::rational<long long>;

/// Renders in lowest terms, always with an explicit denominator ("3/5", "1/1").
std::string to_string(const Rational& r);

/// Parses "p/q" (or a bare integer "p"). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

} // namespace pdg
