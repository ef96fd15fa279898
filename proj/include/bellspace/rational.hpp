// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bellspace {

/// Exact rational scalar. All probability-measure arithmetic in this library
/// is carried out in Rat; floating point only appears where trigonometry does.
using Rat = mpq_class;

/// Canonicalized rational from an integer pair.
Rat rat(long num, long den = 1);

/// Exact conversion of a double (every finite double is a dyadic rational).
Rat rat_exact(double x);

/// Nearest rational with the given denominator, i.e. round(x*den)/den.
/// Used when float-valued tables enter exact solvers.
Rat rationalize(double x, long den = 1000000000L);

double to_double(const Rat& q);

/// "p/q" form, canonical sign on the numerator, denominator always printed.
std::string rat_string(const Rat& q);

/// Shortest terminating decimal if one exists with <= 9 fractional digits,
/// otherwise "p/q". Used for angle labels and CSV cells.
std::string decimal_or_ratio(const Rat& q);

/// Accepts "p/q", integers, and plain decimals ("0.25", "-22.5").
Rat parse_rat(std::string_view text);

} // namespace bellspace
