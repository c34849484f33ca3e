#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stackprod {

// Exact rational number. Every game quantity (rates, quantities, budgets,
// allocations, values) is carried as a Ratio; nothing is ever rounded.
using Ratio = mpq_class;

// Accepts integers ("4", "-3"), fractions ("9/10"), and decimals with an
// optional exponent ("0.9", "1.75", "2.5e-3"). Decimals convert exactly.
// Throws Error(kParse) on malformed input or a zero denominator.
Ratio parse_ratio(std::string_view text);

// Lowest-terms "n/d", or "n" when the denominator is 1.
std::string format_ratio(const Ratio& value);

// Decimal rendering rounded half away from zero to `digits` places.
// Presentation only.
std::string format_decimal(const Ratio& value, int digits = 4);

// Comma-separated list of rationals, e.g. "0,7/10,3/10,0,4". Whitespace
// around entries is ignored.
std::vector<Ratio> parse_ratio_list(std::string_view csv);
std::string format_ratio_list(std::span<const Ratio> values);

double to_double(const Ratio& value);

// Exact three-way comparison of lhs and rhs. The doubles are approximations
// of the two values (to_double) and settle the comparison without touching
// the rationals whenever they are far enough apart.
int compare_hinted(const Ratio& lhs, double lhs_hint, const Ratio& rhs, double rhs_hint);

}  // namespace stackprod
