#include "stackprod/ratio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "stackprod/error.hpp"

namespace stackprod {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw Error(ErrorCode::kParse,
              "invalid rational '" + std::string(text) + "': " + why);
}

mpz_class power_of_ten(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

constexpr long kMaxExponent = 4096;

}  // namespace

Ratio parse_ratio(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.empty()) fail(raw, "empty");

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Ratio result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(body.substr(0, slash));
    std::string_view den = trim(body.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) fail(raw, "expected n/d");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(raw, "zero denominator");
    result = Ratio(n, d);
    result.canonicalize();
  } else {
    long exponent = 0;
    std::string_view mantissa = body;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = body.substr(e + 1);
      mantissa = body.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) fail(raw, "bad exponent");
      exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
      if (exponent > kMaxExponent) fail(raw, "exponent out of range");
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) fail(raw, "no digits");
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      fail(raw, "unexpected character");
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class n(digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      result = Ratio(n, power_of_ten(static_cast<unsigned long>(scale)));
    } else {
      result = Ratio(n * power_of_ten(static_cast<unsigned long>(-scale)));
    }
    result.canonicalize();
  }
  if (negative) result = -result;
  return result;
}

std::string format_ratio(const Ratio& value) {
  Ratio reduced(value);
  reduced.canonicalize();
  return reduced.get_str(10);
}

std::string format_decimal(const Ratio& value, int digits) {
  if (digits < 0) digits = 0;
  const mpz_class scale = power_of_ten(static_cast<unsigned long>(digits));
  mpz_class magnitude = abs(value.get_num()) * scale;
  // Round half away from zero: floor((2 m + d) / (2 d)).
  mpz_class twice_den = 2 * value.get_den();
  mpz_class rounded = (2 * magnitude + value.get_den()) / twice_den;

  std::string text = rounded.get_str(10);
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits))
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && rounded != 0) text.insert(0, "-");
  return text;
}

std::vector<Ratio> parse_ratio_list(std::string_view csv) {
  std::vector<Ratio> values;
  if (trim(csv).empty()) return values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    values.push_back(parse_ratio(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string format_ratio_list(std::span<const Ratio> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_ratio(values[i]);
  }
  return out;
}

double to_double(const Ratio& value) { return value.get_d(); }

int compare_hinted(const Ratio& lhs, double lhs_hint, const Ratio& rhs, double rhs_hint) {
  // get_d truncates, so each hint is within a relative 2^-52 of its value.
  const double scale = std::max(std::fabs(lhs_hint), std::fabs(rhs_hint));
  if (scale < 1e280 && scale > 1e-280 &&
      std::fabs(lhs_hint - rhs_hint) > scale * 1e-12)
    return lhs_hint < rhs_hint ? -1 : 1;
  if (mpq_equal(lhs.get_mpq_t(), rhs.get_mpq_t())) return 0;
  return cmp(lhs, rhs);
}

}  // namespace stackprod
