#include "parse.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>

namespace su11kit::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_decimal(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  if (parse_decimal(s, value)) return value;

  using Fn = double (*)(double);
  static const std::array<std::pair<std::string_view, Fn>, 7> functions{{
      {"cosh", [](double x) { return std::cosh(x); }},
      {"sinh", [](double x) { return std::sinh(x); }},
      {"tanh", [](double x) { return std::tanh(x); }},
      {"sqrt", [](double x) { return std::sqrt(x); }},
      {"cos", [](double x) { return std::cos(x); }},
      {"sin", [](double x) { return std::sin(x); }},
      {"exp", [](double x) { return std::exp(x); }},
  }};
  for (const auto& [name, fn] : functions) {
    if (!s.starts_with(name)) continue;
    std::string_view arg = s.substr(name.size());
    if (arg.starts_with('(') && arg.ends_with(')')) arg = arg.substr(1, arg.size() - 2);
    if (parse_decimal(arg, value)) {
      const double result = fn(value);
      if (std::isfinite(result)) return result;
    }
    break;
  }
  throw UsageError("cannot parse a real number from '" + std::string(text) + "'");
}

std::pair<std::string, std::string> split_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw UsageError("expected two comma-separated values in '" + std::string(text) + "'");
  }
  return {std::string(trim(text.substr(0, comma))), std::string(trim(text.substr(comma + 1)))};
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.find(',') != std::string_view::npos) {
    const auto [re, im] = split_pair(s);
    return {parse_real(re), parse_real(im)};
  }
  if (!s.ends_with('i')) return {parse_real(s), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t j = body.size(); j-- > 1;) {
    if ((body[j] == '+' || body[j] == '-') && body[j - 1] != 'e' && body[j - 1] != 'E') {
      split = j;
      break;
    }
  }
  double re = 0.0;
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re = parse_real(body.substr(0, split));
    im_text = body.substr(split);
  }
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else if (!parse_decimal(im_text, im)) {
    throw UsageError("cannot parse a complex number from '" + std::string(text) + "'");
  }
  return {re, im};
}

DiskStateSpec parse_disk_state(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.starts_with("n:")) {
    const std::string_view num = s.substr(2);
    long long n = -1;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size() || n < 0) {
      throw UsageError("number state must be n:<nonnegative integer>");
    }
    return NumberStateSpec{static_cast<Index>(n)};
  }
  if (s.starts_with("zeta:")) return CoherentStateSpec{parse_complex(s.substr(5))};
  throw UsageError("state must be n:<K> or zeta:<complex>, got '" + std::string(text) + "'");
}

}  // namespace su11kit::cli
