#include "zigzag/common/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "zigzag/common/error.hpp"

namespace zigzag {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<double> parse_sweep(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 3) throw InvalidInput("sweep must look like min:max:steps, got '" + text + "'");
  double lo, hi;
  long n;
  try {
    std::size_t pos = 0;
    lo = std::stod(parts[0], &pos);
    if (pos != parts[0].size()) throw std::invalid_argument("");
    hi = std::stod(parts[1], &pos);
    if (pos != parts[1].size()) throw std::invalid_argument("");
    n = std::stol(parts[2], &pos);
    if (pos != parts[2].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse sweep '" + text + "'");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidInput("sweep bounds must be finite: '" + text + "'");
  if (n < 1) throw InvalidInput("sweep needs at least one step: '" + text + "'");
  if (n == 1) {
    if (lo != hi) throw InvalidInput("single-step sweep needs min == max: '" + text + "'");
    return {lo};
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

}  // namespace zigzag
