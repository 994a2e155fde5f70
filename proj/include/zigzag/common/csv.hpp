#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zigzag {

// %.17g, with NaN/inf spelled "nan", "inf", "-inf" on every platform.
std::string format_double(double v);

std::string csv_join(const std::vector<std::string>& fields);

// Parses "a:b:n" into n equally spaced values from a to b inclusive.
std::vector<double> parse_sweep(const std::string& text);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace zigzag
