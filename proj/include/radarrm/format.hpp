#pragma once

#include <string>

namespace radarrm {

/// Shortest decimal string that round-trips the double (via std::to_chars);
/// identical inputs always produce identical bytes.
std::string format_double(double value);

}  // namespace radarrm
