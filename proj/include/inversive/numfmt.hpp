#pragma once

#include <string>

namespace inversive {

/// Shortest decimal that round-trips to the same double (never more than
/// 17 significant digits). Negative zero prints as "0"; NaN and infinities
/// print as "nan", "inf", "-inf".
std::string format_double(double v);

}  // namespace inversive
