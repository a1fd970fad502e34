#pragma once

#include <cstdio>
#include <string>

namespace prodset {

// Reals in reports and serialized certificates: 17 significant digits,
// '.' decimal separator, enough to round-trip a double.
inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace prodset
