#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace netsimp {

// Shortest decimal string that parses back to exactly the same double.
// Keeps report files both readable and lossless to re-ingest.
inline std::string format_double(double value) {
    char buf[40];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

}  // namespace netsimp
