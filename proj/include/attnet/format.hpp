#pragma once

#include <charconv>
#include <string>

namespace attnet {

// Shortest decimal form that round-trips the exact double; locale-free,
// so repeated runs emit byte-identical files.
inline std::string format_double(double value) {
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

}  // namespace attnet
