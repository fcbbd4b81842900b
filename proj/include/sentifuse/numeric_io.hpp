#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "sentifuse/error.hpp"

namespace sentifuse {

// Shortest decimal form that round-trips the exact double. Used everywhere
// byte-determinism or bit-exact reload matters (artifacts, curve files,
// machine-readable summaries).
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& context) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw Error(ErrorCategory::data, context + ": bad numeric value '" + std::string(text) + "'");
    return value;
}

inline long long parse_int(std::string_view text, const std::string& context) {
    long long value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw Error(ErrorCategory::data, context + ": bad integer value '" + std::string(text) + "'");
    return value;
}

}  // namespace sentifuse
