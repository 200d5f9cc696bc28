#pragma once

#include <charconv>
#include <string>

namespace lowd {

// Shortest round-trip decimal form; deterministic across runs.
inline std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace lowd
