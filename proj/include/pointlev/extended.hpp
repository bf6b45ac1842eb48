#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace pointlev {

// Coupling parameters live on the extended real line: any finite double, or a
// single point at infinity (the decoupled endpoint of the parameter family).
// We reuse IEEE infinity for it; "inf" and "-inf" denote the same endpoint.

inline constexpr double ext_inf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x); }

inline std::optional<double> parse_ext(std::string_view s) {
    if (s == "inf" || s == "+inf" || s == "-inf" || s == "infinity")
        return ext_inf;
    try {
        size_t pos = 0;
        std::string tmp(s);
        double v = std::stod(tmp, &pos);
        if (pos != tmp.size()) return std::nullopt;
        if (std::isnan(v)) return std::nullopt;
        return std::isinf(v) ? ext_inf : v;
    } catch (...) {
        return std::nullopt;
    }
}

inline std::string format_ext(double x) {
    if (std::isinf(x)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace pointlev
