#include "ascf/format.hpp"

#include <charconv>
#include <cmath>

namespace ascf {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_value_label(double value) {
    if (std::isfinite(value) && value == std::floor(value) &&
        std::abs(value) < 1e15) {
        return format_double(value) + ".0";
    }
    return format_double(value);
}

}  // namespace ascf
