// Number formatting helpers shared by the serializers.
#pragma once

#include <string>

namespace ascf {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Label form for swept values: integral values keep one decimal place
// ("1.0", "2.0"); everything else falls back to format_double.
std::string format_value_label(double value);

}  // namespace ascf
