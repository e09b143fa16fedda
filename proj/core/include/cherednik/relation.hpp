#pragma once

#include <string>
#include <string_view>

namespace cherednik {

/// Linear relation imposed on the Cherednik parameters.
///   unit: d*k1 + m(n-1)*k00 = -1
///   main: d*k1 + m(n-1)*k00 = -1 - m(n-1) - d
enum class Relation { none, unit, main };

Relation parse_relation(std::string_view s);
std::string to_string(Relation r);

}  // namespace cherednik
