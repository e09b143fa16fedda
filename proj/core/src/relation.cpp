#include "cherednik/relation.hpp"

#include "cherednik/error.hpp"

namespace cherednik {

Relation parse_relation(std::string_view s) {
  if (s == "none") return Relation::none;
  if (s == "unit") return Relation::unit;
  if (s == "main") return Relation::main;
  throw UsageError("unknown relation '" + std::string(s) + "' (expected none, unit or main)");
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::none: return "none";
    case Relation::unit: return "unit";
    case Relation::main: return "main";
  }
  return "none";
}

}  // namespace cherednik
