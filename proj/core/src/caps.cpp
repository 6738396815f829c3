#include "clarkit/caps.hpp"

#include <cstdlib>
#include <string>

#include "clarkit/errors.hpp"

namespace clarkit {

Caps caps_from_env() {
  Caps caps;
  const char* raw = std::getenv("CLAR_KIT_CAPS");
  if (!raw) return caps;
  std::string value(raw);
  auto colon = value.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    size_t used_a = 0;
    size_t used_b = 0;
    int vertices = std::stoi(value.substr(0, colon), &used_a);
    int hexagons = std::stoi(value.substr(colon + 1), &used_b);
    if (used_a != colon || used_b != value.size() - colon - 1 || vertices < 1 ||
        hexagons < 1)
      throw std::invalid_argument("bad number");
    caps.matching_vertices = vertices;
    caps.enumeration_hexagons = hexagons;
  } catch (const std::exception&) {
    throw InvalidArgumentError("CLAR_KIT_CAPS must look like \"60:8\", got \"" + value +
                               "\"");
  }
  return caps;
}

}  // namespace clarkit
