#pragma once

namespace clarkit {

// Enumeration limits, overridable through CLAR_KIT_CAPS="vertices:hexagons".
struct Caps {
  int matching_vertices = 60;
  int enumeration_hexagons = 8;
};

// Reads CLAR_KIT_CAPS from the environment; defaults when unset. Throws
// InvalidArgumentError on a malformed value.
Caps caps_from_env();

}  // namespace clarkit
