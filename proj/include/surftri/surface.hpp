#pragma once

#include <string>
#include <string_view>

namespace surftri {

// S_g when orientable (genus = handles), N_g otherwise (genus = crosscaps).
struct Surface {
  bool orientable = true;
  int genus = 0;

  static Surface sphere() { return {true, 0}; }
  static Surface S(int g) { return {true, g}; }
  static Surface N(int g) { return {false, g}; }

  bool operator==(const Surface&) const = default;
  auto operator<=>(const Surface&) const = default;
};

bool is_valid(Surface s);
int euler_characteristic(Surface s);
int euler_genus(Surface s);

// Fewest vertices of any triangulation of s.
int v_min(Surface s);
// Vertex count of the explicit large irreducible construction; S_0 rejected.
int v_max_lower_bound(Surface s);

// The surface with the given Euler genus and orientability, if one exists.
bool surface_from_euler_genus(int eg, bool orientable, Surface* out);

std::string to_string(Surface s);
Surface parse_surface(std::string_view name);  // "S2", "N3"; throws Errc::Parse

}  // namespace surftri
