#include "surftri/surface.hpp"

#include <charconv>

#include "surftri/error.hpp"

namespace surftri {

bool is_valid(Surface s) {
  return s.genus >= 0 && (s.orientable || s.genus >= 1);
}

int euler_characteristic(Surface s) {
  return s.orientable ? 2 - 2 * s.genus : 2 - s.genus;
}

int euler_genus(Surface s) { return 2 - euler_characteristic(s); }

int v_min(Surface s) {
  // ceil((7 + sqrt(49 - 24 chi)) / 2) is the least k with 2k - 7 >= sqrt(D),
  // decided exactly in integers.
  const long long d = 49 - 24LL * euler_characteristic(s);
  long long k = 4;
  while (2 * k - 7 < 0 || (2 * k - 7) * (2 * k - 7) < d) ++k;
  // Heawood's bound fails for these three surfaces.
  if (s == Surface::N(2) || s == Surface::N(3) || s == Surface::S(2)) ++k;
  return static_cast<int>(k);
}

int v_max_lower_bound(Surface s) {
  if (!is_valid(s) || s.genus < 1)
    throw Error(Errc::UnsupportedSurface, "no large construction for " + to_string(s));
  return s.orientable ? 17 * s.genus / 2 : 11 * s.genus / 2;
}

bool surface_from_euler_genus(int eg, bool orientable, Surface* out) {
  if (eg < 0) return false;
  if (orientable) {
    if (eg % 2) return false;
    *out = Surface::S(eg / 2);
    return true;
  }
  if (eg < 1) return false;
  *out = Surface::N(eg);
  return true;
}

std::string to_string(Surface s) {
  return (s.orientable ? "S" : "N") + std::to_string(s.genus);
}

Surface parse_surface(std::string_view name) {
  Surface s;
  int g = -1;
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'N')) {
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), g);
    if (ec != std::errc() || p != name.data() + name.size()) g = -1;
  }
  s.orientable = !name.empty() && name[0] == 'S';
  s.genus = g;
  if (g < 0 || !is_valid(s))
    throw Error(Errc::Parse, "bad surface name '" + std::string(name) + "'");
  return s;
}

}  // namespace surftri
