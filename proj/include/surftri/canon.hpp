#pragma once

#include <string>
#include <vector>

#include "surftri/triangulation.hpp"

namespace surftri {

// Byte string, compared lexicographically. Equal codes iff the triangulations
// are equivalent (vertex bijection preserving edges and face cycles,
// reflections included).
//
// Layout: n as two bytes big-endian, then for each vertex in BFS order its
// neighbors' BFS labels (1-based) in rotation order followed by a 0 byte.
// Labels take one byte when n < 255 and two bytes big-endian otherwise.
// The BFS starts at a directed edge (u, w) and a sense; the first vertex is
// read from w in that sense, and every later vertex y (first reached from x)
// is read starting at x, in the sense that agrees with x's local orientation
// across edge xy. The code is the minimum over all starts where (deg u, deg w)
// is lexicographically least.
using CanonicalCode = std::string;

// Rotation system in compressed rows; nb[off[v]..off[v+1]) is v's link cycle.
struct RotationView {
  int n;
  const int* off;
  const int* nb;
};

CanonicalCode canonical_code(const Triangulation& t);
CanonicalCode canonical_code(const RotationView& r);

// old label -> canonical label (0-based) of the winning BFS.
std::vector<int> canonical_labeling(const Triangulation& t);
Triangulation canonical_form(const Triangulation& t);
std::string canonical_record(const Triangulation& t);

Triangulation decode_code(const CanonicalCode& code);

bool are_equivalent(const Triangulation& a, const Triangulation& b);

}  // namespace surftri
