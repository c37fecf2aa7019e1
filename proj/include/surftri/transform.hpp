#pragma once

#include <array>
#include <vector>

#include "surftri/triangulation.hpp"

namespace surftri {

// Splitting a along ab and ac: the neighbors in `arc` (the part of a's link
// strictly between b and c on one side) move to the new vertex a'.
struct SplitSite {
  int a = 0;
  int b = 0;
  int c = 0;
  std::vector<int> arc;
  bool operator==(const SplitSite&) const = default;
};

// f1[i] is glued to f2[m[i]].
using Matching = std::array<int, 3>;
// The six matchings in lexicographic order.
const std::array<Matching, 6>& all_matchings();

bool is_contractible(const Triangulation& t, Edge e);  // throws NO_SUCH_EDGE
Triangulation contract(const Triangulation& t, Edge e);  // keeps the smaller label
bool is_irreducible(const Triangulation& t);
Triangulation contract_to_irreducible(const Triangulation& t);

std::vector<SplitSite> enumerate_splits(const Triangulation& t, int v);
Triangulation split_vertex(const Triangulation& t, const SplitSite& s);  // new vertex gets label n

bool is_flippable(const Triangulation& t, Edge e);
Triangulation flip(const Triangulation& t, Edge e);

// Removes f1 from t1 and f2 from t2 and glues the holes. t1 keeps its labels;
// the other vertices of t2 follow in increasing order.
Triangulation join_at_faces(const Triangulation& t1, const Face& f1, const Triangulation& t2,
                            const Face& f2, const Matching& m);

// Handle (orientable result) or crosshandle (nonorientable result): n drops
// by 3, Euler genus grows by 2. Faces sharing a vertex are rejected.
Triangulation self_join_at_faces(const Triangulation& t, const Face& f1, const Face& f2,
                                 const Matching& m, bool want_orientable);

// Removes a degree-6 vertex and identifies opposite vertices of the hexagon.
Triangulation crosscap_identify(const Triangulation& t, int v);

// Removes the faces p r[i] r[i+1] and p r[j] r[j+1] around p (r = rotation of
// p) and identifies r[j] with r[i] and r[j+1] with r[i+1]: a crosscap grown at
// p, n drops by 2, Euler genus grows by 1. Equals crosscap_identify applied to
// the degree-6 vertex of the sphere-like splitting pattern around p.
Triangulation crosscap_at_vertex(const Triangulation& t, int p, int i, int j);

}  // namespace surftri
