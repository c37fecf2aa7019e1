#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "surftri/triangulation.hpp"

namespace fixtures {

using surftri::Face;
using surftri::Triangulation;

inline Triangulation octahedron() {
  // Opposite pairs 0-5, 1-3, 2-4.
  return Triangulation::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
                                       {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 1, 4}});
}

inline Triangulation bipyramid() {
  return Triangulation::from_faces(5, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}});
}

inline Triangulation icosahedron() {
  // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  std::vector<Face> f;
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
    f.push_back({0, u, un});
    f.push_back({u, un, l});
    f.push_back({un, l, ln});
    f.push_back({11, l, ln});
  }
  return Triangulation::from_faces(12, f);
}

// K_6 on the projective plane: the hemi-icosahedron.
inline Triangulation k6_projective() {
  return Triangulation::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline Triangulation relabeled(const Triangulation& t, unsigned seed) {
  std::vector<int> p(t.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Face> faces;
  for (auto& f : t.faces()) faces.push_back({p[f[0]], p[f[1]], p[f[2]]});
  return Triangulation::from_faces(t.vertex_count(), faces);
}

}  // namespace fixtures
