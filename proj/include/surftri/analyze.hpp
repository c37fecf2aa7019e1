#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surftri/cycletop.hpp"
#include "surftri/generate.hpp"
#include "surftri/transform.hpp"
#include "surftri/triangulation.hpp"

namespace surftri {

std::vector<Edge> contractible_edges(const Triangulation& t);
// Reducible, with every contractible edge on one face.
bool is_almost_irreducible(const Triangulation& t);

// Irreducible, and every triangulation reachable by diagonal flips is too.
bool is_pseudo_minimal(const Triangulation& t);
// Partition of the input (as indices) under flip reachability; classes are
// ordered by their first member. Throws MIXED_INPUT.
std::vector<std::vector<size_t>> flip_equivalence_classes(const std::vector<Triangulation>& ts);

// K_7 on the torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
Triangulation k7_torus();
// The 7-vertex irreducible triangulation of N_1 (taken from generation).
Triangulation build_M();
// The 10-vertex irreducible triangulation of S_1 (taken from generation).
Triangulation build_torus_M();

// A sphere triangulation with some faces marked for removal.
struct BorderedBase {
  Triangulation completed;
  std::vector<Face> removed;
  int vertex_count() const { return completed.vertex_count(); }
};

BorderedBase build_base(int g);  // g >= 3, else BAD_G
// Every edge of the completed sphere lies on a removed face.
bool every_edge_on_removed_face(const BorderedBase& b);
// Every edge lies on a removed face or on at least three 3-cycles.
bool every_edge_removed_or_rigid(const BorderedBase& b);

// Joins at the first face of each side with the least matching that gives a
// valid triangulation.
Triangulation join_first_faces(const Triangulation& a, const Face& fa, const Triangulation& b, const Face& fb);

// Irreducible triangulation of s with v_max_lower_bound(s) vertices: two
// copies of M for N_2 and S_2, a base B_g with g copies of M for g >= 3.
Triangulation build_large_irreducible(Surface s);

// M joined with K_7: an N_3 triangulation whose join curve is a 3-cycle.
Triangulation n3_counterexample();

// (vertices, width) -> count; width 0 stands for no NSC.
std::map<std::pair<int, int>, int> edge_width_histogram(const std::vector<Triangulation>& ts);

enum class Theorem {
  NscExists,                  // some NSC
  NscEveryGenusSplit,         // an NSC with sides of Euler genus h and g-h, each h
  NonseparatingTypes,         // every nonseparating type the surface admits
  NonseparatingThreeCyclesAtVertices,  // at least two per vertex
};

struct TheoremReport {
  Theorem theorem;
  size_t checked = 0;
  std::vector<size_t> violators;
  std::vector<std::string> notes;  // one line per violator
  bool ok() const { return violators.empty(); }
};

const char* theorem_name(Theorem th);
bool parse_theorem(const std::string& name, Theorem* out);
TheoremReport verify_theorems(const std::vector<Triangulation>& ts, Theorem th);

// Nonseparating (sidedness, leaving) pairs that fit the surface.
std::vector<std::pair<Sidedness, Leaving>> admissible_nonseparating_types(Surface s);

}  // namespace surftri
