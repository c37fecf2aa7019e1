#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "surftri/canon.hpp"
#include "surftri/surface.hpp"
#include "surftri/triangulation.hpp"

namespace surftri {

Triangulation tetrahedron();

// Largest vertex count of an irreducible triangulation, for the surfaces where
// it is known; 0 otherwise.
int default_cap(Surface s);

enum class GrowPath { Handle, Crosscap };

struct GrowUnit {
  GrowPath path;
  Surface seed;
  std::string id() const;  // "handle:S0", "crosscap:N1"
};

// The seed surfaces a target is grown from: Euler genus two less through a
// handle or crosshandle, and for nonorientable targets Euler genus one less
// through a crosscap.
std::vector<GrowUnit> grow_units(Surface target);

// Whether the splitting closures a job needs stay small enough for a desk run.
bool is_long_run(Surface target, int cap);

// All triangulations reachable from the seeds by vertex splitting with at most
// max_vertices vertices, one per equivalence class, in canonical labeling,
// visited level by level in increasing vertex count.
std::vector<Triangulation> splitting_closure(const Triangulation& t, int max_vertices);
void for_each_in_closure(const std::vector<Triangulation>& seeds, int max_vertices,
                         const std::function<void(const Triangulation&)>& visit);

// Irreducible triangulations of `target` with at most cap vertices obtained by
// one self-join on the splitting closures (to cap + 3) of the seeds.
std::vector<Triangulation> grow_handle_or_crosshandle(const std::vector<Triangulation>& seeds, Surface target,
                                                      int cap, int workers = 1);

// Crosscap growth. Applies crosscap_at_vertex over closures to cap + 2, which
// yields the same set as crosscap_identify at degree-6 vertices over closures
// to cap + 4 (grow_crosscap_by_hexagon) at a fraction of the cost.
std::vector<Triangulation> grow_crosscap(const std::vector<Triangulation>& seeds, Surface target, int cap,
                                         int workers = 1);
std::vector<Triangulation> grow_crosscap_by_hexagon(const std::vector<Triangulation>& seeds, Surface target,
                                                    int cap);

struct GenerationJob {
  Surface target;
  int cap = 0;  // 0: default_cap(target)
  std::map<Surface, std::vector<Triangulation>> seeds;  // S_0 defaults to {K_4}
  std::string checkpoint_dir;  // empty: no checkpointing
  int workers = 1;
  std::function<void(const std::string&)> progress;
};

// Union over grow_units, deduped, canonical records sorted lexicographically.
// Throws INCOMPLETE_SEEDS when a required seed set is missing.
std::vector<Triangulation> generate_irreducible(const GenerationJob& job);

// Independent census by backtracking over face sets; canonical, sorted.
std::vector<Triangulation> brute_force_triangulations(Surface s, int n);

// Cuts t along each nonseparating 3-cycle, caps the holes (two triangles for
// a two-sided cut, a cone over the hexagon for a one-sided one) and contracts
// to an irreducible triangulation. Deduped, canonical, sorted.
std::vector<Triangulation> reduce_genus(const Triangulation& t);

// Sorts by record text and keeps the first of each equivalence class; pass
// canonical forms to get a canonical set.
std::vector<Triangulation> canonical_set(const std::vector<Triangulation>& ts);

std::map<int, int> vertex_histogram(const std::vector<Triangulation>& ts);

}  // namespace surftri
