#include "surftri/surftri.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "surftri/analyze.hpp"
#include "surftri/canon.hpp"
#include "surftri/cycletop.hpp"
#include "surftri/error.hpp"
#include "surftri/generate.hpp"
#include "surftri/transform.hpp"
#include "surftri/tri_file.hpp"

struct surftri_tri {
  surftri::Triangulation t;
};

struct surftri_set {
  std::vector<surftri::Triangulation> ts;
};

using namespace surftri;

namespace {

thread_local std::string last_error;

int status_of(Errc c) { return -(static_cast<int>(c) + 1); }

template <class F>
int guard(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SURFTRI_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SURFTRI_E_INTERNAL;
  }
}

int bad(const char* what) {
  last_error = what;
  return SURFTRI_E_INVALID_ARGUMENT;
}

Surface from_c(surftri_surface s) { return {s.orientable != 0, s.genus}; }
surftri_surface to_c(Surface s) { return {s.orientable ? 1 : 0, s.genus}; }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

surftri_tri* wrap(Triangulation t) { return new surftri_tri{std::move(t)}; }
surftri_set* wrap(std::vector<Triangulation> ts) { return new surftri_set{std::move(ts)}; }

int search_result(const CycleSearch& r, int* cycle, size_t* len) {
  if (len) *len = r.cycle.size();
  if (cycle)
    for (size_t i = 0; i < r.cycle.size(); ++i) cycle[i] = r.cycle[i];
  switch (r.status) {
    case SearchStatus::Found: return SURFTRI_OK;
    case SearchStatus::None: return SURFTRI_NONE;
    default: return SURFTRI_SEARCH_EXHAUSTED;
  }
}

// Seeds for a lower surface: a seed file, or a desk-scale generation.
class SeedSource {
 public:
  SeedSource(const surftri_generate_options& o) : opt_(o) {}

  const std::vector<Triangulation>& get(Surface s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    if (s == Surface::S(0)) return cache_[s] = {tetrahedron()};
    if (opt_.seed_dir) {
      auto path = std::filesystem::path(opt_.seed_dir) / (to_string(s) + ".tri");
      if (std::filesystem::exists(path)) return cache_[s] = read_tri_file(path.string());
    }
    const int cap = default_cap(s);
    if (cap == 0 || is_long_run(s, cap))
      throw Error(Errc::IncompleteSeeds, "no seed file for " + to_string(s) + " and generating it is a long run");
    return cache_[s] = run(s, cap, "");
  }

  std::vector<Triangulation> run(Surface target, int cap, const std::string& checkpoint) {
    GenerationJob job;
    job.target = target;
    job.cap = cap;
    job.checkpoint_dir = checkpoint;
    job.workers = opt_.jobs > 1 ? opt_.jobs : 1;
    if (opt_.progress) {
      auto fn = opt_.progress;
      void* user = opt_.progress_user;
      job.progress = [fn, user](const std::string& m) { fn(m.c_str(), user); };
    }
    for (auto& u : grow_units(target)) job.seeds[u.seed] = get(u.seed);
    return generate_irreducible(job);
  }

 private:
  const surftri_generate_options& opt_;
  std::map<Surface, std::vector<Triangulation>> cache_;
};

}  // namespace

extern "C" {

const char* surftri_last_error(void) { return last_error.c_str(); }

const char* surftri_status_name(int status) {
  switch (status) {
    case SURFTRI_OK: return "OK";
    case SURFTRI_NONE: return "NONE";
    case SURFTRI_SEARCH_EXHAUSTED: return "SEARCH_EXHAUSTED";
    case SURFTRI_E_INTERNAL: return "INTERNAL";
    default: break;
  }
  const int idx = -status - 1;
  if (idx >= 0 && idx <= static_cast<int>(Errc::UnsupportedSurface)) return errc_name(static_cast<Errc>(idx));
  return "UNKNOWN";
}

void surftri_string_free(char* s) { std::free(s); }

int surftri_surface_parse(const char* name, surftri_surface* out) {
  if (!name || !out) return bad("null argument");
  return guard([&] {
    *out = to_c(parse_surface(name));
    return SURFTRI_OK;
  });
}

int surftri_surface_name(surftri_surface s, char** out) {
  if (!out) return bad("null argument");
  return guard([&] {
    if (!is_valid(from_c(s))) throw Error(Errc::InvalidArgument, "invalid surface");
    *out = dup(to_string(from_c(s)));
    return SURFTRI_OK;
  });
}

int surftri_v_min(surftri_surface s, int* out) {
  if (!out) return bad("null argument");
  return guard([&] {
    if (!is_valid(from_c(s))) throw Error(Errc::InvalidArgument, "invalid surface");
    *out = v_min(from_c(s));
    return SURFTRI_OK;
  });
}

int surftri_v_max_lower_bound(surftri_surface s, int* out) {
  if (!out) return bad("null argument");
  return guard([&] {
    *out = v_max_lower_bound(from_c(s));
    return SURFTRI_OK;
  });
}

int surftri_tri_parse(const char* record, surftri_tri** out) {
  if (!record || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(parse_record(record));
    return SURFTRI_OK;
  });
}

int surftri_tri_from_faces(int n, const int* faces, size_t face_count, surftri_tri** out) {
  if (!faces || !out) return bad("null argument");
  return guard([&] {
    std::vector<Face> fs(face_count);
    for (size_t i = 0; i < face_count; ++i) fs[i] = {faces[3 * i], faces[3 * i + 1], faces[3 * i + 2]};
    *out = wrap(Triangulation::from_faces(n, std::move(fs)));
    return SURFTRI_OK;
  });
}

int surftri_tri_clone(const surftri_tri* t, surftri_tri** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(t->t);
    return SURFTRI_OK;
  });
}

void surftri_tri_free(surftri_tri* t) { delete t; }

int surftri_tri_record(const surftri_tri* t, char** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = dup(format_record(t->t));
    return SURFTRI_OK;
  });
}

int surftri_tri_vertex_count(const surftri_tri* t) { return t ? t->t.vertex_count() : 0; }
int surftri_tri_face_count(const surftri_tri* t) { return t ? t->t.face_count() : 0; }

int surftri_tri_faces(const surftri_tri* t, int* out) {
  if (!t || !out) return bad("null argument");
  size_t i = 0;
  for (auto& f : t->t.faces())
    for (int x : f) out[i++] = x;
  return SURFTRI_OK;
}

int surftri_tri_surface(const surftri_tri* t, surftri_surface* out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = to_c(surface_of(t->t));
    return SURFTRI_OK;
  });
}

int surftri_is_contractible(const surftri_tri* t, int u, int v, int* out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = is_contractible(t->t, make_edge(u, v)) ? 1 : 0;
    return SURFTRI_OK;
  });
}

int surftri_contract(const surftri_tri* t, int u, int v, surftri_tri** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(contract(t->t, make_edge(u, v)));
    return SURFTRI_OK;
  });
}

int surftri_is_irreducible(const surftri_tri* t, int* out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = is_irreducible(t->t) ? 1 : 0;
    return SURFTRI_OK;
  });
}

int surftri_contract_to_irreducible(const surftri_tri* t, surftri_tri** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(contract_to_irreducible(t->t));
    return SURFTRI_OK;
  });
}

int surftri_flip(const surftri_tri* t, int u, int v, surftri_tri** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(flip(t->t, make_edge(u, v)));
    return SURFTRI_OK;
  });
}

int surftri_is_pseudo_minimal(const surftri_tri* t, int* out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = is_pseudo_minimal(t->t) ? 1 : 0;
    return SURFTRI_OK;
  });
}

int surftri_is_almost_irreducible(const surftri_tri* t, int* out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = is_almost_irreducible(t->t) ? 1 : 0;
    return SURFTRI_OK;
  });
}

int surftri_canonical_form(const surftri_tri* t, surftri_tri** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(canonical_form(t->t));
    return SURFTRI_OK;
  });
}

int surftri_are_equivalent(const surftri_tri* a, const surftri_tri* b, int* out) {
  if (!a || !b || !out) return bad("null argument");
  return guard([&] {
    *out = are_equivalent(a->t, b->t) ? 1 : 0;
    return SURFTRI_OK;
  });
}

int surftri_classify_cycle(const surftri_tri* t, const int* cycle, size_t len, surftri_cycle_info* out) {
  if (!t || !cycle || !out) return bad("null argument");
  return guard([&] {
    auto cl = classify_cycle(t->t, Cycle(cycle, cycle + len));
    *out = {};
    out->separating = cl.separating;
    out->contractible = cl.contractible;
    out->one_sided = cl.sided == Sidedness::One;
    out->nonorientable_leaving = cl.leaving == Leaving::Nonorientable;
    out->component_count = static_cast<int>(cl.components.size());
    for (size_t i = 0; i < cl.components.size() && i < 2; ++i) {
      out->euler_genus[i] = cl.components[i].euler_genus;
      out->orientable[i] = cl.components[i].orientable;
    }
    return SURFTRI_OK;
  });
}

int surftri_for_each_cycle(const surftri_tri* t, int len, surftri_cycle_fn f, void* user) {
  if (!t || !f) return bad("null argument");
  return guard([&] {
    for_each_cycle(t->t, len, [&](const Cycle& c) { return f(c.data(), c.size(), user) != 0; });
    return SURFTRI_OK;
  });
}

int surftri_edge_width(const surftri_tri* t, int max_len, int* cycle, size_t* len) {
  if (!t) return bad("null argument");
  return guard([&] { return search_result(edge_width(t->t, max_len), cycle, len); });
}

int surftri_find_nsc(const surftri_tri* t, int h, int require_h, int require_rest, int max_len, int* cycle,
                     size_t* len) {
  if (!t) return bad("null argument");
  if ((require_h < 0) != (require_rest < 0)) return bad("give both orientability requirements or neither");
  return guard([&] {
    std::optional<std::array<bool, 2>> req;
    if (require_h >= 0) req = std::array<bool, 2>{require_h != 0, require_rest != 0};
    return search_result(find_nsc_with_genera(t->t, h, req, max_len), cycle, len);
  });
}

int surftri_find_nonseparating(const surftri_tri* t, int one_sided, int nonorientable_leaving, int max_len,
                               int* cycle, size_t* len) {
  if (!t) return bad("null argument");
  return guard([&] {
    auto r = find_nonseparating_of_type(t->t, one_sided ? Sidedness::One : Sidedness::Two,
                                        nonorientable_leaving ? Leaving::Nonorientable : Leaving::Orientable,
                                        max_len);
    return search_result(r, cycle, len);
  });
}

int surftri_nonseparating_3cycles_at(const surftri_tri* t, int v, int* out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = nonseparating_3cycles_at(t->t, v);
    return SURFTRI_OK;
  });
}

int surftri_build_large_irreducible(surftri_surface s, surftri_tri** out) {
  if (!out) return bad("null argument");
  return guard([&] {
    *out = wrap(build_large_irreducible(from_c(s)));
    return SURFTRI_OK;
  });
}

int surftri_n3_counterexample(surftri_tri** out) {
  if (!out) return bad("null argument");
  return guard([&] {
    *out = wrap(n3_counterexample());
    return SURFTRI_OK;
  });
}

int surftri_build_base(int g, surftri_tri** out, int* removed_faces) {
  if (!out) return bad("null argument");
  return guard([&] {
    auto b = build_base(g);
    if (removed_faces) {
      size_t i = 0;
      for (auto& f : b.removed)
        for (int x : f) removed_faces[i++] = x;
    }
    *out = wrap(std::move(b.completed));
    return SURFTRI_OK;
  });
}

int surftri_k7_torus(surftri_tri** out) {
  if (!out) return bad("null argument");
  return guard([&] {
    *out = wrap(k7_torus());
    return SURFTRI_OK;
  });
}

surftri_set* surftri_set_new(void) { return new surftri_set{}; }
void surftri_set_free(surftri_set* s) { delete s; }
size_t surftri_set_size(const surftri_set* s) { return s ? s->ts.size() : 0; }

int surftri_set_get(const surftri_set* s, size_t i, surftri_tri** out) {
  if (!s || !out) return bad("null argument");
  if (i >= s->ts.size()) return bad("index out of range");
  return guard([&] {
    *out = wrap(s->ts[i]);
    return SURFTRI_OK;
  });
}

int surftri_set_add(surftri_set* s, const surftri_tri* t) {
  if (!s || !t) return bad("null argument");
  return guard([&] {
    s->ts.push_back(t->t);
    return SURFTRI_OK;
  });
}

int surftri_set_read(const char* path, surftri_set** out) {
  if (!path || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(read_tri_file(path));
    return SURFTRI_OK;
  });
}

int surftri_set_write(const surftri_set* s, const char* path, const char* comment) {
  if (!s || !path) return bad("null argument");
  return guard([&] {
    std::vector<std::string> comments;
    if (comment) comments.emplace_back(comment);
    write_tri_file(path, s->ts, comments);
    return SURFTRI_OK;
  });
}

int surftri_flip_classes(const surftri_set* s, size_t* class_of, size_t* class_count) {
  if (!s || !class_of || !class_count) return bad("null argument");
  return guard([&] {
    auto cls = flip_equivalence_classes(s->ts);
    for (size_t c = 0; c < cls.size(); ++c)
      for (size_t i : cls[c]) class_of[i] = c;
    *class_count = cls.size();
    return SURFTRI_OK;
  });
}

int surftri_generate(const surftri_generate_options* opt, surftri_set** out) {
  if (!opt || !out) return bad("null argument");
  return guard([&] {
    const Surface target = from_c(opt->surface);
    if (!is_valid(target)) throw Error(Errc::InvalidArgument, "invalid surface");
    const int cap = opt->max_vertices > 0 ? opt->max_vertices : default_cap(target);
    if (cap <= 0) throw Error(Errc::InvalidArgument, "give a vertex bound for " + to_string(target));
    std::string checkpoint = opt->checkpoint_dir ? opt->checkpoint_dir : "";
    if (is_long_run(target, cap)) {
      if (!opt->allow_long)
        throw Error(Errc::LongRunRequired, to_string(target) + " up to " + std::to_string(cap) +
                                               " vertices is a long run; pass allow_long");
      if (checkpoint.empty()) checkpoint = "surftri-checkpoint-" + to_string(target);
    }
    SeedSource seeds(*opt);
    *out = wrap(seeds.run(target, cap, checkpoint));
    return SURFTRI_OK;
  });
}

int surftri_oracle(surftri_surface s, int n, surftri_set** out) {
  if (!out) return bad("null argument");
  return guard([&] {
    if (!is_valid(from_c(s))) throw Error(Errc::InvalidArgument, "invalid surface");
    *out = wrap(brute_force_triangulations(from_c(s), n));
    return SURFTRI_OK;
  });
}

int surftri_reduce_genus(const surftri_tri* t, surftri_set** out) {
  if (!t || !out) return bad("null argument");
  return guard([&] {
    *out = wrap(reduce_genus(t->t));
    return SURFTRI_OK;
  });
}

}  // extern "C"
