#include "surftri/generate.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "surftri/cycletop.hpp"
#include "surftri/error.hpp"
#include "surftri/transform.hpp"

namespace surftri {

namespace {

using CodeSet = std::unordered_set<CanonicalCode>;

// Compressed rotation system used while splitting.
struct Csr {
  std::vector<int> off, nb;
  int n() const { return static_cast<int>(off.size()) - 1; }
  RotationView view() const { return {n(), off.data(), nb.data()}; }
};

Csr csr_from_code(const CanonicalCode& code) {
  // Canonical codes always fit one byte per label at generator sizes.
  Csr c;
  const int n = static_cast<unsigned char>(code[0]) << 8 | static_cast<unsigned char>(code[1]);
  if (n >= 255) {
    auto t = decode_code(code);
    c.off.push_back(0);
    for (int v = 0; v < n; ++v) {
      auto r = t.rotation(v);
      c.nb.insert(c.nb.end(), r.begin(), r.end());
      c.off.push_back(static_cast<int>(c.nb.size()));
    }
    return c;
  }
  c.off.reserve(n + 1);
  c.off.push_back(0);
  for (size_t i = 2; i < code.size(); ++i) {
    int x = static_cast<unsigned char>(code[i]);
    if (x == 0)
      c.off.push_back(static_cast<int>(c.nb.size()));
    else
      c.nb.push_back(x - 1);
  }
  return c;
}

Triangulation triangulation_of(const Csr& c) {
  std::vector<std::vector<int>> rot(c.n());
  for (int v = 0; v < c.n(); ++v) rot[v].assign(c.nb.begin() + c.off[v], c.nb.begin() + c.off[v + 1]);
  return Triangulation::from_rotations(rot);
}

// Splits vertex a of `in` along r[i] and r[j] (i < j, r = a's rotation); the
// neighbors r[i+1..j-1] move to the new vertex n.
void split_csr(const Csr& in, int a, int i, int j, Csr& out) {
  const int n = in.n();
  const int* r = in.nb.data() + in.off[a];
  const int d = in.off[a + 1] - in.off[a];
  const int b = r[i], c = r[j];
  const int before_b = r[i + 1];  // face a b r[i+1] moves to the new vertex
  const int before_c = r[j - 1];  // and so does face a r[j-1] c
  out.off.clear();
  out.nb.clear();
  out.off.reserve(n + 2);
  out.nb.reserve(in.nb.size() + 6);
  out.off.push_back(0);
  for (int v = 0; v < n; ++v) {
    const int* rv = in.nb.data() + in.off[v];
    const int dv = in.off[v + 1] - in.off[v];
    if (v == a) {
      for (int k = j; k != i; k = k + 1 == d ? 0 : k + 1) out.nb.push_back(r[k]);
      out.nb.push_back(b);
      out.nb.push_back(n);
    } else if (v == b || v == c) {
      const int toward = v == b ? before_b : before_c;
      int pa = 0;
      while (rv[pa] != a) ++pa;
      const bool next_is_toward = rv[pa + 1 == dv ? 0 : pa + 1] == toward;
      for (int k = 0; k < dv; ++k) {
        if (k == pa && !next_is_toward) out.nb.push_back(n);
        out.nb.push_back(rv[k]);
        if (k == pa && next_is_toward) out.nb.push_back(n);
      }
    } else {
      bool on_arc = false;
      for (int k = i + 1; k < j; ++k)
        if (r[k] == v) on_arc = true;
      for (int k = 0; k < dv; ++k) out.nb.push_back(on_arc && rv[k] == a ? n : rv[k]);
    }
    out.off.push_back(static_cast<int>(out.nb.size()));
  }
  for (int k = i; k <= j; ++k) out.nb.push_back(r[k]);
  out.nb.push_back(a);
  out.off.push_back(static_cast<int>(out.nb.size()));
}

// A surgery turns one closure member into zero or more candidate codes.
using Surgery = std::function<void(const Triangulation&, std::vector<CanonicalCode>&)>;

struct ClosureStats {
  std::map<int, size_t> level_sizes;
};

// Level-by-level splitting closure. Members of each level are processed in
// strided slices by `workers` threads, each with private sets that are merged
// afterwards, so the outcome does not depend on scheduling.
void run_closure(const std::vector<Triangulation>& seeds, int max_vertices, int workers,
                 const std::function<void(const Triangulation&)>& visit_serial, const Surgery& surgery,
                 CodeSet& results, ClosureStats* stats,
                 const std::function<void(const std::string&)>& progress) {
  std::map<int, CodeSet> pending;
  for (auto& s : seeds)
    if (s.vertex_count() <= max_vertices) pending[s.vertex_count()].insert(canonical_code(s));
  if (pending.empty()) return;
  workers = std::max(1, workers);
  for (int n = pending.begin()->first; n <= max_vertices; ++n) {
    std::vector<CanonicalCode> level(pending[n].begin(), pending[n].end());
    pending.erase(n);
    std::sort(level.begin(), level.end());
    if (stats) stats->level_sizes[n] = level.size();
    if (progress) progress("level " + std::to_string(n) + ": " + std::to_string(level.size()) + " triangulations");
    const bool grow = n < max_vertices;
    std::vector<CodeSet> next(workers), found(workers);
    auto work = [&](int w) {
      Csr cur, child;
      std::vector<CanonicalCode> out;
      for (size_t idx = w; idx < level.size(); idx += workers) {
        cur = csr_from_code(level[idx]);
        if (surgery) {
          out.clear();
          surgery(triangulation_of(cur), out);
          for (auto& c : out) found[w].insert(std::move(c));
        }
        if (!grow) continue;
        for (int a = 0; a < n; ++a) {
          const int d = cur.off[a + 1] - cur.off[a];
          for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
              split_csr(cur, a, i, j, child);
              next[w].insert(canonical_code(child.view()));
            }
        }
      }
    };
    if (visit_serial)
      for (auto& code : level) visit_serial(decode_code(code));
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (int w = 0; w < workers; ++w) {
      results.merge(found[w]);
      if (grow) pending[n + 1].merge(next[w]);
    }
  }
}

std::vector<Triangulation> decode_sorted(const CodeSet& codes) {
  std::vector<Triangulation> ts;
  ts.reserve(codes.size());
  for (auto& c : codes) ts.push_back(decode_code(c));
  return canonical_set(ts);
}

bool is_irreducible_fast(const std::vector<std::uint64_t>& adj, int n) {
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = adj[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if (v > u && std::popcount(adj[u] & adj[v]) < 3) return false;
    }
  }
  return true;
}

// Adjacency after identifying each from[k] into to[k]; the identified labels
// keep their bits cleared.
std::vector<std::uint64_t> merged_adjacency(const Triangulation& t, const int* from, const int* to, int k) {
  const int n = t.vertex_count();
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = t.adjacency_row(v)[0];
  for (int q = 0; q < k; ++q) {
    adj[to[q]] |= adj[from[q]];
    adj[from[q]] = 0;
  }
  for (int v = 0; v < n; ++v)
    for (int q = 0; q < k; ++q)
      if (adj[v] >> from[q] & 1) adj[v] = (adj[v] & ~(std::uint64_t{1} << from[q])) | std::uint64_t{1} << to[q];
  return adj;
}

void keep_if_target(const Triangulation& r, Surface target, int cap, std::vector<CanonicalCode>& out) {
  if (r.vertex_count() <= cap && surface_of(r) == target && is_irreducible(r)) out.push_back(canonical_code(r));
}

Surgery handle_surgery(Surface target, int cap) {
  return [target, cap](const Triangulation& t, std::vector<CanonicalCode>& out) {
    const int n = t.vertex_count();
    if (n - 3 > cap || n - 3 < 4) return;
    if (n > 64) throw Error(Errc::InvalidArgument, "generator supports at most 64 vertices");
    const auto& fs = t.faces();
    const int F = t.face_count();
    auto row = [&](int v) { return t.adjacency_row(v)[0]; };
    for (int a = 0; a < F; ++a) {
      const Face& f1 = fs[a];
      const std::uint64_t m1 = std::uint64_t{1} << f1[0] | std::uint64_t{1} << f1[1] | std::uint64_t{1} << f1[2];
      const std::uint64_t nb1 = row(f1[0]) | row(f1[1]) | row(f1[2]);
      for (int b = a + 1; b < F; ++b) {
        const Face& f2 = fs[b];
        const std::uint64_t m2 = std::uint64_t{1} << f2[0] | std::uint64_t{1} << f2[1] | std::uint64_t{1} << f2[2];
        if ((m1 & m2) || (nb1 & m2)) continue;
        for (auto& m : all_matchings()) {
          bool ok = true;
          for (int i = 0; i < 3 && ok; ++i) ok = !(row(f1[i]) & row(f2[m[i]]));
          if (!ok) continue;
          int from[3] = {f2[m[0]], f2[m[1]], f2[m[2]]};
          int to[3] = {f1[0], f1[1], f1[2]};
          if (!is_irreducible_fast(merged_adjacency(t, from, to, 3), n)) continue;
          try {
            keep_if_target(self_join_at_faces(t, f1, f2, m, target.orientable), target, cap, out);
          } catch (const Error&) {
          }
        }
      }
    }
  };
}

Surgery vertex_crosscap_surgery(Surface target, int cap) {
  return [target, cap](const Triangulation& t, std::vector<CanonicalCode>& out) {
    const int n = t.vertex_count();
    if (n - 2 > cap || n - 2 < 4) return;
    if (n > 64) throw Error(Errc::InvalidArgument, "generator supports at most 64 vertices");
    auto row = [&](int v) { return t.adjacency_row(v)[0]; };
    for (int p = 0; p < n; ++p) {
      auto r = t.rotation(p);
      const int d = static_cast<int>(r.size());
      const std::uint64_t pbit = std::uint64_t{1} << p;
      for (int i = 0; i < d; ++i)
        for (int j = i + 2; j < d; ++j) {
          const int a = r[i], b = r[(i + 1) % d], c = r[j], e = r[(j + 1) % d];
          if (e == a) continue;
          if (t.adjacent(a, c) || t.adjacent(a, e) || t.adjacent(b, c) || t.adjacent(b, e)) continue;
          if ((row(a) & row(c)) != pbit || (row(b) & row(e)) != pbit) continue;
          int from[2] = {c, e};
          int to[2] = {a, b};
          if (!is_irreducible_fast(merged_adjacency(t, from, to, 2), n)) continue;
          try {
            keep_if_target(crosscap_at_vertex(t, p, i, j), target, cap, out);
          } catch (const Error&) {
          }
        }
    }
  };
}

Surgery hexagon_surgery(Surface target, int cap) {
  return [target, cap](const Triangulation& t, std::vector<CanonicalCode>& out) {
    if (t.vertex_count() - 4 > cap) return;
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (t.degree(v) != 6) continue;
      try {
        keep_if_target(crosscap_identify(t, v), target, cap, out);
      } catch (const Error&) {
      }
    }
  };
}

std::vector<Triangulation> grow(const std::vector<Triangulation>& seeds, int intermediate, int workers,
                                const Surgery& s,
                                const std::function<void(const std::string&)>& progress = {}) {
  CodeSet results;
  run_closure(seeds, intermediate, workers, {}, s, results, nullptr, progress);
  return decode_sorted(results);
}

void check_target(Surface target) {
  if (!is_valid(target)) throw Error(Errc::InvalidArgument, "invalid surface");
}

}  // namespace

Triangulation tetrahedron() {
  return Triangulation::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

int default_cap(Surface s) {
  static const std::map<Surface, int> caps{{Surface::S(0), 4},  {Surface::N(1), 7},  {Surface::S(1), 10},
                                           {Surface::N(2), 11}, {Surface::N(3), 16}, {Surface::S(2), 17},
                                           {Surface::N(4), 22}};
  auto it = caps.find(s);
  return it == caps.end() ? 0 : it->second;
}

std::string GrowUnit::id() const {
  return std::string(path == GrowPath::Handle ? "handle:" : "crosscap:") + to_string(seed);
}

std::vector<GrowUnit> grow_units(Surface target) {
  check_target(target);
  std::vector<GrowUnit> units;
  const int eg = euler_genus(target);
  Surface s;
  if (eg >= 2) {
    if (surface_from_euler_genus(eg - 2, true, &s)) units.push_back({GrowPath::Handle, s});
    if (!target.orientable && surface_from_euler_genus(eg - 2, false, &s)) units.push_back({GrowPath::Handle, s});
  }
  if (!target.orientable) {
    if (surface_from_euler_genus(eg - 1, true, &s)) units.push_back({GrowPath::Crosscap, s});
    if (surface_from_euler_genus(eg - 1, false, &s)) units.push_back({GrowPath::Crosscap, s});
  }
  return units;
}

bool is_long_run(Surface target, int cap) {
  // Closure sizes that finish in minutes on one core.
  static const std::map<Surface, int> desk{
      {Surface::S(0), 14}, {Surface::N(1), 13}, {Surface::S(1), 11}, {Surface::N(2), 11}};
  if (target == Surface::S(0)) return false;
  for (auto& u : grow_units(target)) {
    auto it = desk.find(u.seed);
    const int need = cap + (u.path == GrowPath::Handle ? 3 : 2);
    if (it == desk.end() || need > it->second) return true;
  }
  return false;
}

std::vector<Triangulation> splitting_closure(const Triangulation& t, int max_vertices) {
  std::vector<Triangulation> all;
  for_each_in_closure({t}, max_vertices, [&](const Triangulation& x) { all.push_back(x); });
  return all;
}

void for_each_in_closure(const std::vector<Triangulation>& seeds, int max_vertices,
                         const std::function<void(const Triangulation&)>& visit) {
  CodeSet none;
  run_closure(seeds, max_vertices, 1, [&](const Triangulation& x) { visit(x); }, {}, none, nullptr, {});
}

std::vector<Triangulation> grow_handle_or_crosshandle(const std::vector<Triangulation>& seeds, Surface target,
                                                      int cap, int workers) {
  check_target(target);
  return grow(seeds, cap + 3, workers, handle_surgery(target, cap));
}

std::vector<Triangulation> grow_crosscap(const std::vector<Triangulation>& seeds, Surface target, int cap,
                                         int workers) {
  check_target(target);
  return grow(seeds, cap + 2, workers, vertex_crosscap_surgery(target, cap));
}

std::vector<Triangulation> grow_crosscap_by_hexagon(const std::vector<Triangulation>& seeds, Surface target,
                                                    int cap) {
  check_target(target);
  return grow(seeds, cap + 4, 1, hexagon_surgery(target, cap));
}

std::vector<Triangulation> generate_irreducible(const GenerationJob& job) {
  check_target(job.target);
  const int cap = job.cap > 0 ? job.cap : default_cap(job.target);
  if (cap <= 0) throw Error(Errc::InvalidArgument, "no default vertex cap for " + to_string(job.target));
  if (cap < v_min(job.target)) throw Error(Errc::InvalidArgument, "vertex cap below the minimum for the surface");
  if (job.target == Surface::S(0)) return {tetrahedron()};

  auto units = grow_units(job.target);
  std::map<Surface, std::vector<Triangulation>> seeds = job.seeds;
  if (!seeds.count(Surface::S(0))) seeds[Surface::S(0)] = {tetrahedron()};
  for (auto& u : units) {
    auto it = seeds.find(u.seed);
    if (it == seeds.end() || it->second.empty())
      throw Error(Errc::IncompleteSeeds, "missing irreducible triangulations of " + to_string(u.seed));
    for (auto& s : it->second)
      if (surface_of(s) != u.seed)
        throw Error(Errc::InvalidArgument, "seed for " + to_string(u.seed) + " is on " + to_string(surface_of(s)));
  }

  namespace fs = std::filesystem;
  CodeSet results;
  std::set<std::string> done;
  const bool checkpoint = !job.checkpoint_dir.empty();
  fs::path dir(job.checkpoint_dir);
  if (checkpoint) {
    fs::create_directories(dir);
    std::ifstream dl(dir / "done.log");
    for (std::string line; std::getline(dl, line);)
      if (!line.empty()) done.insert(line);
    std::ifstream pt(dir / "partial.tri");
    for (std::string line; std::getline(pt, line);)
      if (!line.empty() && line[0] != '#') results.insert(canonical_code(parse_record(line)));
  }

  for (auto& u : units) {
    const std::string id = u.id();
    if (done.count(id)) {
      if (job.progress) job.progress(id + ": resumed from checkpoint");
      continue;
    }
    if (job.progress) job.progress(id + ": start");
    std::function<void(const std::string&)> progress;
    if (job.progress) progress = [&](const std::string& m) { job.progress(id + ": " + m); };
    auto found = u.path == GrowPath::Handle
                     ? grow(seeds[u.seed], cap + 3, job.workers, handle_surgery(job.target, cap), progress)
                     : grow(seeds[u.seed], cap + 2, job.workers, vertex_crosscap_surgery(job.target, cap), progress);
    if (job.progress) job.progress(id + ": " + std::to_string(found.size()) + " irreducible");
    if (checkpoint) {
      {
        std::ofstream pt(dir / "partial.tri", std::ios::app);
        for (auto& t : found) pt << format_record(t) << '\n';
        if (!pt) throw Error(Errc::Io, "cannot write checkpoint");
      }
      std::ofstream dl(dir / "done.log", std::ios::app);
      dl << id << '\n';
      if (!dl) throw Error(Errc::Io, "cannot write checkpoint");
    }
    for (auto& t : found) results.insert(canonical_code(t));
  }
  return decode_sorted(results);
}

namespace {

struct Backtrack {
  int n, F;
  Surface target;
  std::vector<int> cnt, apex;
  std::vector<Face> faces;
  std::vector<std::vector<std::array<int, 2>>> link;
  int used = 0;
  CodeSet found;

  int& c(int u, int v) { return cnt[u * n + v]; }

  // The link of z must stay a union of paths, or become one cycle holding
  // all of its edges.
  bool link_fine(int z) const {
    const auto& es = link[z];
    std::vector<int> verts;
    for (auto& e : es) {
      verts.push_back(e[0]);
      verts.push_back(e[1]);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> p(verts.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    auto idx = [&](int x) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()); };
    auto find = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    int comps = static_cast<int>(verts.size());
    bool cycle = false;
    for (auto& e : es) {
      int a = find(idx(e[0])), b = find(idx(e[1]));
      if (a == b) {
        cycle = true;
      } else {
        p[a] = b;
        --comps;
      }
    }
    return !cycle || comps == 1;
  }

  void add(int u, int v, int w) {
    faces.push_back(make_face(u, v, w));
    for (auto [a, b] : {std::pair{u, v}, {u, w}, {v, w}}) {
      if (c(a, b) == 0) apex[a * n + b] = apex[b * n + a] = (a ^ b ^ u ^ v ^ w);
      ++c(a, b);
      ++c(b, a);
    }
    link[u].push_back({v, w});
    link[v].push_back({u, w});
    link[w].push_back({u, v});
  }

  void remove(int u, int v, int w) {
    faces.pop_back();
    for (auto [a, b] : {std::pair{u, v}, {u, w}, {v, w}}) {
      --c(a, b);
      --c(b, a);
    }
    link[u].pop_back();
    link[v].pop_back();
    link[w].pop_back();
  }

  void search() {
    int ou = -1, ov = -1;
    for (int u = 0; u < used && ou < 0; ++u)
      for (int v = u + 1; v < used; ++v)
        if (c(u, v) == 1) {
          ou = u;
          ov = v;
          break;
        }
    if (ou < 0) {
      if (static_cast<int>(faces.size()) == F && used == n) {
        try {
          auto t = Triangulation::from_faces(n, faces);
          if (surface_of(t) == target) found.insert(canonical_code(t));
        } catch (const Error&) {
        }
      }
      return;
    }
    if (static_cast<int>(faces.size()) >= F) return;
    const int x = apex[ou * n + ov];
    const int limit = used < n ? used + 1 : used;
    for (int w = 0; w < limit; ++w) {
      if (w == ou || w == ov || w == x) continue;
      if (c(ou, w) >= 2 || c(ov, w) >= 2) continue;
      const bool fresh = w == used;
      if (fresh) ++used;
      add(ou, ov, w);
      if (link_fine(ou) && link_fine(ov) && link_fine(w)) search();
      remove(ou, ov, w);
      if (fresh) --used;
    }
  }
};

}  // namespace

std::vector<Triangulation> brute_force_triangulations(Surface s, int n) {
  check_target(s);
  const int chi = euler_characteristic(s);
  if (n < 4 || n - chi <= 0) return {};
  Backtrack bt;
  bt.n = n;
  bt.F = 2 * (n - chi);
  bt.target = s;
  bt.cnt.assign(n * n, 0);
  bt.apex.assign(n * n, -1);
  bt.link.resize(n);
  bt.used = 3;
  bt.add(0, 1, 2);
  bt.search();
  return decode_sorted(bt.found);
}

std::vector<Triangulation> reduce_genus(const Triangulation& t) {
  if (euler_characteristic(t) > 1) throw Error(Errc::InvalidArgument, "the sphere has no lower genus");
  CodeSet out;
  bool any = false;
  for_each_cycle(t, 3, [&](const Cycle& c) {
    if (is_separating(t, c)) return true;
    any = true;
    out.insert(canonical_code(contract_to_irreducible(cap_boundaries(cut_along_cycle(t, c)))));
    return true;
  });
  if (!any) throw Error(Errc::NoNonseparating3Cycle, "no nonseparating 3-cycle");
  return decode_sorted(out);
}

std::vector<Triangulation> canonical_set(const std::vector<Triangulation>& ts) {
  std::vector<std::pair<std::string, const Triangulation*>> keyed;
  keyed.reserve(ts.size());
  for (auto& t : ts) keyed.emplace_back(format_record(t), &t);
  std::sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Triangulation> out;
  CodeSet seen;
  for (auto& [rec, t] : keyed)
    if (seen.insert(canonical_code(*t)).second) out.push_back(*t);
  return out;
}

std::map<int, int> vertex_histogram(const std::vector<Triangulation>& ts) {
  std::map<int, int> h;
  for (auto& t : ts) ++h[t.vertex_count()];
  return h;
}

}  // namespace surftri
