#include "surftri/cycletop.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "surftri/error.hpp"

namespace surftri {

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

void uf_unite(std::vector<int>& p, int a, int b) {
  a = uf_find(p, a);
  b = uf_find(p, b);
  if (a != b) p[std::max(a, b)] = std::min(a, b);
}

void validate_cycle(const Triangulation& t, const Cycle& c) {
  const int k = static_cast<int>(c.size());
  if (k < 3) throw Error(Errc::InvalidCycle, "a cycle needs at least 3 vertices");
  std::vector<char> seen(t.vertex_count(), 0);
  for (int v : c) {
    if (v < 0 || v >= t.vertex_count()) throw Error(Errc::InvalidCycle, "cycle vertex out of range");
    if (seen[v]) throw Error(Errc::InvalidCycle, "cycle repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  for (int i = 0; i < k; ++i)
    if (!t.adjacent(c[i], c[(i + 1) % k]))
      throw Error(Errc::InvalidCycle, "no edge " + std::to_string(c[i]) + "-" + std::to_string(c[(i + 1) % k]));
}

// Face adjacency of a closed triangulation.
struct FaceGraph {
  const Triangulation& t;
  // nbr[3f+i]: face across the edge of f opposite its i-th vertex.
  std::vector<int> nbr;

  explicit FaceGraph(const Triangulation& tt) : t(tt), nbr(3 * tt.face_count()) {
    const auto& fs = t.faces();
    for (int f = 0; f < t.face_count(); ++f)
      for (int i = 0; i < 3; ++i) {
        int a = fs[f][(i + 1) % 3], b = fs[f][(i + 2) % 3], c = fs[f][i];
        auto r = t.rotation(a);
        const int d = static_cast<int>(r.size());
        int p = t.position_in_rotation(a, b);
        int z = r[(p + 1) % d] == c ? r[(p + d - 1) % d] : r[(p + 1) % d];
        auto it = std::lower_bound(fs.begin(), fs.end(), make_face(a, b, z));
        nbr[3 * f + i] = static_cast<int>(it - fs.begin());
      }
  }
};

// Number of face components after removing the cycle's edges.
int face_components(const Triangulation& t, const FaceGraph& g, const Cycle& c) {
  const int k = static_cast<int>(c.size());
  std::vector<int> pos(t.vertex_count(), -1);
  for (int i = 0; i < k; ++i) pos[c[i]] = i;
  auto on_cycle = [&](int a, int b) {
    if (pos[a] < 0 || pos[b] < 0) return false;
    int d = (pos[a] - pos[b] + k) % k;
    return d == 1 || d == k - 1;
  };
  const int F = t.face_count();
  std::vector<int> p(F);
  std::iota(p.begin(), p.end(), 0);
  const auto& fs = t.faces();
  for (int f = 0; f < F; ++f)
    for (int i = 0; i < 3; ++i) {
      int h = g.nbr[3 * f + i];
      if (h < f) continue;
      if (!on_cycle(fs[f][(i + 1) % 3], fs[f][(i + 2) % 3])) uf_unite(p, f, h);
    }
  int comps = 0;
  for (int f = 0; f < F; ++f) comps += uf_find(p, f) == f;
  return comps;
}

CycleClassification classify_complex(const BorderedComplex& b) {
  const int F = static_cast<int>(b.faces.size());
  // Edge incidences: (u, v, face).
  std::vector<std::tuple<int, int, int>> inc;
  inc.reserve(3 * F);
  for (int f = 0; f < F; ++f) {
    auto& x = b.faces[f];
    inc.emplace_back(x[0], x[1], f);
    inc.emplace_back(x[0], x[2], f);
    inc.emplace_back(x[1], x[2], f);
  }
  std::sort(inc.begin(), inc.end());
  std::vector<int> p(F);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::array<int, 3>> interior;  // (face, face, edge index into inc)
  for (size_t i = 0; i + 1 < inc.size(); ++i)
    if (std::get<0>(inc[i]) == std::get<0>(inc[i + 1]) && std::get<1>(inc[i]) == std::get<1>(inc[i + 1])) {
      uf_unite(p, std::get<2>(inc[i]), std::get<2>(inc[i + 1]));
      interior.push_back({std::get<2>(inc[i]), std::get<2>(inc[i + 1]), static_cast<int>(i)});
    }
  std::map<int, int> comp_index;
  for (int f = 0; f < F; ++f) comp_index.emplace(uf_find(p, f), 0);
  int nc = 0;
  for (auto& [root, idx] : comp_index) idx = nc++;
  std::vector<int> comp_of_face(F);
  for (int f = 0; f < F; ++f) comp_of_face[f] = comp_index[uf_find(p, f)];

  std::vector<int> V(nc, 0), E(nc, 0), Fc(nc, 0), B(nc, 0);
  std::vector<int> vcomp(b.vertex_count, -1);
  for (int f = 0; f < F; ++f) {
    ++Fc[comp_of_face[f]];
    for (int x : b.faces[f]) vcomp[x] = comp_of_face[f];
  }
  for (int x = 0; x < b.vertex_count; ++x)
    if (vcomp[x] >= 0) ++V[vcomp[x]];
  for (size_t i = 0; i < inc.size(); ++i)
    if (i == 0 || std::get<0>(inc[i]) != std::get<0>(inc[i - 1]) || std::get<1>(inc[i]) != std::get<1>(inc[i - 1]))
      ++E[comp_of_face[std::get<2>(inc[i])]];
  for (auto& bd : b.boundaries) ++B[vcomp[bd[0]]];

  // Orientation: faces carry a cyclic order; neighbors across an interior
  // edge must traverse it in opposite directions.
  std::vector<std::vector<std::pair<int, int>>> adj(F);
  for (auto& in : interior) {
    adj[in[0]].push_back({in[1], in[2]});
    adj[in[1]].push_back({in[0], in[2]});
  }
  auto dir_in = [&](int f, int sign, int u, int v) {
    // +1 when f, oriented as sorted triple times sign, runs u -> v.
    auto& x = b.faces[f];
    int iu = x[0] == u ? 0 : x[1] == u ? 1 : 2;
    int iv = x[0] == v ? 0 : x[1] == v ? 1 : 2;
    return ((iv - iu + 3) % 3 == 1 ? 1 : -1) * sign;
  };
  std::vector<int> sign(F, 0);
  std::vector<char> comp_orientable(nc, 1);
  for (int s = 0; s < F; ++s) {
    if (sign[s]) continue;
    sign[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto [g, ei] : adj[f]) {
        int u = std::get<0>(inc[ei]), v = std::get<1>(inc[ei]);
        int want = -dir_in(f, sign[f], u, v) * dir_in(g, 1, u, v);
        if (!sign[g]) {
          sign[g] = want;
          stack.push_back(g);
        } else if (sign[g] != want) {
          comp_orientable[comp_of_face[f]] = 0;
        }
      }
    }
  }

  CycleClassification cl;
  cl.separating = nc >= 2;
  cl.sided = b.boundaries.size() == 1 ? Sidedness::One : Sidedness::Two;
  bool all_orientable = true;
  for (int c = 0; c < nc; ++c) {
    CappedComponent cc;
    cc.boundaries = B[c];
    cc.euler_genus = 2 - (V[c] - E[c] + Fc[c] + B[c]);
    cc.orientable = comp_orientable[c];
    all_orientable = all_orientable && cc.orientable;
    if (cl.separating && cc.boundaries == 1 && cc.euler_genus == 0) cl.contractible = true;
    cl.components.push_back(cc);
  }
  cl.leaving = all_orientable ? Leaving::Orientable : Leaving::Nonorientable;
  return cl;
}

void dfs_cycles(const Triangulation& t, int s, int length, Cycle& path, std::vector<char>& used,
                const std::function<bool(const Cycle&)>& f, bool& stop) {
  const int last = path.back();
  if (static_cast<int>(path.size()) == length) {
    if (t.adjacent(last, s) && path[1] < path.back()) {
      if (!f(path)) stop = true;
    }
    return;
  }
  for (int u : t.rotation(last)) {
    if (u <= s || used[u]) continue;
    used[u] = 1;
    path.push_back(u);
    dfs_cycles(t, s, length, path, used, f, stop);
    path.pop_back();
    used[u] = 0;
    if (stop) return;
  }
}

}  // namespace

Cycle normalize_cycle(std::vector<int> c) {
  if (c.empty()) return c;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

BorderedComplex cut_along_cycle(const Triangulation& t, const Cycle& c) {
  validate_cycle(t, c);
  const int n = t.vertex_count();
  const int k = static_cast<int>(c.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < k; ++i) pos[c[i]] = i;

  BorderedComplex b;
  std::vector<int> label(n, -1);
  for (int v = 0; v < n; ++v)
    if (pos[v] < 0) {
      label[v] = static_cast<int>(b.original.size());
      b.original.push_back(v);
    }
  const int base = static_cast<int>(b.original.size());
  for (int i = 0; i < k; ++i) {
    b.original.push_back(c[i]);  // side A copy
    b.original.push_back(c[i]);  // side B copy
  }
  b.vertex_count = static_cast<int>(b.original.size());

  // At c[i], side A is the run of faces from the edge to c[i-1] forward to
  // the edge to c[i+1] in c[i]'s rotation.
  std::vector<int> ip(k), span(k);
  for (int i = 0; i < k; ++i) {
    const int d = t.degree(c[i]);
    ip[i] = t.position_in_rotation(c[i], c[(i + k - 1) % k]);
    int iq = t.position_in_rotation(c[i], c[(i + 1) % k]);
    span[i] = (iq - ip[i] + d) % d;
  }
  auto copy_of = [&](int i, int x, int y) {
    const int v = c[i], d = t.degree(v);
    int px = t.position_in_rotation(v, x), py = t.position_in_rotation(v, y);
    int j = (px + 1) % d == py ? px : py;
    return base + 2 * i + ((j - ip[i] + d) % d < span[i] ? 0 : 1);
  };
  b.faces.reserve(t.face_count());
  for (auto& f : t.faces()) {
    Face g;
    for (int m = 0; m < 3; ++m) {
      int v = f[m];
      g[m] = pos[v] < 0 ? label[v] : copy_of(pos[v], f[(m + 1) % 3], f[(m + 2) % 3]);
    }
    b.faces.push_back(make_face(g[0], g[1], g[2]));
  }
  std::sort(b.faces.begin(), b.faces.end());

  // Boundary edges lie in one face; every copy has exactly two of them.
  std::map<Edge, int> count;
  for (auto& f : b.faces) {
    ++count[make_edge(f[0], f[1])];
    ++count[make_edge(f[0], f[2])];
    ++count[make_edge(f[1], f[2])];
  }
  std::vector<std::vector<int>> bnb(b.vertex_count);
  for (auto& [e, m] : count)
    if (m == 1) {
      bnb[e[0]].push_back(e[1]);
      bnb[e[1]].push_back(e[0]);
    }
  std::vector<char> done(b.vertex_count, 0);
  for (int s = base; s < b.vertex_count; ++s) {
    if (done[s] || bnb[s].size() != 2) continue;
    std::vector<int> cyc;
    int prev = -1, cur = s;
    do {
      cyc.push_back(cur);
      done[cur] = 1;
      int nxt = bnb[cur][0] == prev ? bnb[cur][1] : bnb[cur][0];
      prev = cur;
      cur = nxt;
    } while (cur != s);
    b.boundaries.push_back(std::move(cyc));
  }
  return b;
}

CycleClassification classify_cycle(const Triangulation& t, const Cycle& c) {
  return classify_complex(cut_along_cycle(t, c));
}

Triangulation cap_boundaries(const BorderedComplex& b) {
  auto faces = b.faces;
  int n = b.vertex_count;
  for (auto& bd : b.boundaries) {
    if (bd.size() == 3) {
      faces.push_back(make_face(bd[0], bd[1], bd[2]));
    } else {
      const int cone = n++;
      for (size_t i = 0; i < bd.size(); ++i) faces.push_back(make_face(cone, bd[i], bd[(i + 1) % bd.size()]));
    }
  }
  return Triangulation::from_faces(n, std::move(faces));
}

void for_each_cycle(const Triangulation& t, int length, const std::function<bool(const Cycle&)>& f) {
  if (length < 3 || length > t.vertex_count()) return;
  std::vector<char> used(t.vertex_count(), 0);
  Cycle path;
  bool stop = false;
  for (int s = 0; s < t.vertex_count() && !stop; ++s) {
    path.assign(1, s);
    used[s] = 1;
    dfs_cycles(t, s, length, path, used, f, stop);
    used[s] = 0;
  }
}

std::vector<Cycle> enumerate_cycles(const Triangulation& t, int max_len) {
  std::vector<Cycle> out;
  for (int len = 3; len <= max_len; ++len)
    for_each_cycle(t, len, [&](const Cycle& c) {
      out.push_back(c);
      return true;
    });
  return out;
}

bool is_separating(const Triangulation& t, const Cycle& c) {
  validate_cycle(t, c);
  FaceGraph g(t);
  return face_components(t, g, c) >= 2;
}

namespace {

// Runs `accept` over cycles of increasing length up to the bound; accept sees
// the fast separating verdict first.
CycleSearch search(const Triangulation& t, int max_len, bool want_separating,
                   const std::function<bool(const Cycle&)>& accept) {
  const int n = t.vertex_count();
  const int bound = max_len <= 0 ? n : std::min(max_len, n);
  FaceGraph g(t);
  CycleSearch res;
  for (int len = 3; len <= bound && res.status != SearchStatus::Found; ++len)
    for_each_cycle(t, len, [&](const Cycle& c) {
      if ((face_components(t, g, c) >= 2) != want_separating) return true;
      if (!accept(c)) return true;
      res.status = SearchStatus::Found;
      res.cycle = c;
      return false;
    });
  if (res.status != SearchStatus::Found) res.status = bound >= n ? SearchStatus::None : SearchStatus::Exhausted;
  return res;
}

}  // namespace

CycleSearch edge_width(const Triangulation& t, int max_len) {
  return search(t, max_len, true, [&](const Cycle& c) { return classify_cycle(t, c).nsc(); });
}

CycleSearch find_nsc_with_genera(const Triangulation& t, int h, std::optional<std::array<bool, 2>> require,
                                 int max_len) {
  const int g = 2 - euler_characteristic(t);
  if (h < 1 || h >= g) throw Error(Errc::BadH, "h must satisfy 1 <= h < " + std::to_string(g));
  if (require && (((*require)[0] && h % 2) || ((*require)[1] && (g - h) % 2)))
    throw Error(Errc::BadH, "an orientable side needs even Euler genus");
  auto side_ok = [&](const CappedComponent& a, int eg, int which) {
    return a.euler_genus == eg && (!require || a.orientable == (*require)[which]);
  };
  return search(t, max_len, true, [&](const Cycle& c) {
    auto cl = classify_cycle(t, c);
    if (!cl.nsc() || cl.components.size() != 2) return false;
    auto& a = cl.components[0];
    auto& b = cl.components[1];
    return (side_ok(a, h, 0) && side_ok(b, g - h, 1)) || (side_ok(b, h, 0) && side_ok(a, g - h, 1));
  });
}

CycleSearch find_nonseparating_of_type(const Triangulation& t, Sidedness s, Leaving l, int max_len) {
  const int g = 2 - euler_characteristic(t);
  const bool orient = is_orientable(t);
  const int rest = g - (s == Sidedness::One ? 1 : 2);  // Euler genus left after capping
  bool possible = rest >= 0;
  if (s == Sidedness::One && orient) possible = false;
  if (l == Leaving::Orientable && rest % 2) possible = false;
  if (l == Leaving::Nonorientable && (orient || rest < 1)) possible = false;
  if (!possible) throw Error(Errc::ImpossibleType, "no nonseparating cycle of that type can exist here");
  return search(t, max_len, false, [&](const Cycle& c) {
    auto cl = classify_cycle(t, c);
    return cl.sided == s && cl.leaving == l;
  });
}

int nonseparating_3cycles_at(const Triangulation& t, int v) {
  if (v < 0 || v >= t.vertex_count()) throw Error(Errc::InvalidArgument, "no such vertex");
  FaceGraph g(t);
  int count = 0;
  auto r = t.rotation(v);
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j)
      if (t.adjacent(r[i], r[j]) && face_components(t, g, normalize_cycle({v, r[i], r[j]})) < 2) ++count;
  return count;
}

}  // namespace surftri
