#include "surftri/transform.hpp"

#include <algorithm>
#include <numeric>

#include "surftri/error.hpp"

namespace surftri {

namespace {

// Applies the label identification `rep` (rep[x] <= x, rep[rep[x]] == rep[x])
// to `faces`, compacts labels in increasing order and validates. Validation
// errors are rethrown as `onfail`.
Triangulation glue(const std::vector<Face>& faces, const std::vector<int>& rep, Errc onfail) {
  const int n = static_cast<int>(rep.size());
  std::vector<int> used(n, 0);
  for (auto& f : faces)
    for (int x : f) used[rep[x]] = 1;
  std::vector<int> map(n, -1);
  int m = 0;
  for (int x = 0; x < n; ++x)
    if (used[x]) map[x] = m++;
  std::vector<Face> out;
  out.reserve(faces.size());
  for (auto& f : faces) out.push_back({map[rep[f[0]]], map[rep[f[1]]], map[rep[f[2]]]});
  try {
    return Triangulation::from_faces(m, std::move(out));
  } catch (const Error& e) {
    throw Error(onfail, std::string("result is not a triangulation: ") + e.what());
  }
}

std::vector<Face> faces_without(const Triangulation& t, std::initializer_list<Face> drop) {
  std::vector<Face> out;
  out.reserve(t.faces().size());
  for (auto& f : t.faces())
    if (std::find(drop.begin(), drop.end(), f) == drop.end()) out.push_back(f);
  return out;
}

void require_edge(const Triangulation& t, Edge e) {
  if (!t.has_edge(e))
    throw Error(Errc::NoSuchEdge, "no edge " + std::to_string(e[0]) + "-" + std::to_string(e[1]));
}

void require_face(const Triangulation& t, const Face& f) {
  for (int x : f)
    if (x < 0 || x >= t.vertex_count()) throw Error(Errc::InvalidArgument, "face label out of range");
  if (!t.has_face(f)) throw Error(Errc::InvalidArgument, "face is not in the triangulation");
}

bool is_permutation3(const Matching& m) {
  return std::is_permutation(m.begin(), m.end(), Matching{0, 1, 2}.begin());
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

void unite(std::vector<int>& p, int a, int b) {
  a = find(p, a);
  b = find(p, b);
  if (a != b) p[std::max(a, b)] = std::min(a, b);
}

std::vector<int> flatten(std::vector<int> p) {
  for (size_t x = 0; x < p.size(); ++x) p[x] = find(p, static_cast<int>(x));
  return p;
}

}  // namespace

const std::array<Matching, 6>& all_matchings() {
  static const std::array<Matching, 6> ms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return ms;
}

Triangulation contract(const Triangulation& t, Edge e) {
  e = make_edge(e[0], e[1]);
  require_edge(t, e);
  const int a = e[0], c = e[1];
  std::vector<Face> faces;
  faces.reserve(t.faces().size());
  for (auto& f : t.faces()) {
    bool ha = f[0] == a || f[1] == a || f[2] == a;
    bool hc = f[0] == c || f[1] == c || f[2] == c;
    if (!(ha && hc)) faces.push_back(f);
  }
  std::vector<int> rep(t.vertex_count());
  std::iota(rep.begin(), rep.end(), 0);
  rep[c] = a;
  auto r = glue(faces, rep, Errc::NotContractible);
  if (r.vertex_count() != t.vertex_count() - 1)
    throw Error(Errc::NotContractible, "contraction lost a vertex");
  return r;
}

bool is_contractible(const Triangulation& t, Edge e) {
  e = make_edge(e[0], e[1]);
  require_edge(t, e);
  // An edge on a third 3-cycle can never contract; otherwise decide by trying.
  if (t.common_neighbor_count(e[0], e[1]) != 2) return false;
  try {
    contract(t, e);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_irreducible(const Triangulation& t) {
  for (auto& e : t.edges())
    if (is_contractible(t, e)) return false;
  return true;
}

Triangulation contract_to_irreducible(const Triangulation& t) {
  Triangulation cur = t;
  for (;;) {
    bool done = true;
    for (auto& e : cur.edges()) {
      if (is_contractible(cur, e)) {
        cur = contract(cur, e);
        done = false;
        break;
      }
    }
    if (done) return cur;
  }
}

std::vector<SplitSite> enumerate_splits(const Triangulation& t, int v) {
  if (v < 0 || v >= t.vertex_count()) throw Error(Errc::InvalidArgument, "no such vertex");
  auto r = t.rotation(v);
  const int d = static_cast<int>(r.size());
  std::vector<SplitSite> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      SplitSite s{v, r[i], r[j], {}};
      for (int k = i + 1; k < j; ++k) s.arc.push_back(r[k]);
      out.push_back(std::move(s));
    }
  return out;
}

Triangulation split_vertex(const Triangulation& t, const SplitSite& s) {
  const int n = t.vertex_count();
  if (s.a < 0 || s.a >= n || s.b == s.c || !t.has_edge(make_edge(s.a, s.b)) ||
      !t.has_edge(make_edge(s.a, s.c)))
    throw Error(Errc::IllegalSite, "b and c must be distinct neighbors of a");
  auto r = t.rotation(s.a);
  const int d = static_cast<int>(r.size());
  const int pb = t.position_in_rotation(s.a, s.b);
  // Try both directions from b; the arc picks the side.
  int step = 0;
  for (int dir : {1, d - 1}) {
    std::vector<int> arc;
    int k = (pb + dir) % d;
    while (r[k] != s.c) {
      arc.push_back(r[k]);
      k = (k + dir) % d;
    }
    if (arc == s.arc) {
      step = dir;
      break;
    }
  }
  if (!step) throw Error(Errc::IllegalSite, "arc is not a side of a's link between b and c");
  std::vector<Face> faces;
  faces.reserve(t.faces().size() + 2);
  std::vector<Face> moved;
  for (int k = pb; r[k] != s.c; k = (k + step) % d) moved.push_back(make_face(s.a, r[k], r[(k + step) % d]));
  for (auto& f : t.faces()) {
    if (std::find(moved.begin(), moved.end(), f) != moved.end()) {
      Face g = f;
      for (int& x : g)
        if (x == s.a) x = n;
      faces.push_back(g);
    } else {
      faces.push_back(f);
    }
  }
  faces.push_back({s.a, n, s.b});
  faces.push_back({s.a, n, s.c});
  try {
    return Triangulation::from_faces(n + 1, std::move(faces));
  } catch (const Error& e) {
    throw Error(Errc::IllegalSite, e.what());
  }
}

bool is_flippable(const Triangulation& t, Edge e) {
  e = make_edge(e[0], e[1]);
  require_edge(t, e);
  auto r = t.rotation(e[0]);
  const int d = static_cast<int>(r.size());
  const int p = t.position_in_rotation(e[0], e[1]);
  return !t.adjacent(r[(p + 1) % d], r[(p + d - 1) % d]);
}

Triangulation flip(const Triangulation& t, Edge e) {
  e = make_edge(e[0], e[1]);
  if (!is_flippable(t, e)) throw Error(Errc::NotFlippable, "the opposite diagonal is already an edge");
  const int a = e[0], c = e[1];
  auto r = t.rotation(a);
  const int d = static_cast<int>(r.size());
  const int p = t.position_in_rotation(a, c);
  const int b = r[(p + 1) % d], dd = r[(p + d - 1) % d];
  auto faces = faces_without(t, {make_face(a, b, c), make_face(a, c, dd)});
  faces.push_back(make_face(a, b, dd));
  faces.push_back(make_face(b, c, dd));
  try {
    return Triangulation::from_faces(t.vertex_count(), std::move(faces));
  } catch (const Error& err) {
    throw Error(Errc::NotFlippable, err.what());
  }
}

Triangulation join_at_faces(const Triangulation& t1, const Face& f1, const Triangulation& t2,
                            const Face& f2, const Matching& m) {
  require_face(t1, f1);
  require_face(t2, f2);
  if (!is_permutation3(m)) throw Error(Errc::InvalidArgument, "matching is not a bijection");
  const int n1 = t1.vertex_count(), n2 = t2.vertex_count();
  std::vector<int> rep(n1 + n2);
  std::iota(rep.begin(), rep.end(), 0);
  for (int i = 0; i < 3; ++i) rep[n1 + f2[m[i]]] = f1[i];
  auto faces = faces_without(t1, {f1});
  for (auto& f : t2.faces())
    if (f != f2) faces.push_back({n1 + f[0], n1 + f[1], n1 + f[2]});
  return glue(faces, rep, Errc::InvalidResult);
}

Triangulation self_join_at_faces(const Triangulation& t, const Face& f1, const Face& f2,
                                 const Matching& m, bool want_orientable) {
  require_face(t, f1);
  require_face(t, f2);
  if (make_face(f1[0], f1[1], f1[2]) == make_face(f2[0], f2[1], f2[2]))
    throw Error(Errc::InvalidArgument, "the two faces must differ");
  if (!is_permutation3(m)) throw Error(Errc::InvalidArgument, "matching is not a bijection");
  for (int x : f1)
    for (int y : f2)
      if (x == y) throw Error(Errc::InvalidResult, "faces share a vertex; no handle can be grown");
  std::vector<int> p(t.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < 3; ++i) unite(p, f1[i], f2[m[i]]);
  auto r = glue(faces_without(t, {f1, f2}), flatten(std::move(p)), Errc::InvalidResult);
  if (is_orientable(r) != want_orientable)
    throw Error(Errc::WrongOrientability, want_orientable ? "result is nonorientable" : "result is orientable");
  return r;
}

Triangulation crosscap_identify(const Triangulation& t, int v) {
  if (v < 0 || v >= t.vertex_count()) throw Error(Errc::InvalidArgument, "no such vertex");
  if (t.degree(v) != 6) throw Error(Errc::WrongDegree, "vertex " + std::to_string(v) + " has degree " + std::to_string(t.degree(v)));
  auto r = t.rotation(v);
  std::vector<Face> faces;
  for (auto& f : t.faces())
    if (f[0] != v && f[1] != v && f[2] != v) faces.push_back(f);
  std::vector<int> p(t.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < 3; ++i) unite(p, r[i], r[i + 3]);
  return glue(faces, flatten(std::move(p)), Errc::InvalidResult);
}

Triangulation crosscap_at_vertex(const Triangulation& t, int pv, int i, int j) {
  if (pv < 0 || pv >= t.vertex_count()) throw Error(Errc::InvalidArgument, "no such vertex");
  auto r = t.rotation(pv);
  const int d = static_cast<int>(r.size());
  if (i < 0 || j < 0 || i >= d || j >= d) throw Error(Errc::InvalidArgument, "rotation position out of range");
  const int a = r[i], b = r[(i + 1) % d], c = r[j], e = r[(j + 1) % d];
  if (a == c || a == e || b == c || b == e) throw Error(Errc::InvalidResult, "the two faces share a link vertex");
  std::vector<int> p(t.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  unite(p, a, c);
  unite(p, b, e);
  return glue(faces_without(t, {make_face(pv, a, b), make_face(pv, c, e)}), flatten(std::move(p)),
              Errc::InvalidResult);
}

}  // namespace surftri
