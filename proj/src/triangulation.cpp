#include "surftri/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <tuple>

#include "surftri/error.hpp"

namespace surftri {

namespace {

[[noreturn]] void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

std::string face_str(const Face& f) {
  return std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]);
}

}  // namespace

Triangulation Triangulation::from_faces(int n, std::vector<Face> faces) {
  if (n <= 0) fail(Errc::LabelRange, "vertex count must be positive");
  for (auto& f : faces) {
    for (int x : f)
      if (x < 0 || x >= n) fail(Errc::LabelRange, "label " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      fail(Errc::NonTriangle, "face " + face_str(f) + " repeats a vertex");
    f = make_face(f[0], f[1], f[2]);
  }
  std::sort(faces.begin(), faces.end());
  for (size_t i = 1; i < faces.size(); ++i)
    if (faces[i] == faces[i - 1]) fail(Errc::SharedEdges, "face " + face_str(faces[i]) + " appears twice");

  std::vector<int> used(n, 0);
  for (auto& f : faces)
    for (int x : f) used[x] = 1;
  for (int v = 0; v < n; ++v)
    if (!used[v]) fail(Errc::LabelRange, "vertex " + std::to_string(v) + " is in no face");

  // Each edge must lie in exactly two faces.
  std::vector<std::tuple<int, int, int>> inc;  // (u, v, opposite vertex)
  inc.reserve(faces.size() * 3);
  for (auto& f : faces) {
    inc.emplace_back(f[0], f[1], f[2]);
    inc.emplace_back(f[0], f[2], f[1]);
    inc.emplace_back(f[1], f[2], f[0]);
  }
  std::sort(inc.begin(), inc.end());
  for (size_t i = 0; i < inc.size();) {
    size_t j = i;
    while (j < inc.size() && std::get<0>(inc[j]) == std::get<0>(inc[i]) &&
           std::get<1>(inc[j]) == std::get<1>(inc[i]))
      ++j;
    if (j - i != 2)
      fail(Errc::EdgeDegree, "edge " + std::to_string(std::get<0>(inc[i])) + "-" +
                                 std::to_string(std::get<1>(inc[i])) + " lies in " +
                                 std::to_string(j - i) + " faces");
    i = j;
  }

  // Link of each vertex: a 2-regular graph on its neighbors, which must be one cycle.
  std::vector<std::vector<std::array<int, 2>>> link(n);
  for (auto& f : faces) {
    link[f[0]].push_back({f[1], f[2]});
    link[f[1]].push_back({f[0], f[2]});
    link[f[2]].push_back({f[0], f[1]});
  }
  std::vector<std::vector<int>> rot(n);
  std::vector<int> nb, other;
  for (int v = 0; v < n; ++v) {
    nb.clear();
    for (auto& e : link[v]) {
      nb.push_back(e[0]);
      nb.push_back(e[1]);
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    const int d = static_cast<int>(nb.size());
    other.assign(2 * d, -1);
    auto idx = [&](int x) { return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), x) - nb.begin()); };
    for (auto& e : link[v]) {
      int a = idx(e[0]), b = idx(e[1]);
      other[2 * a + (other[2 * a] >= 0)] = b;
      other[2 * b + (other[2 * b] >= 0)] = a;
    }
    // Walk from the least neighbor toward its lesser link neighbor.
    auto& r = rot[v];
    int prev = -1, cur = 0;
    int next0 = std::min(other[0], other[1]);
    do {
      r.push_back(nb[cur]);
      int nxt = prev < 0 ? next0 : (other[2 * cur] == prev ? other[2 * cur + 1] : other[2 * cur]);
      prev = cur;
      cur = nxt;
    } while (cur != 0 && static_cast<int>(r.size()) <= d);
    if (static_cast<int>(r.size()) != d)
      fail(Errc::Pinched, "link of vertex " + std::to_string(v) + " is not a single cycle");
  }

  Triangulation t;
  t.n_ = n;
  t.faces_ = std::move(faces);
  t.off_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) t.off_[v + 1] = t.off_[v] + static_cast<int>(rot[v].size());
  t.rot_.reserve(t.off_[n]);
  for (auto& r : rot) t.rot_.insert(t.rot_.end(), r.begin(), r.end());
  t.build_adjacency();

  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : t.rotation(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != n) fail(Errc::Disconnected, "vertex graph is disconnected");
  return t;
}

Triangulation Triangulation::from_rotations(const std::vector<std::vector<int>>& rot) {
  Triangulation t;
  const int n = static_cast<int>(rot.size());
  t.n_ = n;
  t.off_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) t.off_[v + 1] = t.off_[v] + static_cast<int>(rot[v].size());
  t.rot_.reserve(t.off_[n]);
  for (auto& r : rot) t.rot_.insert(t.rot_.end(), r.begin(), r.end());
  t.faces_.reserve(t.off_[n] / 3);
  for (int v = 0; v < n; ++v) {
    const auto& r = rot[v];
    const int d = static_cast<int>(r.size());
    for (int i = 0; i < d; ++i) {
      int a = r[i], b = r[(i + 1) % d];
      if (v < a && v < b) t.faces_.push_back(make_face(v, a, b));
    }
  }
  std::sort(t.faces_.begin(), t.faces_.end());
  t.build_adjacency();
  return t;
}

void Triangulation::build_adjacency() {
  words_ = (n_ + 63) / 64;
  adj_.assign(static_cast<size_t>(n_) * words_, 0);
  for (int v = 0; v < n_; ++v)
    for (int u : rotation(v)) adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Triangulation::position_in_rotation(int v, int u) const {
  auto r = rotation(v);
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == u) return static_cast<int>(i);
  return -1;
}

int Triangulation::common_neighbor_count(int u, int v) const {
  int c = 0;
  const auto* a = adjacency_row(u);
  const auto* b = adjacency_row(v);
  for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> es;
  es.reserve(rot_.size() / 2);
  for (int v = 0; v < n_; ++v)
    for (int u : rotation(v))
      if (v < u) es.push_back({v, u});
  std::sort(es.begin(), es.end());
  return es;
}

bool Triangulation::has_edge(Edge e) const {
  return e[0] >= 0 && e[1] >= 0 && e[0] < n_ && e[1] < n_ && e[0] != e[1] && adjacent(e[0], e[1]);
}

bool Triangulation::has_face(const Face& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), make_face(f[0], f[1], f[2]));
}

int euler_characteristic(const Triangulation& t) {
  return t.vertex_count() - t.edge_count() + t.face_count();
}

bool is_orientable(const Triangulation& t) {
  // Orient each umbrella by a traversal direction of its rotation. Across an
  // edge xy with faces xyy' and xyz, x's order "y then y'" forces y's order
  // "x then z".
  const int n = t.vertex_count();
  std::vector<int> dir(n, 0), queue{0};
  dir[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    auto rx = t.rotation(x);
    const int d = static_cast<int>(rx.size());
    for (int i = 0; i < d; ++i) {
      int y = rx[i];
      int yn = rx[((i + dir[x]) % d + d) % d];
      auto ry = t.rotation(y);
      const int dy = static_cast<int>(ry.size());
      int px = t.position_in_rotation(y, x);
      int want = ry[(px + 1) % dy] == yn ? -1 : 1;
      if (!dir[y]) {
        dir[y] = want;
        queue.push_back(y);
      } else if (dir[y] != want) {
        return false;
      }
    }
  }
  return true;
}

Surface surface_of(const Triangulation& t) {
  const int eg = 2 - euler_characteristic(t);
  const bool o = is_orientable(t);
  return o ? Surface::S(eg / 2) : Surface::N(eg);
}

std::vector<Face> relabel_faces(const std::vector<Face>& faces, const std::vector<int>& map) {
  std::vector<Face> out;
  out.reserve(faces.size());
  for (auto& f : faces) out.push_back(make_face(map[f[0]], map[f[1]], map[f[2]]));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_record(const Triangulation& t) {
  std::string s;
  s.reserve(t.face_count() * 9);
  for (auto& f : t.faces()) {
    if (!s.empty()) s += ' ';
    s += face_str(f);
  }
  return s;
}

Triangulation parse_record(std::string_view line) {
  std::vector<Face> faces;
  int maxv = -1;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
  };
  skip_ws();
  while (i < line.size()) {
    Face f{};
    for (int k = 0; k < 3; ++k) {
      if (k > 0) {
        if (i >= line.size() || line[i] != ',') fail(Errc::Parse, "expected ',' at column " + std::to_string(i + 1));
        ++i;
      }
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), f[k]);
      if (ec != std::errc() || f[k] < 0) fail(Errc::Parse, "expected a vertex label at column " + std::to_string(i + 1));
      i = static_cast<size_t>(p - line.data());
      maxv = std::max(maxv, f[k]);
    }
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      fail(Errc::Parse, "unexpected character at column " + std::to_string(i + 1));
    faces.push_back(f);
    skip_ws();
  }
  if (faces.empty()) fail(Errc::Parse, "empty record");
  return Triangulation::from_faces(maxv + 1, std::move(faces));
}

}  // namespace surftri
