#include "surftri/canon.hpp"

#include <algorithm>

#include "surftri/error.hpp"

namespace surftri {

namespace {

struct Scratch {
  std::vector<int> lab, queue, st, sd, best_lab;
  std::string cur;
};

thread_local Scratch scratch;

// Computes the least code over all admissible starts. When `labeling` is set,
// fills it with the winning BFS labels (1-based).
void least_code(const RotationView& r, CanonicalCode& best, std::vector<int>* labeling) {
  const int n = r.n;
  if (n >= 65535) throw Error(Errc::InvalidArgument, "triangulation too large for a canonical code");
  const bool wide = n >= 255;
  auto& s = scratch;
  s.lab.assign(n, 0);
  s.queue.resize(n);
  s.st.resize(n);
  s.sd.resize(n);
  best.clear();
  auto deg = [&](int v) { return r.off[v + 1] - r.off[v]; };

  int dmin = deg(0);
  for (int v = 1; v < n; ++v) dmin = std::min(dmin, deg(v));
  int wmin = 1 << 30;
  for (int v = 0; v < n; ++v)
    if (deg(v) == dmin)
      for (int i = r.off[v]; i < r.off[v + 1]; ++i) wmin = std::min(wmin, deg(r.nb[i]));

  std::string& cur = s.cur;
  for (int u = 0; u < n; ++u) {
    if (deg(u) != dmin) continue;
    const int du = deg(u);
    for (int iw = 0; iw < du; ++iw) {
      if (deg(r.nb[r.off[u] + iw]) != wmin) continue;
      for (int dir = 1; dir >= -1; dir -= 2) {
        std::fill(s.lab.begin(), s.lab.end(), 0);
        cur.clear();
        int cmp = best.empty() ? -1 : 0;
        bool abort = false;
        auto emit = [&](int x) {
          if (wide) {
            cur.push_back(static_cast<char>(x >> 8));
            cur.push_back(static_cast<char>(x & 255));
          } else {
            cur.push_back(static_cast<char>(x));
          }
          if (cmp == 0) {
            for (size_t k = cur.size() - (wide ? 2 : 1); k < cur.size(); ++k) {
              unsigned char a = cur[k], b = best[k];
              if (a < b) { cmp = -1; break; }
              if (a > b) { abort = true; break; }
            }
          }
        };
        cur.push_back(static_cast<char>(n >> 8));
        cur.push_back(static_cast<char>(n & 255));
        int next = 1, qh = 0, qt = 0;
        s.lab[u] = next++;
        s.queue[qt++] = u;
        s.st[u] = iw;
        s.sd[u] = dir;
        while (qh < qt && !abort) {
          const int x = s.queue[qh++];
          const int dx = deg(x);
          const int* rx = r.nb + r.off[x];
          int p = s.st[x];
          const int step = s.sd[x] == 1 ? 1 : dx - 1;
          for (int k = 0; k < dx && !abort; ++k) {
            const int y = rx[p];
            const int pn = p + step >= dx ? p + step - dx : p + step;
            if (!s.lab[y]) {
              s.lab[y] = next++;
              s.queue[qt++] = y;
              const int* ry = r.nb + r.off[y];
              const int dy = deg(y);
              int px = 0;
              while (ry[px] != x) ++px;
              s.st[y] = px;
              s.sd[y] = ry[px + 1 == dy ? 0 : px + 1] == rx[pn] ? -1 : 1;
            }
            emit(s.lab[y]);
            p = pn;
          }
          if (!abort) emit(0);
        }
        if (abort) continue;
        if (cmp < 0) {
          best = cur;
          if (labeling) *labeling = s.lab;
        }
      }
    }
  }
}

}  // namespace

CanonicalCode canonical_code(const RotationView& r) {
  CanonicalCode best;
  least_code(r, best, nullptr);
  return best;
}

namespace {
struct Csr {
  std::vector<int> off, nb;
  RotationView view() const { return {static_cast<int>(off.size()) - 1, off.data(), nb.data()}; }
};
Csr csr_of(const Triangulation& t) {
  Csr c;
  const int n = t.vertex_count();
  c.off.resize(n + 1);
  c.off[0] = 0;
  for (int v = 0; v < n; ++v) {
    auto r = t.rotation(v);
    c.nb.insert(c.nb.end(), r.begin(), r.end());
    c.off[v + 1] = static_cast<int>(c.nb.size());
  }
  return c;
}
}  // namespace

CanonicalCode canonical_code(const Triangulation& t) {
  auto c = csr_of(t);
  return canonical_code(c.view());
}

std::vector<int> canonical_labeling(const Triangulation& t) {
  auto c = csr_of(t);
  CanonicalCode best;
  std::vector<int> lab;
  least_code(c.view(), best, &lab);
  for (int& x : lab) --x;
  return lab;
}

Triangulation canonical_form(const Triangulation& t) {
  auto lab = canonical_labeling(t);
  return Triangulation::from_faces(t.vertex_count(), relabel_faces(t.faces(), lab));
}

std::string canonical_record(const Triangulation& t) {
  return format_record(canonical_form(t));
}

Triangulation decode_code(const CanonicalCode& code) {
  if (code.size() < 2) throw Error(Errc::Parse, "truncated canonical code");
  auto byte = [&](size_t i) { return static_cast<int>(static_cast<unsigned char>(code[i])); };
  const int n = byte(0) << 8 | byte(1);
  const bool wide = n >= 255;
  std::vector<std::vector<int>> rot(n);
  size_t i = 2;
  for (int v = 0; v < n; ++v) {
    for (;;) {
      if (i + (wide ? 1 : 0) >= code.size()) throw Error(Errc::Parse, "truncated canonical code");
      int x = wide ? (byte(i) << 8 | byte(i + 1)) : byte(i);
      i += wide ? 2 : 1;
      if (x == 0) break;
      if (x > n) throw Error(Errc::Parse, "bad label in canonical code");
      rot[v].push_back(x - 1);
    }
  }
  return Triangulation::from_rotations(rot);
}

bool are_equivalent(const Triangulation& a, const Triangulation& b) {
  if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace surftri
