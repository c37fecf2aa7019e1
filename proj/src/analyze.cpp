#include "surftri/analyze.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "surftri/canon.hpp"
#include "surftri/error.hpp"

namespace surftri {

std::vector<Edge> contractible_edges(const Triangulation& t) {
  std::vector<Edge> out;
  for (auto& e : t.edges())
    if (is_contractible(t, e)) out.push_back(e);
  return out;
}

bool is_almost_irreducible(const Triangulation& t) {
  auto ce = contractible_edges(t);
  if (ce.empty()) return false;
  for (auto& f : t.faces()) {
    bool all = true;
    for (auto& e : ce) {
      int hits = (e[0] == f[0] || e[0] == f[1] || e[0] == f[2]) + (e[1] == f[0] || e[1] == f[1] || e[1] == f[2]);
      if (hits != 2) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace {

// Breadth-first walk over the flip class of `start` by canonical code. Stops
// when `visit` returns false; returns whether the walk completed.
bool walk_flip_class(const Triangulation& start, const std::function<bool(const CanonicalCode&, const Triangulation&)>& visit,
                     std::unordered_set<CanonicalCode>* seen_out = nullptr) {
  std::unordered_set<CanonicalCode> seen;
  std::deque<CanonicalCode> queue;
  auto c0 = canonical_code(start);
  seen.insert(c0);
  queue.push_back(c0);
  while (!queue.empty()) {
    auto code = std::move(queue.front());
    queue.pop_front();
    auto t = decode_code(code);
    if (!visit(code, t)) return false;
    for (auto& e : t.edges()) {
      if (!is_flippable(t, e)) continue;
      auto c = canonical_code(flip(t, e));
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  if (seen_out) *seen_out = std::move(seen);
  return true;
}

}  // namespace

bool is_pseudo_minimal(const Triangulation& t) {
  if (!is_irreducible(t)) return false;
  return walk_flip_class(t, [](const CanonicalCode&, const Triangulation& x) { return is_irreducible(x); });
}

std::vector<std::vector<size_t>> flip_equivalence_classes(const std::vector<Triangulation>& ts) {
  if (ts.empty()) return {};
  const Surface s = surface_of(ts[0]);
  for (auto& t : ts)
    if (t.vertex_count() != ts[0].vertex_count() || surface_of(t) != s)
      throw Error(Errc::MixedInput, "flip classes need one surface and one vertex count");
  std::unordered_map<CanonicalCode, std::vector<size_t>> by_code;
  for (size_t i = 0; i < ts.size(); ++i) by_code[canonical_code(ts[i])].push_back(i);
  std::vector<int> cls(ts.size(), -1);
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    walk_flip_class(ts[i], [&](const CanonicalCode& c, const Triangulation&) {
      auto it = by_code.find(c);
      if (it != by_code.end())
        for (size_t j : it->second) cls[j] = id;
      return true;
    });
  }
  for (size_t i = 0; i < ts.size(); ++i) classes[cls[i]].push_back(i);
  return classes;
}

Triangulation k7_torus() {
  std::vector<Face> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Triangulation::from_faces(7, std::move(faces));
}

namespace {

Triangulation largest_irreducible(Surface s) {
  GenerationJob job;
  job.target = s;
  if (s == Surface::S(1)) job.seeds[Surface::S(0)] = {tetrahedron()};
  auto all = generate_irreducible(job);
  const Triangulation* best = nullptr;
  for (auto& t : all)
    if (!best || t.vertex_count() > best->vertex_count()) best = &t;
  return *best;
}

}  // namespace

Triangulation build_M() {
  static const Triangulation m = largest_irreducible(Surface::N(1));
  return m;
}

Triangulation build_torus_M() {
  static const Triangulation m = largest_irreducible(Surface::S(1));
  return m;
}

namespace {

Triangulation b3() {
  return Triangulation::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

BorderedBase base3() { return {b3(), {{0, 2, 3}, {1, 2, 3}, {0, 1, 2}}}; }

BorderedBase base4() {
  // a..f = 0..5; kept abd ace bcf def, removed ade bdf cef abc.
  auto t = Triangulation::from_faces(
      6, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}, {0, 1, 2}});
  return {t, {{0, 3, 4}, {1, 3, 5}, {2, 4, 5}, {0, 1, 2}}};
}

// Label map of join_at_faces for the second triangulation.
std::vector<int> second_labels(int n1, const Triangulation& t2, const Face& f1, const Face& f2, const Matching& m) {
  std::vector<int> map(t2.vertex_count(), -1);
  for (int i = 0; i < 3; ++i) map[f2[m[i]]] = f1[i];
  int next = n1;
  for (int x = 0; x < t2.vertex_count(); ++x)
    if (map[x] < 0) map[x] = next++;
  return map;
}

BorderedBase join_bases(const BorderedBase& a, const BorderedBase& b) {
  const Face fa = a.removed.front(), fb = b.removed.front();
  for (auto& m : all_matchings()) {
    try {
      BorderedBase r{join_at_faces(a.completed, fa, b.completed, fb, m), {}};
      r.removed.assign(a.removed.begin() + 1, a.removed.end());
      auto map = second_labels(a.vertex_count(), b.completed, fa, fb, m);
      for (size_t k = 1; k < b.removed.size(); ++k) {
        auto& f = b.removed[k];
        r.removed.push_back(make_face(map[f[0]], map[f[1]], map[f[2]]));
      }
      return r;
    } catch (const Error&) {
    }
  }
  throw Error(Errc::InvalidResult, "no matching joins the bases");
}

}  // namespace

BorderedBase build_base(int g) {
  if (g < 3) throw Error(Errc::BadG, "bases exist for g >= 3");
  if (g == 3) return base3();
  if (g == 4) return base4();
  if (g % 2) return join_bases(build_base(g - 1), base3());
  return join_bases(build_base(g - 2), base4());
}

bool every_edge_on_removed_face(const BorderedBase& b) {
  for (auto& e : b.completed.edges()) {
    bool on = false;
    for (auto& f : b.removed) {
      int hits = (e[0] == f[0] || e[0] == f[1] || e[0] == f[2]) + (e[1] == f[0] || e[1] == f[1] || e[1] == f[2]);
      on = on || hits == 2;
    }
    if (!on) return false;
  }
  return true;
}

bool every_edge_removed_or_rigid(const BorderedBase& b) {
  for (auto& e : b.completed.edges()) {
    bool on = false;
    for (auto& f : b.removed) {
      int hits = (e[0] == f[0] || e[0] == f[1] || e[0] == f[2]) + (e[1] == f[0] || e[1] == f[1] || e[1] == f[2]);
      on = on || hits == 2;
    }
    if (!on && b.completed.common_neighbor_count(e[0], e[1]) < 3) return false;
  }
  return true;
}

Triangulation join_first_faces(const Triangulation& a, const Face& fa, const Triangulation& b, const Face& fb) {
  for (auto& m : all_matchings()) {
    try {
      return join_at_faces(a, fa, b, fb, m);
    } catch (const Error&) {
    }
  }
  throw Error(Errc::InvalidResult, "no matching gives a triangulation");
}

Triangulation build_large_irreducible(Surface s) {
  if (!is_valid(s) || s.genus < 2)
    throw Error(Errc::UnsupportedSurface, "no large construction for " + to_string(s));
  const Triangulation m = s.orientable ? build_torus_M() : build_M();
  const Face fm = m.faces().front();
  Triangulation out = m;
  if (s.genus == 2) {
    out = join_first_faces(m, fm, m, fm);
  } else {
    auto base = build_base(s.genus);
    out = base.completed;
    // Joining keeps the labels of the left side, so removed faces stay valid.
    for (auto& f : base.removed) out = join_first_faces(out, f, m, fm);
  }
  if (surface_of(out) != s || !is_irreducible(out))
    throw Error(Errc::InvalidResult, "construction did not give an irreducible triangulation of " + to_string(s));
  return out;
}

Triangulation n3_counterexample() {
  auto m = build_M();
  auto k7 = k7_torus();
  return join_first_faces(m, m.faces().front(), k7, k7.faces().front());
}

std::map<std::pair<int, int>, int> edge_width_histogram(const std::vector<Triangulation>& ts) {
  std::map<std::pair<int, int>, int> h;
  for (auto& t : ts) {
    auto r = edge_width(t);
    ++h[{t.vertex_count(), r.status == SearchStatus::Found ? r.length() : 0}];
  }
  return h;
}

const char* theorem_name(Theorem th) {
  switch (th) {
    case Theorem::NscExists: return "nsc-exists";
    case Theorem::NscEveryGenusSplit: return "nsc-genus-split";
    case Theorem::NonseparatingTypes: return "nonseparating-types";
    case Theorem::NonseparatingThreeCyclesAtVertices: return "nonseparating-3cycles";
  }
  return "?";
}

bool parse_theorem(const std::string& name, Theorem* out) {
  for (Theorem th : {Theorem::NscExists, Theorem::NscEveryGenusSplit, Theorem::NonseparatingTypes,
                     Theorem::NonseparatingThreeCyclesAtVertices})
    if (name == theorem_name(th)) {
      *out = th;
      return true;
    }
  return false;
}

std::vector<std::pair<Sidedness, Leaving>> admissible_nonseparating_types(Surface s) {
  std::vector<std::pair<Sidedness, Leaving>> out;
  const int g = euler_genus(s);
  for (auto sd : {Sidedness::One, Sidedness::Two})
    for (auto lv : {Leaving::Orientable, Leaving::Nonorientable}) {
      const int rest = g - (sd == Sidedness::One ? 1 : 2);
      if (rest < 0) continue;
      if (s.orientable && (sd == Sidedness::One || lv == Leaving::Nonorientable)) continue;
      if (lv == Leaving::Orientable && rest % 2) continue;
      if (lv == Leaving::Nonorientable && rest < 1) continue;
      out.push_back({sd, lv});
    }
  return out;
}

TheoremReport verify_theorems(const std::vector<Triangulation>& ts, Theorem th) {
  TheoremReport rep;
  rep.theorem = th;
  for (size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    ++rep.checked;
    std::string why;
    switch (th) {
      case Theorem::NscExists:
        if (edge_width(t).status != SearchStatus::Found) why = "no NSC";
        break;
      case Theorem::NscEveryGenusSplit: {
        const int g = 2 - euler_characteristic(t);
        for (int h = 1; h <= g / 2; ++h)
          if (find_nsc_with_genera(t, h).status != SearchStatus::Found)
            why += "no NSC splitting " + std::to_string(h) + "+" + std::to_string(g - h) + "; ";
        break;
      }
      case Theorem::NonseparatingTypes:
        for (auto [sd, lv] : admissible_nonseparating_types(surface_of(t)))
          if (find_nonseparating_of_type(t, sd, lv).status != SearchStatus::Found)
            why += std::string("no ") + (sd == Sidedness::One ? "one" : "two") + "-sided " +
                   (lv == Leaving::Orientable ? "orientable" : "nonorientable") + "-leaving cycle; ";
        break;
      case Theorem::NonseparatingThreeCyclesAtVertices:
        for (int v = 0; v < t.vertex_count(); ++v)
          if (nonseparating_3cycles_at(t, v) < 2) why += "vertex " + std::to_string(v) + "; ";
        break;
    }
    if (!why.empty()) {
      rep.violators.push_back(i);
      rep.notes.push_back(format_record(t) + " : " + why);
    }
  }
  return rep;
}

}  // namespace surftri
