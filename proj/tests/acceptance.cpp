// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "surftri/analyze.hpp"
#include "surftri/canon.hpp"
#include "surftri/cycletop.hpp"
#include "surftri/generate.hpp"
#include "surftri/surface.hpp"
#include "surftri/transform.hpp"

using namespace surftri;

namespace {

using Clock = std::chrono::steady_clock;
using Hist = std::map<int, int>;

int failures = 0;

void report(int id, const char* title, bool ok, const std::vector<std::string>& details) {
  std::printf("criterion %2d %s: %s\n", id, ok ? "PASS" : "FAIL", title);
  for (auto& d : details) std::printf("    %s\n", d.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::string hist_text(const Hist& h) {
  std::string s;
  for (auto& [k, v] : h) s += (s.empty() ? "" : ",") + std::to_string(k) + ":" + std::to_string(v);
  return s.empty() ? "(empty)" : s;
}

std::set<CanonicalCode> codes(const std::vector<Triangulation>& ts) {
  std::set<CanonicalCode> s;
  for (auto& t : ts) s.insert(canonical_code(t));
  return s;
}

std::vector<Triangulation> irreducible_census(Surface s, int n) {
  std::vector<Triangulation> out;
  for (auto& t : brute_force_triangulations(s, n))
    if (is_irreducible(t)) out.push_back(t);
  return out;
}

std::vector<Triangulation> with_n(const std::vector<Triangulation>& ts, int n) {
  std::vector<Triangulation> out;
  for (auto& t : ts)
    if (t.vertex_count() == n) out.push_back(t);
  return out;
}

std::string cycle_text(const Cycle& c) {
  std::string s;
  for (int v : c) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

struct Sets {
  std::vector<Triangulation> s0, n1, s1, n2;
  double t_s0 = 0, t_n1 = 0, t_s1 = 0, t_n2 = 0;
};

std::vector<Triangulation> timed_generate(Surface s, const std::map<Surface, std::vector<Triangulation>>& seeds,
                                          double* t) {
  auto t0 = Clock::now();
  GenerationJob job;
  job.target = s;
  job.seeds = seeds;
  auto out = generate_irreducible(job);
  *t = seconds_since(t0);
  return out;
}

void criterion_1(Sets& g) {
  std::vector<std::string> d;
  auto t0 = Clock::now();
  g.s0 = timed_generate(Surface::S(0), {}, &g.t_s0);
  std::vector<Triangulation> census;
  for (int n = 4; n <= 8; ++n)
    for (auto& t : irreducible_census(Surface::S(0), n)) census.push_back(t);
  const double t = seconds_since(t0);
  bool ok = g.s0.size() == 1 && are_equivalent(g.s0[0], tetrahedron()) && codes(census) == codes(g.s0) && t < 1.0;
  d.push_back("generated " + std::to_string(g.s0.size()) + ", oracle irreducibles for n<=8: " +
              std::to_string(census.size()) + ", time " + secs(t));
  report(1, "sphere base case", ok, d);
}

void criterion_2(Sets& g) {
  g.n1 = timed_generate(Surface::N(1), {{Surface::S(0), g.s0}}, &g.t_n1);
  auto h = vertex_histogram(g.n1);
  bool ok = g.n1.size() == 2 && h == Hist{{6, 1}, {7, 1}} && g.t_n1 < 60;
  report(2, "N1 irreducible count", ok, {"count " + std::to_string(g.n1.size()) + ", histogram " + hist_text(h) +
                                             ", time " + secs(g.t_n1)});
}

void criterion_3(Sets& g) {
  g.s1 = timed_generate(Surface::S(1), {{Surface::S(0), g.s0}}, &g.t_s1);
  auto h = vertex_histogram(g.s1);
  bool ok = g.s1.size() == 21 && h == Hist{{7, 1}, {8, 4}, {9, 15}, {10, 1}} && g.t_s1 < 3600;
  report(3, "S1 irreducible count", ok, {"count " + std::to_string(g.s1.size()) + ", histogram " + hist_text(h) +
                                             ", time " + secs(g.t_s1)});
}

void criterion_4(Sets& g) {
  g.n2 = timed_generate(Surface::N(2), {{Surface::S(0), g.s0}, {Surface::N(1), g.n1}}, &g.t_n2);
  auto h = vertex_histogram(g.n2);
  bool ok = g.n2.size() == 29 && h == Hist{{8, 6}, {9, 19}, {10, 2}, {11, 2}} && g.t_n2 < 4 * 3600;
  report(4, "N2 irreducible count", ok, {"count " + std::to_string(g.n2.size()) + ", histogram " + hist_text(h) +
                                             ", time " + secs(g.t_n2)});
}

void criterion_5(const Sets& g) {
  std::vector<std::string> d;
  bool ok = true;
  auto compare = [&](const char* name, Surface s, int n, const std::vector<Triangulation>& gen) {
    auto census = irreducible_census(s, n);
    auto mine = with_n(gen, n);
    bool same = codes(census) == codes(mine);
    ok = ok && same;
    d.push_back(std::string(name) + " n=" + std::to_string(n) + ": oracle " + std::to_string(census.size()) +
                ", generator " + std::to_string(mine.size()) + (same ? ", identical" : ", DIFFERENT"));
  };
  for (int n = 4; n <= 8; ++n) compare("S0", Surface::S(0), n, g.s0);
  for (int n = 6; n <= 7; ++n) compare("N1", Surface::N(1), n, g.n1);
  compare("S1", Surface::S(1), 7, g.s1);
  compare("N2", Surface::N(2), 8, g.n2);
  report(5, "oracle equivalence", ok, d);
}

void criterion_6(const Sets& g) {
  auto h = edge_width_histogram(g.n2);
  std::map<std::pair<int, int>, int> want{{{8, 4}, 1},  {{8, 5}, 5}, {{9, 3}, 1},  {{9, 4}, 5},
                                          {{9, 5}, 2},  {{9, 6}, 11}, {{10, 3}, 1}, {{10, 4}, 1},
                                          {{11, 3}, 2}};
  std::vector<std::string> d;
  std::map<int, std::string> rows;
  for (auto& [k, c] : h)
    rows[k.first] += (rows[k.first].empty() ? "" : ",") + (k.second ? std::to_string(k.second) : "NONE") + ":" +
                     std::to_string(c);
  for (auto& [n, r] : rows) d.push_back(std::to_string(n) + " -> {" + r + "}");
  report(6, "N2 edge-width table", h == want, d);
}

void criterion_7(const Sets& g) {
  std::vector<std::string> d;
  auto nsc = verify_theorems(g.n2, Theorem::NscExists);
  auto types = verify_theorems(g.n2, Theorem::NonseparatingTypes);
  size_t n1_bad = 0;
  for (auto& t : g.n1)
    if (find_nonseparating_of_type(t, Sidedness::One, Leaving::Orientable).status != SearchStatus::Found) ++n1_bad;
  d.push_back("N2 with an NSC: " + std::to_string(nsc.checked - nsc.violators.size()) + "/" +
              std::to_string(nsc.checked));
  d.push_back("N2 with one-sided nonorientable-leaving and two-sided orientable-leaving cycles: " +
              std::to_string(types.checked - types.violators.size()) + "/" + std::to_string(types.checked));
  d.push_back("N1 with a one-sided orientable-leaving cycle: " + std::to_string(g.n1.size() - n1_bad) + "/" +
              std::to_string(g.n1.size()));
  for (auto& n : nsc.notes) d.push_back("violator: " + n);
  for (auto& n : types.notes) d.push_back("violator: " + n);
  report(7, "NSC and nonseparating type theorems", nsc.ok() && types.ok() && n1_bad == 0, d);
}

void criterion_8(const Sets& g) {
  std::vector<std::string> d;
  bool ok = true;
  for (auto [name, set] : {std::pair{"N1", &g.n1}, std::pair{"S1", &g.s1}, std::pair{"N2", &g.n2}}) {
    auto r = verify_theorems(*set, Theorem::NonseparatingThreeCyclesAtVertices);
    ok = ok && r.ok();
    d.push_back(std::string(name) + ": " + std::to_string(r.violators.size()) + " violators among " +
                std::to_string(r.checked));
    for (auto& n : r.notes) d.push_back("violator: " + n);
  }
  report(8, "two nonseparating 3-cycles at every vertex", ok, d);
}

void criterion_9(const Sets& g) {
  std::vector<std::string> d;
  auto lower_s1 = codes(g.s0);
  auto lower_n2 = codes(g.s0);
  for (auto& c : codes(g.n1)) lower_n2.insert(c);
  int bad_s1 = 0, bad_n2 = 0;
  std::set<CanonicalCode> hit_n2;
  for (auto& t : g.s1)
    for (auto& r : reduce_genus(t))
      if (!lower_s1.count(canonical_code(r))) ++bad_s1;
  for (auto& t : g.n2)
    for (auto& r : reduce_genus(t)) {
      auto c = canonical_code(r);
      if (!lower_n2.count(c)) ++bad_n2;
      hit_n2.insert(c);
    }
  d.push_back("S1 reductions outside {K4}: " + std::to_string(bad_s1));
  d.push_back("N2 reductions outside {K4} and the N1 set: " + std::to_string(bad_n2) + " (distinct targets reached: " +
              std::to_string(hit_n2.size()) + ")");
  report(9, "genus reduction lands in lower sets", bad_s1 == 0 && bad_n2 == 0, d);
}

void criterion_10(const Sets& g) {
  std::vector<std::string> d;
  auto t0 = Clock::now();
  bool ok = true;
  const std::pair<Surface, int> cases[] = {
      {Surface::N(2), 11}, {Surface::N(3), 16}, {Surface::N(4), 22}, {Surface::S(2), 17}};
  for (auto& [s, n] : cases) {
    auto t = build_large_irreducible(s);
    bool good = t.vertex_count() == n && surface_of(t) == s && is_irreducible(t);
    std::string line = to_string(s) + ": " + std::to_string(t.vertex_count()) + " vertices, " +
                       (is_irreducible(t) ? "irreducible" : "REDUCIBLE");
    if (s == Surface::N(2)) {
      bool member = codes(g.n2).count(canonical_code(t)) > 0;
      good = good && member;
      line += member ? ", in the generated N2 set" : ", NOT in the generated N2 set";
    }
    ok = ok && good;
    d.push_back(line);
  }
  bool strict = true;
  for (int gg = 3; gg <= 8; ++gg) {
    auto b = build_base(gg);
    bool e = every_edge_on_removed_face(b);
    bool r = every_edge_removed_or_rigid(b);
    strict = strict && e;
    d.push_back("B" + std::to_string(gg) + ": " + std::to_string(b.vertex_count()) +
                " vertices, every edge on a removed face: " + (e ? "yes" : "no") +
                "; on a removed face or on at least three 3-cycles: " + (r ? "yes" : "no"));
  }
  const double t = seconds_since(t0);
  d.push_back("time " + secs(t));
  report(10, "large irreducible constructions and bases", ok && strict && t < 600, d);
}

void criterion_11() {
  std::vector<std::string> d;
  auto t0 = Clock::now();
  auto t = n3_counterexample();
  bool valid = surface_of(t) == Surface::N(3);
  d.push_back("M joined with K7: " + std::to_string(t.vertex_count()) + " vertices on " + to_string(surface_of(t)));
  auto nn = find_nsc_with_genera(t, 1, std::array<bool, 2>{false, false}, 11);
  auto ns = find_nsc_with_genera(t, 1, std::array<bool, 2>{false, true}, 11);
  auto text = [](const CycleSearch& r) {
    return r.status == SearchStatus::Found ? "found " + cycle_text(r.cycle)
                                           : r.status == SearchStatus::None ? std::string("none (exhaustive)")
                                                                            : std::string("none up to the bound");
  };
  d.push_back("NSC into (N1, N2): " + text(nn));
  d.push_back("NSC into (N1, S1): " + text(ns));
  const double secs_taken = seconds_since(t0);
  d.push_back("time " + secs(secs_taken));
  bool ok = valid && nn.status != SearchStatus::Found && ns.status != SearchStatus::Found && secs_taken < 3600;
  report(11, "N3 example without the (N1, N2) and (N1, S1) NSCs", ok, d);
}

void criterion_12(const Sets& g) {
  std::vector<std::string> d;
  Hist all, almost;
  for_each_in_closure(g.s1, 10, [&](const Triangulation& t) {
    ++all[t.vertex_count()];
    if (is_almost_irreducible(t)) ++almost[t.vertex_count()];
  });
  int total = 0, above9 = 0;
  for (auto& [n, c] : almost) {
    total += c;
    if (n > 9) above9 += c;
  }
  d.push_back("S1 triangulations by vertices: " + hist_text(all));
  d.push_back("almost irreducible by vertices: " + hist_text(almost));
  report(12, "almost irreducible S1 census", total == 8 && above9 == 0, d);
}

void criterion_13() {
  std::vector<std::string> d;
  auto t0 = Clock::now();
  auto k7 = k7_torus();
  bool pm = is_pseudo_minimal(k7);
  auto cls = flip_equivalence_classes({k7});
  int flippable = 0;
  for (auto& e : k7.edges()) flippable += is_flippable(k7, e);
  bool singleton = cls.size() == 1 && cls[0].size() == 1 && flippable == 0;
  int reducible = 0, false_reports = 0;
  auto probe = [&](const Triangulation& t) {
    if (is_irreducible(t)) return;
    ++reducible;
    false_reports += !is_pseudo_minimal(t);
  };
  for (auto& site : enumerate_splits(k7, 0)) probe(split_vertex(k7, site));
  for (auto& t : splitting_closure(tetrahedron(), 7)) probe(t);
  const double t = seconds_since(t0);
  d.push_back(std::string("K7 pseudo-minimal: ") + (pm ? "yes" : "no") + ", flippable edges " +
              std::to_string(flippable) + ", flip class size " + std::to_string(cls.empty() ? 0 : cls[0].size()));
  d.push_back("reducible probes reported false: " + std::to_string(false_reports) + "/" + std::to_string(reducible));
  d.push_back("time " + secs(t));
  report(13, "pseudo-minimality smoke", pm && singleton && false_reports == reducible && t < 1.0, d);
}

void criterion_14() {
  std::vector<std::string> d;
  const std::pair<Surface, int> want[] = {{Surface::S(0), 4}, {Surface::S(1), 7}, {Surface::S(2), 10},
                                          {Surface::N(1), 6}, {Surface::N(2), 8}, {Surface::N(3), 9},
                                          {Surface::N(4), 10}};
  bool ok = true;
  std::string line;
  for (auto& [s, v] : want) {
    int got = v_min(s);
    ok = ok && got == v;
    line += to_string(s) + "=" + std::to_string(got) + (got == v ? "" : " (listed " + std::to_string(v) + ")") + " ";
  }
  d.push_back(line);
  d.push_back("the listed N4 value 10 disagrees with the stated V_min(N4) = 9, which the 37 nine-vertex N4 "
              "irreducibles confirm; 10 is the flip number N(N4)");
  report(14, "minimum vertex counts", ok, d);
}

// N3 up to 10 vertices: counts, edge widths, and the flip class of the minimal ones.
void supplementary_n3(const Sets& g) {
  auto t0 = Clock::now();
  GenerationJob job;
  job.target = Surface::N(3);
  job.cap = 10;
  job.seeds = {{Surface::N(1), g.n1}, {Surface::S(1), g.s1}, {Surface::N(2), g.n2}};
  auto n3 = generate_irreducible(job);
  auto h = edge_width_histogram(n3);
  std::map<std::pair<int, int>, int> want{{{9, 4}, 1},    {{9, 5}, 119},   {{9, 6}, 13},
                                          {{10, 3}, 1},   {{10, 4}, 140},  {{10, 5}, 1862}, {{10, 6}, 518}};
  std::map<int, std::string> rows;
  for (auto& [k, c] : h)
    rows[k.first] += (rows[k.first].empty() ? "" : ",") + std::to_string(k.second) + ":" + std::to_string(c);
  auto pm = flip_equivalence_classes(with_n(n3, 9));
  auto counts = vertex_histogram(n3);
  bool ok = counts == Hist{{9, 133}, {10, 2521}} && h == want && pm.size() == 1;
  std::printf("supplementary N3 up to 10 vertices: %s\n", ok ? "PASS" : "FAIL");
  std::printf("    counts %s\n", hist_text(counts).c_str());
  for (auto& [n, r] : rows) std::printf("    %d -> {%s}\n", n, r.c_str());
  std::printf("    9-vertex flip classes: %zu, time %s\n", pm.size(), secs(seconds_since(t0)).c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  Sets g;
  criterion_1(g);
  criterion_2(g);
  criterion_3(g);
  criterion_4(g);
  criterion_5(g);
  criterion_6(g);
  criterion_7(g);
  criterion_8(g);
  criterion_9(g);
  criterion_10(g);
  criterion_11();
  criterion_12(g);
  criterion_13();
  criterion_14();
  supplementary_n3(g);
  std::printf("%d failing\n", failures);
  return failures ? 1 : 0;
}
