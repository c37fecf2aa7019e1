#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "surftri/analyze.hpp"
#include "surftri/canon.hpp"
#include "surftri/error.hpp"
#include "surftri/generate.hpp"
#include "surftri/transform.hpp"

using namespace surftri;
using namespace fixtures;

namespace {

std::set<CanonicalCode> codes(const std::vector<Triangulation>& ts) {
  std::set<CanonicalCode> s;
  for (auto& t : ts) s.insert(canonical_code(t));
  return s;
}

std::vector<Triangulation> irreducible_only(const std::vector<Triangulation>& ts) {
  std::vector<Triangulation> out;
  for (auto& t : ts)
    if (is_irreducible(t)) out.push_back(t);
  return out;
}

const std::vector<Triangulation>& n1_set() {
  static const auto s = generate_irreducible({Surface::N(1)});
  return s;
}

}  // namespace

TEST_CASE("sphere splitting closure counts") {
  // Known numbers of sphere triangulations with 4..10 vertices.
  const int expected[] = {1, 1, 2, 5, 14, 50, 233};
  std::map<int, int> h;
  for (auto& t : splitting_closure(tetrahedron(), 10)) ++h[t.vertex_count()];
  for (int n = 4; n <= 10; ++n) CHECK(h[n] == expected[n - 4]);
}

TEST_CASE("closure agrees with the backtracking census") {
  auto closure = splitting_closure(tetrahedron(), 8);
  for (int n = 4; n <= 8; ++n) {
    std::vector<Triangulation> level;
    for (auto& t : closure)
      if (t.vertex_count() == n) level.push_back(t);
    CHECK(codes(level) == codes(brute_force_triangulations(Surface::S(0), n)));
  }
}

TEST_CASE("grow units") {
  CHECK(grow_units(Surface::S(0)).empty());
  auto s1 = grow_units(Surface::S(1));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].id() == "handle:S0");
  auto n1 = grow_units(Surface::N(1));
  REQUIRE(n1.size() == 1);
  CHECK(n1[0].id() == "crosscap:S0");
  std::vector<std::string> ids;
  for (auto& u : grow_units(Surface::N(3))) ids.push_back(u.id());
  CHECK(ids == std::vector<std::string>{"handle:N1", "crosscap:S1", "crosscap:N2"});
  ids.clear();
  for (auto& u : grow_units(Surface::N(2))) ids.push_back(u.id());
  CHECK(ids == std::vector<std::string>{"handle:S0", "crosscap:N1"});
}

TEST_CASE("default caps and long runs") {
  CHECK(default_cap(Surface::S(0)) == 4);
  CHECK(default_cap(Surface::N(1)) == 7);
  CHECK(default_cap(Surface::S(1)) == 10);
  CHECK(default_cap(Surface::N(2)) == 11);
  CHECK_FALSE(is_long_run(Surface::S(1), 10));
  CHECK_FALSE(is_long_run(Surface::N(2), 11));
  CHECK(is_long_run(Surface::N(4), 22));
  CHECK(is_long_run(Surface::S(2), 17));
}

TEST_CASE("sphere and projective plane") {
  auto s0 = generate_irreducible({Surface::S(0)});
  REQUIRE(s0.size() == 1);
  CHECK(are_equivalent(s0[0], tetrahedron()));
  auto& n1 = n1_set();
  CHECK(n1.size() == 2);
  CHECK(vertex_histogram(n1) == std::map<int, int>{{6, 1}, {7, 1}});
  CHECK(are_equivalent(n1[0], k6_projective()) != are_equivalent(n1[1], k6_projective()));
  for (auto& t : n1) {
    CHECK(surface_of(t) == Surface::N(1));
    CHECK(is_irreducible(t));
    CHECK(canonical_form(t) == t);
  }
}

TEST_CASE("irreducible census matches backtracking") {
  std::vector<Triangulation> from_census;
  for (int n = 6; n <= 7; ++n)
    for (auto& t : irreducible_only(brute_force_triangulations(Surface::N(1), n))) from_census.push_back(t);
  CHECK(codes(from_census) == codes(n1_set()));

  auto s1 = generate_irreducible({Surface::S(1)});
  std::vector<Triangulation> s1_7;
  for (auto& t : s1)
    if (t.vertex_count() == 7) s1_7.push_back(t);
  CHECK(codes(irreducible_only(brute_force_triangulations(Surface::S(1), 7))) == codes(s1_7));
}

TEST_CASE("torus") {
  auto s1 = generate_irreducible({Surface::S(1), 0, {}, "", 2});
  CHECK(s1.size() == 21);
  CHECK(vertex_histogram(s1) == std::map<int, int>{{7, 1}, {8, 4}, {9, 15}, {10, 1}});
  for (size_t i = 1; i < s1.size(); ++i) CHECK(format_record(s1[i - 1]) < format_record(s1[i]));
}

TEST_CASE("worker count does not change results") {
  auto seeds = std::vector<Triangulation>{tetrahedron()};
  auto a = grow_handle_or_crosshandle(seeds, Surface::S(1), 9, 1);
  auto b = grow_handle_or_crosshandle(seeds, Surface::S(1), 9, 3);
  CHECK(codes(a) == codes(b));
  CHECK(a.size() == 20);
}

TEST_CASE("crosscap at a vertex matches the hexagon identification") {
  std::vector<Triangulation> k4{tetrahedron()};
  CHECK(codes(grow_crosscap(k4, Surface::N(1), 7)) == codes(grow_crosscap_by_hexagon(k4, Surface::N(1), 7)));
  CHECK(codes(grow_crosscap(n1_set(), Surface::N(2), 8)) ==
        codes(grow_crosscap_by_hexagon(n1_set(), Surface::N(2), 8)));
  CHECK(codes(grow_crosscap(n1_set(), Surface::N(2), 9, 2)) == codes(grow_crosscap(n1_set(), Surface::N(2), 9, 1)));
}

TEST_CASE("missing seeds") {
  GenerationJob job{Surface::N(2)};
  try {
    generate_irreducible(job);
    FAIL("expected INCOMPLETE_SEEDS");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncompleteSeeds);
  }
  job.seeds[Surface::N(1)] = {tetrahedron()};
  CHECK_THROWS_AS(generate_irreducible(job), Error);
}

TEST_CASE("checkpoint and resume") {
  auto dir = std::filesystem::temp_directory_path() / "surftri_ckpt_test";
  std::filesystem::remove_all(dir);
  GenerationJob job{Surface::N(1)};
  job.checkpoint_dir = dir.string();
  auto first = generate_irreducible(job);
  CHECK(first.size() == 2);
  std::ifstream log(dir / "done.log");
  std::string line;
  std::getline(log, line);
  CHECK(line == "crosscap:S0");
  // A resumed run skips the finished unit and reads its results back.
  auto second = generate_irreducible(job);
  CHECK(codes(first) == codes(second));
  std::filesystem::remove_all(dir);
}

TEST_CASE("reducing genus") {
  auto s1 = generate_irreducible({Surface::S(1)});
  for (auto& t : s1) {
    auto r = reduce_genus(t);
    REQUIRE(r.size() == 1);
    CHECK(are_equivalent(r[0], tetrahedron()));
  }
  for (auto& t : n1_set()) {
    auto r = reduce_genus(t);
    REQUIRE(r.size() == 1);
    CHECK(are_equivalent(r[0], tetrahedron()));
  }
  CHECK_THROWS_AS(reduce_genus(icosahedron()), Error);
}

TEST_CASE("canonical sets") {
  auto a = canonical_form(k7_torus());
  auto b = canonical_form(k6_projective());
  auto s = canonical_set({a, b, canonical_form(relabeled(k7_torus(), 3)), a});
  CHECK(s.size() == 2);
  CHECK(format_record(s[0]) < format_record(s[1]));
}
