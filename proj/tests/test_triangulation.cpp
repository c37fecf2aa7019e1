#include "doctest.h"
#include "fixtures.hpp"
#include "surftri/analyze.hpp"
#include "surftri/error.hpp"
#include "surftri/triangulation.hpp"

using namespace surftri;
using namespace fixtures;

namespace {
Errc code_of(int n, std::vector<Face> faces) {
  try {
    Triangulation::from_faces(n, std::move(faces));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted");
  return Errc::InvalidArgument;
}
}  // namespace

TEST_CASE("validation accepts the tetrahedron") {
  auto t = Triangulation::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 6);
  CHECK(euler_characteristic(t) == 2);
  CHECK(is_orientable(t));
  CHECK(surface_of(t) == Surface::S(0));
}

TEST_CASE("validation errors") {
  CHECK(code_of(3, {{0, 1, 2}, {0, 1, 2}}) == Errc::SharedEdges);
  CHECK(code_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}}) ==
        Errc::EdgeDegree);
  CHECK(code_of(4, {{0, 1, 1}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) == Errc::NonTriangle);
  CHECK(code_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 4}}) == Errc::LabelRange);
  CHECK(code_of(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) == Errc::LabelRange);
  // Two tetrahedra: every edge in two faces but the graph falls apart.
  CHECK(code_of(8, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}}) ==
        Errc::Disconnected);
  // Two octahedra sharing one apex vertex: links of 0 form two cycles.
  std::vector<Face> f{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}, {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 1, 4},
                      {0, 6, 7}, {0, 7, 8}, {0, 8, 9}, {0, 6, 9}, {10, 6, 7}, {10, 7, 8}, {10, 8, 9}, {10, 6, 9}};
  CHECK(code_of(11, f) == Errc::Pinched);
}

TEST_CASE("euler characteristic and orientability of known embeddings") {
  CHECK(euler_characteristic(k7_torus()) == 0);
  CHECK(is_orientable(k7_torus()));
  CHECK(surface_of(k7_torus()) == Surface::S(1));
  CHECK(euler_characteristic(k6_projective()) == 1);
  CHECK_FALSE(is_orientable(k6_projective()));
  CHECK(surface_of(k6_projective()) == Surface::N(1));
  CHECK(surface_of(icosahedron()) == Surface::S(0));
  CHECK(surface_of(octahedron()) == Surface::S(0));
}

TEST_CASE("validation is independent of labeling") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto t = relabeled(k6_projective(), seed);
    CHECK(surface_of(t) == Surface::N(1));
    CHECK(3 * t.face_count() == 2 * t.edge_count());
  }
}

TEST_CASE("rotations are the link cycles") {
  auto t = icosahedron();
  for (int v = 0; v < t.vertex_count(); ++v) {
    auto r = t.rotation(v);
    CHECK(r.size() == 5);
    for (size_t i = 0; i < r.size(); ++i) CHECK(t.has_face(make_face(v, r[i], r[(i + 1) % r.size()])));
  }
}

TEST_CASE("record round trip") {
  auto t = relabeled(k7_torus(), 3);
  auto s = format_record(t);
  auto u = parse_record(s);
  CHECK(u == t);
  CHECK(format_record(u) == s);
  CHECK_THROWS_AS(parse_record("0,1"), Error);
  CHECK_THROWS_AS(parse_record("0,1,2;"), Error);
  CHECK_THROWS_AS(parse_record(""), Error);
}
