#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surftri/surface.hpp"

namespace surftri {

using Face = std::array<int, 3>;  // ascending labels
using Edge = std::array<int, 2>;  // ascending labels

inline Face make_face(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}
inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// A simple triangulation of a closed surface, stored as a sorted face set
// with the derived link cycle (rotation) of every vertex and an adjacency
// bitset. Immutable once built.
class Triangulation {
 public:
  // Validates; throws Error with NON_TRIANGLE, EDGE_DEGREE, SHARED_EDGES,
  // PINCHED, DISCONNECTED or LABEL_RANGE.
  static Triangulation from_faces(int n, std::vector<Face> faces);

  // Trusted: rot[v] must be the link cycle of v in a valid triangulation.
  // Used on hot paths where validity holds by construction.
  static Triangulation from_rotations(const std::vector<std::vector<int>>& rot);

  int vertex_count() const { return n_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(rot_.size() / 2); }
  const std::vector<Face>& faces() const { return faces_; }

  int degree(int v) const { return off_[v + 1] - off_[v]; }
  // Link cycle of v; direction is arbitrary but fixed.
  std::span<const int> rotation(int v) const {
    return {rot_.data() + off_[v], static_cast<size_t>(degree(v))};
  }
  int position_in_rotation(int v, int u) const;  // -1 when not adjacent

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  int adjacency_words() const { return words_; }
  const std::uint64_t* adjacency_row(int v) const {
    return adj_.data() + static_cast<size_t>(v) * words_;
  }
  int common_neighbor_count(int u, int v) const;

  std::vector<Edge> edges() const;  // sorted
  bool has_edge(Edge e) const;
  bool has_face(const Face& f) const;

  bool operator==(const Triangulation& o) const {
    return n_ == o.n_ && faces_ == o.faces_;
  }

 private:
  void build_adjacency();

  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<int> off_;
  std::vector<int> rot_;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

int euler_characteristic(const Triangulation& t);
bool is_orientable(const Triangulation& t);
Surface surface_of(const Triangulation& t);

// A face set in which every label is shifted through `map`; helper for transforms.
std::vector<Face> relabel_faces(const std::vector<Face>& faces, const std::vector<int>& map);

// One record: ascending comma-joined triples, faces sorted, single spaces.
std::string format_record(const Triangulation& t);
Triangulation parse_record(std::string_view line);  // throws Errc::Parse or validation errors

}  // namespace surftri
