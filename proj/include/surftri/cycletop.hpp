#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "surftri/triangulation.hpp"

namespace surftri {

// Vertex sequence of a simple cycle, least vertex first, then the direction
// whose second vertex is smaller.
using Cycle = std::vector<int>;
Cycle normalize_cycle(std::vector<int> c);

// The result of cutting along a cycle: faces over fresh labels, the boundary
// cycles, and the original label of every fresh label.
struct BorderedComplex {
  int vertex_count = 0;
  std::vector<Face> faces;
  std::vector<std::vector<int>> boundaries;
  std::vector<int> original;
};

enum class Sidedness { One, Two };
enum class Leaving { Orientable, Nonorientable };

struct CappedComponent {
  int euler_genus = 0;
  bool orientable = true;
  int boundaries = 0;
};

struct CycleClassification {
  bool separating = false;
  bool contractible = false;
  Sidedness sided = Sidedness::Two;
  Leaving leaving = Leaving::Orientable;
  std::vector<CappedComponent> components;

  bool nsc() const { return separating && !contractible; }
};

enum class SearchStatus { Found, None, Exhausted };

struct CycleSearch {
  SearchStatus status = SearchStatus::None;
  Cycle cycle;  // witness when found
  int length() const { return static_cast<int>(cycle.size()); }
};

BorderedComplex cut_along_cycle(const Triangulation& t, const Cycle& c);
CycleClassification classify_cycle(const Triangulation& t, const Cycle& c);
// Closes every boundary: 3-cycles with a face, longer ones with a cone vertex.
Triangulation cap_boundaries(const BorderedComplex& b);

// Calls f for each simple cycle of exactly `length` vertices in normal form,
// ordered by start vertex; stops early when f returns false.
void for_each_cycle(const Triangulation& t, int length, const std::function<bool(const Cycle&)>& f);
std::vector<Cycle> enumerate_cycles(const Triangulation& t, int max_len);

// Fast component test shared by the searches below.
bool is_separating(const Triangulation& t, const Cycle& c);

// Shortest NSC. max_len <= 0 means n, which certifies absence (status None);
// a smaller bound without a witness yields Exhausted.
CycleSearch edge_width(const Triangulation& t, int max_len = 0);

// NSC whose capped sides have Euler genera h and g - h. `require` gives the
// orientability of the genus-h side and of the other side.
CycleSearch find_nsc_with_genera(const Triangulation& t, int h,
                                 std::optional<std::array<bool, 2>> require = std::nullopt, int max_len = 0);

CycleSearch find_nonseparating_of_type(const Triangulation& t, Sidedness s, Leaving l, int max_len = 0);

int nonseparating_3cycles_at(const Triangulation& t, int v);

}  // namespace surftri
