#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dinf/arcs.hpp"
#include "dinf/oracle.hpp"

namespace dinf {

struct WindowVertex {
  int id = 0;
  std::string label;
  std::string kind;  // "edge", "puncture", "module", "shifted", "mesh"
  bool clipped = false;
};

struct TranslationQuiverWindow {
  std::vector<WindowVertex> vertices;
  std::vector<std::pair<int, int>> arrows;  // sorted, repeated for multiplicity
  std::map<int, int> tau;                   // partial
  std::map<int, int> sigma;                 // arrow index -> arrow index
  std::map<int, std::vector<int>> mesh;     // x -> middle terms y of tau x -> y -> x

  int arrow_count(int from, int to) const;
};

// edge windows also keep the edge behind every vertex id
struct EdgeQuiverWindow {
  TranslationQuiverWindow quiver;
  std::vector<TaggedEdge> edges;
  std::optional<int> find(const TaggedEdge& e) const;
};

EdgeQuiverWindow build_edge_quiver_window(const DiskModel& m, pos_t bound);
TranslationQuiverWindow build_ZQ_window(const FiniteQuiver& q, int lo, int hi);
TranslationQuiverWindow build_ar_window(const ARQuiver& ar);

// interior vertices where #(y -> x) != #(tau x -> y) for some y
std::vector<int> translation_law_violations(const TranslationQuiverWindow& w);

std::string to_dot(const TranslationQuiverWindow& w);

}  // namespace dinf
