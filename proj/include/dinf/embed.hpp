#pragma once

#include <map>
#include <vector>

#include "dinf/category.hpp"
#include "dinf/oracle.hpp"

namespace dinf {

// class of an object of the finite cluster category: a module by its dimension
// vector, or a shifted projective by its vertex
struct FiniteClass {
  bool shifted = false;
  int vertex = 0;
  DimVector dim;

  friend auto operator<=>(const FiniteClass&, const FiniteClass&) = default;
};

// truncation of the thread to a finite spine; the quiver is D_k with
// vertex order [fork up, fork down, spine...], spine sorted from the fork outwards
struct Spine {
  DiskModel model;  // uncompleted (the doubled model for completed input)
  std::vector<QuiverVertex> tail;
  int k() const { return static_cast<int>(tail.size()) + 2; }
  int index_of(const QuiverVertex& v) const;  // 1-based, 0 if absent
};

Spine make_spine(const DiskModel& m, std::vector<QuiverVertex> tail);
// smallest spine carrying every presentation of xs (objects already in m)
Spine spine_for(const DiskModel& m, const std::vector<Indecomposable>& xs);

// requires every presentation vertex of x on the spine
FiniteClass classify(const Spine& s, const Indecomposable& x);

struct WindowEmbedding {
  Spine spine;
  FiniteQuiver quiver;
  std::map<Indecomposable, FiniteObject> objects;
  std::map<Indecomposable, Indecomposable> routed;  // after the doubling map (identity if uncompleted)
};

WindowEmbedding embed_window(const DiskModel& m, const std::vector<Indecomposable>& xs,
                             pos_t bound);

// object map into the uncompleted model used by the embedding
Indecomposable route(const DiskModel& m, const Indecomposable& x);
DiskModel routed_model(const DiskModel& m);

// cluster Ext of the finite images of two objects of m
int oracle_cluster_ext(const DiskModel& m, const Indecomposable& x, const Indecomposable& y);

}  // namespace dinf
