#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dinf/linalg.hpp"

namespace dinf {

// Dynkin D_k, straight orientation: forks 1,2; spine 3..k; arrows 3->1, 3->2, (i+1)->i.
struct FiniteQuiver {
  int k = 4;
  std::vector<std::pair<int, int>> arrows;  // 1-based (source, target)
};

FiniteQuiver dynkin_d(int k);

using DimVector = std::vector<int>;  // index v-1

struct FiniteRep {
  int k = 0;
  DimVector dim;
  std::vector<QMatrix> maps;  // one per arrow, dim(target) x dim(source)
};

// a module or a shifted projective P_v[1] of the cluster category
struct FiniteObject {
  bool shifted = false;
  int vertex = 0;  // 1-based, shifted only
  FiniteRep rep;   // module only
};

struct ExchangeMatrix {
  std::vector<std::vector<std::int64_t>> b;
  int size() const { return static_cast<int>(b.size()); }
  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

// AR quiver from knitting; dimension vectors only
struct ARVertex {
  bool shifted = false;
  int proj = 0;     // for shifted: which P_v[1]; for layer-0 modules: v
  int layer = 0;    // tau^{-layer} of a projective (shifted: position in its orbit)
  int orbit = 0;    // 1-based quiver vertex of the orbit
  DimVector dim;    // module dimension vector, or dim P_v for shifted
  std::string label;
};

struct ARQuiver {
  int k = 0;
  bool cluster = false;
  std::vector<ARVertex> vertices;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::pair<int, int>> tau;  // (x, tau x)
  int find_module(const DimVector& d) const;
  int find_shifted(int v) const;
};

ARQuiver knit_module_ar(const FiniteQuiver& q);
ARQuiver knit_cluster_ar(const FiniteQuiver& q);

std::vector<FiniteRep> enumerate_indecomposables(const FiniteQuiver& q);

DimVector projective_dim(const FiniteQuiver& q, int v);
FiniteRep generic_rep(const FiniteQuiver& q, const DimVector& d);
FiniteRep projective_rep(const FiniteQuiver& q, int v);

int hom_dim(const FiniteRep& m, const FiniteRep& n);
int euler_form(const FiniteQuiver& q, const DimVector& d1, const DimVector& d2);
int ext1_dim(const FiniteRep& m, const FiniteRep& n);
int cluster_ext_dim(const FiniteObject& x, const FiniteObject& y);

// cached: cluster Ext between classes of D_k given by dims / shifted vertex
int cluster_ext_classes(int k, bool xs, int xv, const DimVector& xd, bool ys, int yv,
                        const DimVector& yd);

std::vector<FiniteObject> cluster_objects(const FiniteQuiver& q);
// index sets into cluster_objects(q)
std::vector<std::vector<int>> enumerate_cluster_tilting(const FiniteQuiver& q);

ExchangeMatrix exchange_matrix(const FiniteQuiver& q);
ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& b, int z);
bool is_skew_symmetric(const ExchangeMatrix& b);

std::string dim_label(const DimVector& d);

}  // namespace dinf
