#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dinf/arcs.hpp"

namespace dinf {

struct QuiverVertex {
  enum Kind { ForkUp, ForkDown, Tail };
  Kind kind = Tail;
  MarkedPoint pt{};  // meaningful for Tail only

  static QuiverVertex up() { return {ForkUp, MarkedPoint::at(1, -1)}; }
  static QuiverVertex down() { return {ForkDown, MarkedPoint::at(1, -1)}; }
  static QuiverVertex tail(MarkedPoint p) { return {Tail, p}; }
  bool is_fork() const { return kind != Tail; }

  friend auto operator<=>(const QuiverVertex&, const QuiverVertex&) = default;
};

// Objects of the fundamental domain: modules and shifted projectives.
//   P, P1 : a = vertex
//   Bar   : a = top (fork or tail), b = end
//   Dbl   : a = the vertex where dimension 2 starts, b = end
//   Hob   : a = excluded infimum (j,inf), b = end
struct Indecomposable {
  enum Kind { P, P1, Bar, Dbl, Hob };
  Kind kind = P;
  QuiverVertex a{};
  QuiverVertex b{};

  static Indecomposable proj(QuiverVertex v) { return {P, v, {}}; }
  static Indecomposable shifted(QuiverVertex v) { return {P1, v, {}}; }
  static Indecomposable bar(QuiverVertex top, QuiverVertex end) { return {Bar, top, end}; }
  static Indecomposable dbl(QuiverVertex deep, QuiverVertex end) { return {Dbl, deep, end}; }
  static Indecomposable hob(int j, QuiverVertex end) {
    return {Hob, QuiverVertex::tail(MarkedPoint::limit(j)), end};
  }

  friend auto operator<=>(const Indecomposable&, const Indecomposable&) = default;
};

// tail vertices exclude the two labels reserved for the fork
bool is_tail_point(const MarkedPoint& p);
// strict "closer to the fork" order on tail vertices; forks sit above every tail vertex
bool closer_to_fork(const DiskModel& m, const QuiverVertex& x, const QuiverVertex& y);
// a path u -> w exists (u == w allowed)
bool has_path(const DiskModel& m, const QuiverVertex& u, const QuiverVertex& w);
QuiverVertex center_vertex();

Status validate_indec(const DiskModel& m, const Indecomposable& x);

Indecomposable ar_translate(const DiskModel& m, const Indecomposable& x);
Indecomposable ar_translate_inverse(const DiskModel& m, const Indecomposable& x);

TaggedEdge phi(const DiskModel& m, const Indecomposable& x);
Result<Indecomposable> phi_inverse(const DiskModel& m, const TaggedEdge& e);

struct ExtVerdict {
  bool positive = false;         // some Ext in either direction
  bool shared_limit = false;     // images touch a common accumulation point
  bool above_threshold = false;  // the sum exceeds the cutoff that applies to the pair
  int dim_sum = -1;              // exact sum when the engine knows it
};

ExtVerdict ext_verdict(const DiskModel& m, const Indecomposable& x, const Indecomposable& y);
bool ext_sum_positive(const DiskModel& m, const Indecomposable& x, const Indecomposable& y);
bool compatible(const DiskModel& m, const Indecomposable& x, const Indecomposable& y);

// vertex -> dimension for every quiver vertex of window(bound) (forks included)
std::map<QuiverVertex, int> dimension_window(const DiskModel& m, const Indecomposable& x,
                                             pos_t bound);
int dimension_at(const DiskModel& m, const Indecomposable& x, const QuiverVertex& v);

// vertices at which a minimal projective presentation has generators (tail only)
std::vector<QuiverVertex> generator_vertices(const DiskModel& m, const Indecomposable& x);

// every object whose coordinates lie in window(bound)
std::vector<Indecomposable> window_objects(const DiskModel& m, pos_t bound);

// completed model -> model with 2n rays, the accumulation point j becoming ray 2j
DiskModel doubled_model(const DiskModel& m);
Indecomposable iota(const DiskModel& m, const Indecomposable& x);
// back from the doubled model; collapse(m, iota(m, x)) == x
Indecomposable collapse(const DiskModel& m, const Indecomposable& y);
// representative of x pushed along the contracted rays towards the fork
Indecomposable slide_up(const DiskModel& doubled, const Indecomposable& x);

std::string to_string(const QuiverVertex& v);
std::string to_string(const Indecomposable& x);

// exact cluster-category Ext dimension between two objects of an uncompleted model,
// computed from projective presentations
int presentation_cluster_ext(const DiskModel& m, const Indecomposable& x,
                             const Indecomposable& y);

}  // namespace dinf
