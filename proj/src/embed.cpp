#include "dinf/embed.hpp"

#include <algorithm>

namespace dinf {

namespace {

using V = QuiverVertex;
using X = Indecomposable;

const V kFarEnd = V::tail(MarkedPoint::at(1, 1));

}  // namespace

int Spine::index_of(const QuiverVertex& v) const {
  if (v.kind == V::ForkUp) return 1;
  if (v.kind == V::ForkDown) return 2;
  auto it = std::find(tail.begin(), tail.end(), v);
  return it == tail.end() ? 0 : static_cast<int>(it - tail.begin()) + 3;
}

Spine make_spine(const DiskModel& m, std::vector<QuiverVertex> tail) {
  if (m.completed) throw Failure(ErrorCode::ShapeMismatch, "spines live in uncompleted models");
  tail.push_back(center_vertex());
  std::sort(tail.begin(), tail.end(),
            [&](const V& x, const V& y) { return closer_to_fork(m, x, y); });
  tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
  if (tail.size() < 2) tail.push_back(kFarEnd);
  return Spine{m, tail};
}

Spine spine_for(const DiskModel& m, const std::vector<Indecomposable>& xs) {
  std::vector<V> t;
  for (const auto& x : xs)
    for (const auto& v : generator_vertices(m, x)) t.push_back(v);
  return make_spine(m, t);
}

FiniteClass classify(const Spine& s, const Indecomposable& x) {
  for (const auto& v : generator_vertices(s.model, x))
    if (!s.index_of(v))
      throw Failure(ErrorCode::SupportOverflow, to_string(x) + " is not carried by the spine");
  FiniteClass c;
  if (x.kind == X::P1) {
    c.shifted = true;
    c.vertex = s.index_of(x.a);
    c.dim = projective_dim(dynkin_d(s.k()), c.vertex);
    return c;
  }
  c.dim.assign(s.k(), 0);
  c.dim[0] = dimension_at(s.model, x, V::up());
  c.dim[1] = dimension_at(s.model, x, V::down());
  for (std::size_t i = 0; i < s.tail.size(); ++i) c.dim[i + 2] = dimension_at(s.model, x, s.tail[i]);
  return c;
}

DiskModel routed_model(const DiskModel& m) { return m.completed ? doubled_model(m) : m; }

Indecomposable route(const DiskModel& m, const Indecomposable& x) {
  return m.completed ? iota(m, x) : x;
}

WindowEmbedding embed_window(const DiskModel& m, const std::vector<Indecomposable>& xs,
                             pos_t bound) {
  WindowEmbedding w;
  std::vector<X> routed;
  for (const auto& x : xs) {
    if (auto s = validate_indec(m, x); !s) throw Failure(s.error().code, s.error().message);
    dimension_window(m, x, bound);  // SupportOverflow outside the window
    routed.push_back(route(m, x));
    w.routed[x] = routed.back();
  }
  w.spine = spine_for(routed_model(m), routed);
  w.quiver = dynkin_d(w.spine.k());
  for (const auto& x : xs) {
    FiniteClass c = classify(w.spine, w.routed[x]);
    FiniteObject o;
    if (c.shifted) {
      o.shifted = true;
      o.vertex = c.vertex;
    } else if (w.routed[x].kind == X::P && w.routed[x].a.is_fork()) {
      o.rep = projective_rep(w.quiver, w.routed[x].a.kind == V::ForkUp ? 1 : 2);
    } else {
      o.rep = generic_rep(w.quiver, c.dim);
    }
    w.objects[x] = o;
  }
  return w;
}

int oracle_cluster_ext(const DiskModel& m, const Indecomposable& x, const Indecomposable& y) {
  const DiskModel d = routed_model(m);
  const X rx = route(m, x), ry = route(m, y);
  Spine s = spine_for(d, {rx, ry});
  FiniteClass cx = classify(s, rx), cy = classify(s, ry);
  return cluster_ext_classes(s.k(), cx.shifted, cx.vertex, cx.dim, cy.shifted, cy.vertex, cy.dim);
}

}  // namespace dinf
