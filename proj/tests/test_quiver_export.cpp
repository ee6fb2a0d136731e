#include <doctest.h>

#include <algorithm>

#include "dinf/quiver_export.hpp"

using namespace dinf;

namespace {
MarkedPoint P(int h, pos_t a) { return MarkedPoint::at(h, a); }
MarkedPoint I(int h) { return MarkedPoint::limit(h); }
}  // namespace

TEST_CASE("edge window arrows and translation") {
  auto w = build_edge_quiver_window(DiskModel{1, false}, 2);
  auto from = w.find(TaggedEdge::radius(P(1, 0), 1));
  auto to = w.find(TaggedEdge::arc(P(1, 0), P(1, -1)));
  REQUIRE(from);
  REQUIRE(to);
  CHECK(w.quiver.arrow_count(*from, *to) == 1);

  auto c = build_edge_quiver_window(DiskModel{1, true}, 2);
  auto plus = c.find(TaggedEdge::radius(I(1), 1));
  auto minus = c.find(TaggedEdge::radius(I(1), -1));
  REQUIRE(plus);
  REQUIRE(minus);
  CHECK(c.quiver.tau.at(*plus) == *minus);
  CHECK(c.quiver.tau.at(*minus) == *plus);
}

TEST_CASE("translation law at interior vertices") {
  for (DiskModel m : {DiskModel{1, false}, DiskModel{2, false}, DiskModel{1, true}, DiskModel{2, true}}) {
    auto w = build_edge_quiver_window(m, 4);
    CHECK(translation_law_violations(w.quiver).empty());
    const long interior = std::count_if(w.quiver.vertices.begin(), w.quiver.vertices.end(),
                                        [](const WindowVertex& v) { return !v.clipped; });
    CHECK(interior > 0);
    // sigma pairs each arrow into an interior vertex with one out of its translate
    for (const auto& [x, mids] : w.quiver.mesh)
      for (int y : mids) CHECK(w.quiver.arrow_count(w.quiver.tau.at(x), y) >= 1);
  }
}

TEST_CASE("ZQ windows") {
  auto q = dynkin_d(5);
  auto z = build_ZQ_window(q, 0, 3);
  CHECK(z.vertices.size() == 20);
  CHECK(z.arrows.size() == 28);
  const int v3x = 3 * 5 + (2 - 1);  // (3,2)
  CHECK(z.tau.at(v3x) == 2 * 5 + (2 - 1));
  CHECK(z.vertices[v3x].label == "(3,2)");
  // (i,x) -> (i,y) for every arrow x -> y of Q
  for (auto [x, y] : q.arrows) CHECK(z.arrow_count(5 + x - 1, 5 + y - 1) == 1);
  auto wide = build_ZQ_window(q, -2, 6);
  CHECK(translation_law_violations(wide).empty());
  for (const auto& [x, mids] : wide.mesh) CHECK_FALSE(mids.empty());

  auto ar = build_ar_window(knit_module_ar(q));
  CHECK(ar.vertices.size() == z.vertices.size());
  CHECK(ar.arrows.size() == z.arrows.size());
  CHECK(translation_law_violations(ar).empty());
  CHECK(translation_law_violations(build_ar_window(knit_cluster_ar(q))).empty());
}

TEST_CASE("dot output") {
  CHECK(to_dot(TranslationQuiverWindow{}) == "digraph window {\n}\n");
  auto ar = build_ar_window(knit_module_ar(dynkin_d(5)));
  const std::string d = to_dot(ar);
  CHECK(d == to_dot(build_ar_window(knit_module_ar(dynkin_d(5)))));
  long nodes = 0;
  for (std::size_t p = d.find("[kind="); p != std::string::npos; p = d.find("[kind=", p + 1)) ++nodes;
  CHECK(nodes == 20);
  CHECK(d.find("style=dashed") != std::string::npos);
  CHECK(d.find("\"P5\"") != std::string::npos);
}
