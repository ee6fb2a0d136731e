#include <doctest.h>

#include <cmath>

#include "dinf/arcs.hpp"

using namespace dinf;

namespace {

MarkedPoint P(int h, pos_t a) { return MarkedPoint::at(h, a); }
MarkedPoint I(int h) { return MarkedPoint::limit(h); }
TaggedEdge A(MarkedPoint p, MarkedPoint q) { return TaggedEdge::arc(p, q); }
TaggedEdge R(MarkedPoint p, int tag) { return TaggedEdge::radius(p, tag); }

// Geometric oracle: points on the unit circle, ray h filling the sector
// [2pi(h-1)/n, 2pi h/n) with positions squeezed by atan, (h,inf) at the sector end.
// An arc from p to q hugs the boundary along the ccw interval (p,q), at a depth that
// grows with the interval length; a puncture edge is a radius.
double angle(int n, const MarkedPoint& p) {
  const double w = 2 * M_PI / n;
  if (p.inf) return w * p.ray;
  return w * (p.ray - 1) + w * (std::atan(static_cast<double>(p.pos) - 0.5) / M_PI + 0.5);
}

double ccw_len(double a, double b) {
  double d = std::fmod(b - a, 2 * M_PI);
  return d < 0 ? d + 2 * M_PI : d;
}

// strictly inside the ccw interval (a, b)
bool inside(double x, double a, double b) {
  const double eps = 1e-12;
  const double l = ccw_len(a, x);
  return l > eps && l < ccw_len(a, b) - eps;
}

int geometric_crossings(int n, const TaggedEdge& e, const TaggedEdge& f) {
  if (e.is_puncture() && f.is_puncture()) return (e.from != f.from && e.tag != f.tag) ? 1 : 0;
  if (e.is_puncture() || f.is_puncture()) {
    const TaggedEdge& r = e.is_puncture() ? e : f;
    const TaggedEdge& o = e.is_puncture() ? f : e;
    return inside(angle(n, r.from), angle(n, o.from), angle(n, o.to)) ? 1 : 0;
  }
  const double e0 = angle(n, e.from), e1 = angle(n, e.to), f0 = angle(n, f.from), f1 = angle(n, f.to);
  const bool e_deeper = ccw_len(e0, e1) > ccw_len(f0, f1);
  const double d0 = e_deeper ? e0 : f0, d1 = e_deeper ? e1 : f1;  // deep curve
  const double s0 = e_deeper ? f0 : e0, s1 = e_deeper ? f1 : e1;  // shallow curve
  // the deep curve's radial legs pass the shallow curve's circular part
  int c = 0;
  for (double leg : {d0, d1})
    if (inside(leg, s0, s1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("edge validation") {
  DiskModel m{1, false};
  CHECK(validate_edge(m, A(P(1, 0), P(1, 2))).ok());
  CHECK(validate_edge(m, A(P(1, 0), P(1, 1))).error().code == ErrorCode::BoundaryEdge);
  CHECK(validate_edge(m, TaggedEdge{P(1, 0), P(1, 5), -1}).error().code == ErrorCode::BadTag);
  CHECK(validate_edge(m, A(P(1, 0), I(1))).error().code == ErrorCode::UnknownPoint);
  CHECK(validate_edge(DiskModel{1, true}, A(P(1, 0), I(1))).ok());
}

TEST_CASE("crossing examples") {
  DiskModel m{1, false};
  CHECK(crossing_number(m, R(P(1, 2), 1), R(P(1, 5), -1)) == 1);
  CHECK(crossing_number(m, R(P(1, 2), 1), R(P(1, 5), 1)) == 0);
  CHECK(crossing_number(m, R(P(1, 2), 1), R(P(1, 2), -1)) == 0);
  CHECK(crossing_number(m, A(P(1, 0), P(1, 3)), A(P(1, 4), P(1, 7))) == 0);
  CHECK(crossing_number(m, A(P(1, 0), P(1, 3)), A(P(1, 1), P(1, 5))) == 1);
  CHECK(crossing_number(m, A(P(1, 0), P(1, 3)), A(P(1, 3), P(1, 6))) == 0);
  // both arcs wind past each other on opposite sides of the puncture
  CHECK(crossing_number(m, A(P(1, 0), P(1, 5)), A(P(1, 3), P(1, 2))) == 2);
}

TEST_CASE("crossing matches the geometric oracle on windows") {
  for (DiskModel m : {DiskModel{1, false}, DiskModel{2, false}, DiskModel{1, true}, DiskModel{2, true}}) {
    const auto edges = window_edges(m, 3);
    long mismatches = 0;
    for (const auto& e : edges)
      for (const auto& f : edges) {
        if (e == f) continue;
        const int c = crossing_number(m, e, f);
        if (c != geometric_crossings(m.n, e, f)) ++mismatches;
        if (c != crossing_number(m, f, e)) ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("translation") {
  DiskModel m{1, false}, c{2, true};
  CHECK(translate(m, A(P(1, 0), P(1, 4))) == A(P(1, 1), P(1, 5)));
  CHECK(translate(m, R(P(1, 0), 1)) == R(P(1, 1), -1));
  CHECK(translate(c, A(I(1), P(2, 3))) == A(I(1), P(2, 4)));
  CHECK(translate_inverse(m, A(P(1, 1), P(1, 5))) == A(P(1, 0), P(1, 4)));
  CHECK(translate_inverse(m, R(P(1, 1), -1)) == R(P(1, 0), 1));
  CHECK(translate_inverse(c, A(I(1), I(2))) == A(I(1), I(2)));
  CHECK(translate(DiskModel{1, true}, R(I(1), 1)) == R(I(1), -1));
  for (const auto& e : window_edges(c, 3)) {
    CHECK(translate_inverse(c, translate(c, e)) == e);
    CHECK(translate(c, translate_inverse(c, e)) == e);
  }
}

TEST_CASE("elementary moves") {
  DiskModel m{1, false};
  CHECK(elementary_moves_from(m, A(P(1, 0), P(1, 2))) == std::vector<TaggedEdge>{A(P(1, -1), P(1, 2))});
  CHECK(elementary_moves_from(m, R(P(1, 0), 1)) == std::vector<TaggedEdge>{A(P(1, 0), P(1, -1))});
  auto mv = elementary_moves_from(m, A(P(1, 0), P(1, -1)));
  std::vector<TaggedEdge> want{A(P(1, 0), P(1, -2)), R(P(1, -1), 1), R(P(1, -1), -1)};
  std::sort(want.begin(), want.end());
  CHECK(mv == want);
  CHECK(is_elementary_move(m, A(P(1, 0), P(1, 2)), A(P(1, -1), P(1, 2))));
  CHECK_FALSE(is_elementary_move(m, A(P(1, 0), P(1, 2)), A(P(1, 0), P(1, 3))));
  CHECK(is_elementary_move(m, R(P(1, 3), 1), A(P(1, 3), P(1, 2))));
}

TEST_CASE("move lemma on small windows") {
  for (DiskModel m : {DiskModel{1, false}, DiskModel{2, false}}) {
    const auto edges = window_edges(m, 3);
    for (const auto& e : edges)
      for (const auto& f : edges) {
        if (e == f) continue;
        const TaggedEdge tf = translate(m, f);
        CHECK(is_elementary_move(m, e, f) == (tf != e && is_elementary_move(m, tf, e)));
      }
  }
}

TEST_CASE("edge text") {
  CHECK(to_string(A(P(1, 0), P(1, 3))) == "E[(1,0)-(1,3)]^+");
  CHECK(to_string(R(P(1, 2), -1)) == "E[(1,2)-(1,2)]^-");
  CHECK(parse_edge("E[(1,0)-(1,3)]") == A(P(1, 0), P(1, 3)));
  CHECK(parse_edge("E[(1,2)-(1,2)]^-") == R(P(1, 2), -1));
  CHECK(parse_edge("E[(2,inf)-(1,3)]^+") == A(I(2), P(1, 3)));
  CHECK_FALSE(parse_edge("E[(1,2)]").has_value());
}

TEST_CASE("limit points") {
  CHECK(touches_limit(A(P(1, 0), I(1))));
  CHECK_FALSE(touches_limit(A(P(1, 0), P(1, 3))));
  CHECK(share_limit_point(A(P(1, 0), I(1)), A(I(1), P(2, 3))));
  CHECK_FALSE(share_limit_point(A(P(1, 0), I(1)), A(I(2), P(2, 3))));
}
