#include "dinf/arcs.hpp"

#include <algorithm>
#include <array>
#include <regex>

namespace dinf {

Status validate_edge(const DiskModel& m, const TaggedEdge& e) {
  if (!is_marked(m, e.from) || !is_marked(m, e.to))
    return make_error(ErrorCode::UnknownPoint, to_string(e) + ": endpoint is not a marked point");
  if (e.tag != 1 && e.tag != -1) return make_error(ErrorCode::BadTag, "tag must be +1 or -1");
  if (e.from != e.to && e.tag != 1)
    return make_error(ErrorCode::BadTag, to_string(e) + ": only puncture arcs carry tag -1");
  if (e.from != e.to && e.to == ccw_successor(m, e.from))
    return make_error(ErrorCode::BoundaryEdge, to_string(e) + ": boundary segment");
  return ok_status();
}

namespace {

// Count intersections of the lifts of two boundary arcs to the universal cover.
// Only the cyclic order of the (at most four) endpoints matters.
int lift_crossings(const DiskModel& m, const TaggedEdge& e, const TaggedEdge& f) {
  std::array<MarkedPoint, 4> pts{e.from, e.to, f.from, f.to};
  std::vector<MarkedPoint> uniq(pts.begin(), pts.end());
  std::sort(uniq.begin(), uniq.end(), [&](const MarkedPoint& a, const MarkedPoint& b) {
    return ccw_key(m, a) < ccw_key(m, b);
  });
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  const long long N = static_cast<long long>(uniq.size());
  auto idx = [&](const MarkedPoint& p) {
    return static_cast<long long>(std::find(uniq.begin(), uniq.end(), p) - uniq.begin());
  };
  auto lift = [&](const TaggedEdge& x) {
    long long a = idx(x.from), b = idx(x.to);
    if (b <= a) b += N;
    return std::pair{a, b};
  };

  if (e.is_puncture() || f.is_puncture()) {
    const TaggedEdge& r = e.is_puncture() ? e : f;
    const TaggedEdge& o = e.is_puncture() ? f : e;
    auto [a, b] = lift(o);
    long long x = idx(r.from);
    int cnt = 0;
    for (long long k = -1; k <= 1; ++k)
      if (a < x + k * N && x + k * N < b) ++cnt;
    return cnt;
  }
  auto [a, b] = lift(e);
  auto [c, d] = lift(f);
  int cnt = 0;
  for (long long k = -1; k <= 1; ++k) {
    long long cc = c + k * N, dd = d + k * N;
    if ((a < cc && cc < b && b < dd) || (cc < a && a < dd && dd < b)) ++cnt;
  }
  return cnt;
}

}  // namespace

int crossing_number(const DiskModel& m, const TaggedEdge& e, const TaggedEdge& f) {
  if (e == f) throw Failure(ErrorCode::EqualEdges, "crossing_number of an edge with itself");
  if (e.is_puncture() && f.is_puncture()) return (e.from != f.from && e.tag != f.tag) ? 1 : 0;
  return lift_crossings(m, e, f);
}

TaggedEdge translate(const DiskModel& m, const TaggedEdge& e) {
  if (e.is_puncture()) return TaggedEdge::radius(ccw_successor(m, e.from), -e.tag);
  return TaggedEdge::arc(ccw_successor(m, e.from), ccw_successor(m, e.to));
}

TaggedEdge translate_inverse(const DiskModel& m, const TaggedEdge& e) {
  if (e.is_puncture()) return TaggedEdge::radius(ccw_predecessor(m, e.from), -e.tag);
  return TaggedEdge::arc(ccw_predecessor(m, e.from), ccw_predecessor(m, e.to));
}

std::vector<TaggedEdge> elementary_moves_from(const DiskModel& m, const TaggedEdge& e) {
  std::vector<TaggedEdge> out;
  auto push = [&](const TaggedEdge& f) {
    if (f == e || !validate_edge(m, f).ok()) return;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  if (e.is_puncture()) {
    if (!e.from.inf) push(TaggedEdge::arc(e.from, ccw_predecessor(m, e.from)));
  } else {
    MarkedPoint p1 = ccw_predecessor(m, e.from);
    if (p1 == e.to) {
      push(TaggedEdge::radius(e.to, 1));
      push(TaggedEdge::radius(e.to, -1));
    } else if (p1 != e.from) {
      push(TaggedEdge::arc(p1, e.to));
    }
    MarkedPoint q1 = ccw_predecessor(m, e.to);
    if (q1 != e.to && q1 != e.from) push(TaggedEdge::arc(e.from, q1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_elementary_move(const DiskModel& m, const TaggedEdge& e, const TaggedEdge& f) {
  if (e == f) throw Failure(ErrorCode::EqualEdges, "is_elementary_move of an edge with itself");
  auto mv = elementary_moves_from(m, e);
  return std::find(mv.begin(), mv.end(), f) != mv.end();
}

bool touches_limit(const TaggedEdge& e) { return e.from.inf || e.to.inf; }

bool share_limit_point(const TaggedEdge& e, const TaggedEdge& f) {
  for (const auto& a : {e.from, e.to})
    for (const auto& b : {f.from, f.to})
      if (a.inf && a == b) return true;
  return false;
}

pos_t abs_pos(const TaggedEdge& e) { return std::max(abs_pos(e.from), abs_pos(e.to)); }

std::vector<TaggedEdge> window_edges(const DiskModel& m, pos_t bound) {
  auto pts = window(m, bound);
  std::vector<TaggedEdge> out;
  for (const auto& p : pts) {
    out.push_back(TaggedEdge::radius(p, 1));
    out.push_back(TaggedEdge::radius(p, -1));
    for (const auto& q : pts)
      if (q != p && q != ccw_successor(m, p)) out.push_back(TaggedEdge::arc(p, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const TaggedEdge& e) {
  return "E[" + to_string(e.from) + "-" + to_string(e.to) + "]^" + (e.tag > 0 ? "+" : "-");
}

std::optional<TaggedEdge> parse_edge(const std::string& s) {
  static const std::regex re(
      R"(\s*E\s*\[\s*(\([^)]*\))\s*-\s*(\([^)]*\))\s*\]\s*(?:\^\s*([+-])1?)?\s*)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) return std::nullopt;
  auto p = parse_point(mt[1]);
  auto q = parse_point(mt[2]);
  if (!p || !q) return std::nullopt;
  int tag = (mt[3].matched && mt[3].str() == "-") ? -1 : 1;
  return TaggedEdge{*p, *q, tag};
}

}  // namespace dinf
