#include "dinf/triangulation.hpp"

#include <algorithm>

namespace dinf {

namespace {

constexpr pos_t kCandidateMargin = 2;

bool in_bound(const MarkedPoint& p, pos_t bound) { return p.inf || std::llabs(p.pos) <= bound; }

bool edge_in_bound(const TaggedEdge& e, pos_t bound) {
  return in_bound(e.from, bound) && in_bound(e.to, bound);
}

// edges of window(bound) that avoid every member in `others`
std::vector<TaggedEdge> free_candidates(const DiskModel& m, pos_t bound,
                                        const std::vector<TaggedEdge>& others,
                                        const Triangulation& t) {
  std::vector<TaggedEdge> out;
  for (const auto& c : window_edges(m, bound)) {
    if (is_member(t, c)) continue;
    bool ok = true;
    for (const auto& o : others) {
      if (o == c) continue;
      if (crossing_number(m, c, o) > 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace

bool in_fan(const DiskModel& m, const MarkedPoint& apex, const TaggedEdge& e) {
  if (e.from != apex) return false;
  if (e.is_puncture()) return true;
  return e.tag == 1 && e.to != ccw_successor(m, apex);
}

bool is_member(const Triangulation& t, const TaggedEdge& e) {
  if (t.added.count(e)) return true;
  return in_fan(t.model, t.apex, e) && !t.removed.count(e) && validate_edge(t.model, e).ok();
}

Result<Triangulation> fan(const DiskModel& m, const MarkedPoint& apex) {
  if (apex.inf && !m.completed)
    return make_error(ErrorCode::InfApexUncompleted, "accumulation points are unmarked here");
  if (!is_marked(m, apex)) return make_error(ErrorCode::UnknownPoint, to_string(apex));
  return Triangulation{m, apex, {}, {}};
}

std::vector<TaggedEdge> members_in_window(const Triangulation& t, pos_t bound) {
  std::vector<TaggedEdge> out;
  for (const auto& p : window(t.model, bound)) {
    if (p == t.apex) {
      for (int s : {1, -1}) {
        auto e = TaggedEdge::radius(p, s);
        if (!t.removed.count(e)) out.push_back(e);
      }
      continue;
    }
    auto e = TaggedEdge::arc(t.apex, p);
    if (in_bound(t.apex, bound) && in_fan(t.model, t.apex, e) && !t.removed.count(e))
      out.push_back(e);
  }
  for (const auto& e : t.added)
    if (edge_in_bound(e, bound)) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

pos_t support_bound(const Triangulation& t, const std::vector<TaggedEdge>& extra) {
  pos_t b = abs_pos(t.apex);
  for (const auto& e : t.removed) b = std::max(b, abs_pos(e));
  for (const auto& e : t.added) b = std::max(b, abs_pos(e));
  for (const auto& e : extra) b = std::max(b, abs_pos(e));
  return b + kCandidateMargin;
}

Status validate(const Triangulation& t) {
  const DiskModel& m = t.model;
  if (!is_marked(m, t.apex)) {
    if (t.apex.inf && !m.completed)
      return make_error(ErrorCode::InfApexUncompleted, "apex at an unmarked accumulation point");
    return make_error(ErrorCode::UnknownPoint, to_string(t.apex));
  }
  for (const auto& e : t.removed)
    if (!in_fan(m, t.apex, e) || !validate_edge(m, e).ok())
      return make_error(ErrorCode::BadDiff, "removed edge not in the fan: " + to_string(e));
  for (const auto& e : t.added) {
    if (!validate_edge(m, e).ok())
      return make_error(ErrorCode::BadDiff, "added edge invalid: " + to_string(e));
    if (in_fan(m, t.apex, e))
      return make_error(ErrorCode::BadDiff, "added edge already in the fan: " + to_string(e));
  }
  if (t.added.size() > t.removed.size())
    return make_error(ErrorCode::BadDiff, "more added than removed edges");

  const pos_t b = support_bound(t);
  // one extra ring so every gap between window points has a fan representative
  auto mem = members_in_window(t, b + 1);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (crossing_number(m, mem[i], mem[j]) > 0)
        return make_error(ErrorCode::Crossing, to_string(mem[i]) + " x " + to_string(mem[j]));

  auto cands = free_candidates(m, b, mem, t);
  if (!cands.empty()) {
    auto it = std::find_if(cands.begin(), cands.end(),
                           [&](const TaggedEdge& c) { return !t.removed.count(c); });
    const TaggedEdge& w = it != cands.end() ? *it : cands.front();
    return make_error(ErrorCode::NotMaximal, to_string(w));
  }
  if (t.added.size() != t.removed.size())
    return make_error(ErrorCode::BadDiff, "|removed| != |added|");
  return ok_status();
}

Result<Mutation> mutate(const Triangulation& t, const TaggedEdge& e) {
  if (!is_member(t, e)) return make_error(ErrorCode::NotMember, to_string(e));
  const DiskModel& m = t.model;
  const pos_t b = support_bound(t, {e});
  auto mem = members_in_window(t, b + 1);
  mem.erase(std::remove(mem.begin(), mem.end(), e), mem.end());
  auto cands = free_candidates(m, b, mem, t);
  cands.erase(std::remove(cands.begin(), cands.end(), e), cands.end());
  if (cands.empty()) return make_error(ErrorCode::NonMutable, to_string(e));
  if (cands.size() > 1)
    return make_error(ErrorCode::AmbiguousFlip,
                      to_string(e) + ": " + to_string(cands[0]) + " / " + to_string(cands[1]));

  Triangulation r = t;
  const TaggedEdge& star = cands.front();
  if (r.added.count(e))
    r.added.erase(e);
  else
    r.removed.insert(e);
  if (r.removed.count(star))
    r.removed.erase(star);
  else
    r.added.insert(star);
  return Mutation{std::move(r), star};
}

Result<bool> is_mutable(const Triangulation& t, const TaggedEdge& e) {
  auto r = mutate(t, e);
  if (r.ok()) return true;
  if (r.error().code == ErrorCode::NotMember) return r.error();
  if (r.error().code == ErrorCode::AmbiguousFlip) return r.error();
  return false;
}

bool same_members(const Triangulation& a, const Triangulation& b, pos_t bound) {
  return members_in_window(a, bound) == members_in_window(b, bound);
}

}  // namespace dinf
