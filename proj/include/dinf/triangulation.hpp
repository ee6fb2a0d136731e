#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dinf/arcs.hpp"

namespace dinf {

// fan(apex) with a finite diff
struct Triangulation {
  DiskModel model;
  MarkedPoint apex;
  std::set<TaggedEdge> removed;
  std::set<TaggedEdge> added;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

bool in_fan(const DiskModel& m, const MarkedPoint& apex, const TaggedEdge& e);
bool is_member(const Triangulation& t, const TaggedEdge& e);

Result<Triangulation> fan(const DiskModel& m, const MarkedPoint& apex);

std::vector<TaggedEdge> members_in_window(const Triangulation& t, pos_t bound);

// bound of the smallest window holding apex and diff (and extra edges)
pos_t support_bound(const Triangulation& t, const std::vector<TaggedEdge>& extra = {});

Status validate(const Triangulation& t);

struct Mutation {
  Triangulation result;
  TaggedEdge replacement;
};

Result<Mutation> mutate(const Triangulation& t, const TaggedEdge& e);
Result<bool> is_mutable(const Triangulation& t, const TaggedEdge& e);

// same member set (diff encodings may differ only in ordering)
bool same_members(const Triangulation& a, const Triangulation& b, pos_t bound);

}  // namespace dinf
