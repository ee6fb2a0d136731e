#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dinf/disk.hpp"
#include "dinf/error.hpp"

namespace dinf {

// from == to is an arc to the puncture; tag is -1 only there
struct TaggedEdge {
  MarkedPoint from;
  MarkedPoint to;
  int tag = 1;

  bool is_puncture() const { return from == to; }

  static TaggedEdge arc(MarkedPoint p, MarkedPoint q) { return {p, q, 1}; }
  static TaggedEdge radius(MarkedPoint p, int tag) { return {p, p, tag}; }

  friend auto operator<=>(const TaggedEdge&, const TaggedEdge&) = default;
};

Status validate_edge(const DiskModel& m, const TaggedEdge& e);

int crossing_number(const DiskModel& m, const TaggedEdge& e, const TaggedEdge& f);

TaggedEdge translate(const DiskModel& m, const TaggedEdge& e);
TaggedEdge translate_inverse(const DiskModel& m, const TaggedEdge& e);

std::vector<TaggedEdge> elementary_moves_from(const DiskModel& m, const TaggedEdge& e);
bool is_elementary_move(const DiskModel& m, const TaggedEdge& e, const TaggedEdge& f);

bool touches_limit(const TaggedEdge& e);
bool share_limit_point(const TaggedEdge& e, const TaggedEdge& f);
pos_t abs_pos(const TaggedEdge& e);

// all valid edges with both endpoints in window(bound)
std::vector<TaggedEdge> window_edges(const DiskModel& m, pos_t bound);

std::string to_string(const TaggedEdge& e);
std::optional<TaggedEdge> parse_edge(const std::string& s);

}  // namespace dinf
