#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dinf {

using pos_t = std::int64_t;

// (ray, pos); pos is ignored (kept 0) when inf is set
struct MarkedPoint {
  int ray = 1;
  pos_t pos = 0;
  bool inf = false;

  static MarkedPoint at(int ray, pos_t pos) { return {ray, pos, false}; }
  static MarkedPoint limit(int ray) { return {ray, 0, true}; }

  friend auto operator<=>(const MarkedPoint&, const MarkedPoint&) = default;
};

struct DiskModel {
  int n = 1;
  bool completed = false;

  friend bool operator==(const DiskModel&, const DiskModel&) = default;
};

// Linear key of the ccw boundary order, cut just before (1,1):
// block 0 = ray 1 positive (then (1,inf)), block h-1 = ray h, block n = ray 1 non-positive.
struct CcwKey {
  int block;
  int inf;
  pos_t pos;
  friend auto operator<=>(const CcwKey&, const CcwKey&) = default;
};

bool is_marked(const DiskModel& m, const MarkedPoint& p);
CcwKey ccw_key(const DiskModel& m, const MarkedPoint& p);

MarkedPoint ccw_successor(const DiskModel& m, const MarkedPoint& p);
MarkedPoint ccw_predecessor(const DiskModel& m, const MarkedPoint& p);

bool cyclic_lt(const DiskModel& m, const MarkedPoint& x, const MarkedPoint& y,
               const MarkedPoint& z);
bool in_open_arc(const DiskModel& m, const MarkedPoint& x, const MarkedPoint& p,
                 const MarkedPoint& q);

std::vector<MarkedPoint> window(const DiskModel& m, pos_t bound);

// largest |pos| over finite points (0 for inf)
pos_t abs_pos(const MarkedPoint& p);

std::string to_string(const MarkedPoint& p);
std::optional<MarkedPoint> parse_point(const std::string& s);

}  // namespace dinf
