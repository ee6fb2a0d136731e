#include "dinf/disk.hpp"

#include <cstdlib>
#include <regex>

#include "dinf/error.hpp"

namespace dinf {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BoundaryEdge: return "BoundaryEdge";
    case ErrorCode::BadTag: return "BadTag";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::EqualEdges: return "EqualEdges";
    case ErrorCode::PointsCoincide: return "PointsCoincide";
    case ErrorCode::Crossing: return "Crossing";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::BadDiff: return "BadDiff";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::AmbiguousFlip: return "AmbiguousFlip";
    case ErrorCode::NonMutable: return "NonMutable";
    case ErrorCode::InfApexUncompleted: return "InfApexUncompleted";
    case ErrorCode::BadPath: return "BadPath";
    case ErrorCode::ForkMisuse: return "ForkMisuse";
    case ErrorCode::InfInUncompleted: return "InfInUncompleted";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::EqualObjects: return "EqualObjects";
    case ErrorCode::SupportOverflow: return "SupportOverflow";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::Parse: return "Parse";
  }
  return "?";
}

bool is_marked(const DiskModel& m, const MarkedPoint& p) {
  if (p.ray < 1 || p.ray > m.n) return false;
  if (p.inf) return m.completed && p.pos == 0;
  return true;
}

CcwKey ccw_key(const DiskModel& m, const MarkedPoint& p) {
  if (p.ray == 1 && (p.inf || p.pos >= 1)) return {0, p.inf ? 1 : 0, p.pos};
  if (p.ray == 1) return {m.n, 0, p.pos};
  return {p.ray - 1, p.inf ? 1 : 0, p.pos};
}

MarkedPoint ccw_successor(const DiskModel&, const MarkedPoint& p) {
  if (p.inf) return p;
  return MarkedPoint::at(p.ray, p.pos + 1);
}

MarkedPoint ccw_predecessor(const DiskModel&, const MarkedPoint& p) {
  if (p.inf) return p;
  return MarkedPoint::at(p.ray, p.pos - 1);
}

bool cyclic_lt(const DiskModel& m, const MarkedPoint& x, const MarkedPoint& y,
               const MarkedPoint& z) {
  if (x == y || y == z || x == z)
    throw Failure(ErrorCode::PointsCoincide, "cyclic_lt needs three distinct points");
  CcwKey kx = ccw_key(m, x), ky = ccw_key(m, y), kz = ccw_key(m, z);
  auto rot = [&](const CcwKey& k) { return std::pair{k > kx ? 0 : 1, k}; };
  return rot(ky) < rot(kz);
}

bool in_open_arc(const DiskModel& m, const MarkedPoint& x, const MarkedPoint& p,
                 const MarkedPoint& q) {
  if (p == q) throw Failure(ErrorCode::PointsCoincide, "in_open_arc needs p != q");
  if (x == p || x == q) return false;
  return cyclic_lt(m, p, x, q);
}

std::vector<MarkedPoint> window(const DiskModel& m, pos_t bound) {
  std::vector<MarkedPoint> out;
  for (int h = 1; h <= m.n; ++h) {
    for (pos_t a = -bound; a <= bound; ++a) out.push_back(MarkedPoint::at(h, a));
    if (m.completed) out.push_back(MarkedPoint::limit(h));
  }
  return out;
}

pos_t abs_pos(const MarkedPoint& p) { return p.inf ? 0 : std::llabs(p.pos); }

std::string to_string(const MarkedPoint& p) {
  return "(" + std::to_string(p.ray) + "," + (p.inf ? std::string("inf") : std::to_string(p.pos)) +
         ")";
}

std::optional<MarkedPoint> parse_point(const std::string& s) {
  static const std::regex re(R"(\s*\(\s*(\d+)\s*,\s*(-?\d+|inf|INF)\s*\)\s*)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) return std::nullopt;
  int ray = std::stoi(mt[1]);
  std::string ps = mt[2];
  if (ps == "inf" || ps == "INF") return MarkedPoint::limit(ray);
  return MarkedPoint::at(ray, std::stoll(ps));
}

}  // namespace dinf
