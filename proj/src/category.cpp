#include "dinf/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace dinf {

namespace {

using V = QuiverVertex;
using X = Indecomposable;

V tail(int h, pos_t a) { return V::tail(MarkedPoint::at(h, a)); }
V succ(const V& v) { return V::tail(MarkedPoint{v.pt.ray, v.pt.inf ? 0 : v.pt.pos + 1, v.pt.inf}); }
V pred(const V& v) { return V::tail(MarkedPoint{v.pt.ray, v.pt.inf ? 0 : v.pt.pos - 1, v.pt.inf}); }
V other_fork(const V& v) { return v.kind == V::ForkUp ? V::down() : V::up(); }
const V kFar = tail(1, 1);  // the source end of the thread

bool is_puncture_type(const X& x) {
  return (x.kind == X::P || x.kind == X::P1 || x.kind == X::Bar) && x.a.is_fork();
}

}  // namespace

bool is_tail_point(const MarkedPoint& p) {
  return !(p.ray == 1 && !p.inf && (p.pos == -1 || p.pos == 0));
}

QuiverVertex center_vertex() { return tail(1, -2); }

bool closer_to_fork(const DiskModel& m, const QuiverVertex& x, const QuiverVertex& y) {
  if (x.is_fork()) return !y.is_fork();
  if (y.is_fork()) return false;
  return ccw_key(m, x.pt) > ccw_key(m, y.pt);
}

bool has_path(const DiskModel& m, const QuiverVertex& u, const QuiverVertex& w) {
  return u == w || closer_to_fork(m, w, u);
}

namespace {

Status check_vertex(const DiskModel& m, const V& v) {
  if (v.is_fork()) return ok_status();
  if (v.pt.ray < 1 || v.pt.ray > m.n)
    return make_error(ErrorCode::BadPath, "no vertex " + to_string(v.pt));
  if (v.pt.inf && !m.completed)
    return make_error(ErrorCode::InfInUncompleted, to_string(v.pt) + " needs the completed model");
  if (!is_tail_point(v.pt))
    return make_error(ErrorCode::BadPath, to_string(v.pt) + " is a reserved label");
  return ok_status();
}

}  // namespace

Status validate_indec(const DiskModel& m, const Indecomposable& x) {
  if (x.kind == X::Hob && !m.completed)
    return make_error(ErrorCode::InfInUncompleted, "half-open bars need the completed model");
  if (auto s = check_vertex(m, x.a); !s) return s;
  if (x.kind == X::P || x.kind == X::P1) return ok_status();
  if (auto s = check_vertex(m, x.b); !s) return s;
  if (x.b.is_fork()) return make_error(ErrorCode::ForkMisuse, "the end of an interval is a fork");
  switch (x.kind) {
    case X::Bar:
      if (x.a.is_fork()) return ok_status();
      if (x.a.pt.inf)
        return make_error(ErrorCode::BadPath, "a closed bar cannot stop at an accumulation vertex");
      if (!has_path(m, x.b, x.a)) return make_error(ErrorCode::BadPath, "no path from end to top");
      return ok_status();
    case X::Dbl:
      if (x.a.is_fork()) return make_error(ErrorCode::ForkMisuse, "doubled part cannot start at a fork");
      if (!closer_to_fork(m, x.a, x.b))
        return make_error(ErrorCode::BadPath, "doubled vertex must lie strictly nearer the fork");
      return ok_status();
    case X::Hob:
      if (x.a.is_fork() || !x.a.pt.inf)
        return make_error(ErrorCode::BadPath, "half-open bar needs an accumulation infimum");
      if (!closer_to_fork(m, x.a, x.b)) return make_error(ErrorCode::BadPath, "empty half-open bar");
      return ok_status();
    default:
      return ok_status();
  }
}

Indecomposable ar_translate(const DiskModel&, const Indecomposable& x) {
  const V c = center_vertex();
  switch (x.kind) {
    case X::P:
      return X::shifted(x.a);
    case X::P1:
      if (!x.a.is_fork() && x.a.pt.inf) return X::hob(x.a.pt.ray, kFar);
      return X::bar(x.a, kFar);
    case X::Bar:
      if (x.a.is_fork()) {
        if (x.b == c) return X::proj(other_fork(x.a));
        return X::bar(other_fork(x.a), succ(x.b));
      }
      if (x.a == c) {
        if (x.b == c) return X::proj(kFar);
        return X::dbl(succ(x.b), kFar);
      }
      return X::bar(succ(x.a), succ(x.b));
    case X::Dbl:
      if (x.a == c) return X::proj(succ(x.b));
      return X::dbl(succ(x.a), succ(x.b));
    case X::Hob:
      return X::hob(x.a.pt.ray, succ(x.b));
  }
  throw std::logic_error("ar_translate");
}

Indecomposable ar_translate_inverse(const DiskModel&, const Indecomposable& x) {
  const V c = center_vertex();
  switch (x.kind) {
    case X::P1:
      return X::proj(x.a);
    case X::P:
      if (x.a.is_fork()) return X::bar(other_fork(x.a), c);
      if (x.a == kFar) return X::bar(c, c);
      return X::dbl(c, pred(x.a));
    case X::Bar:
      if (x.b == kFar) return X::shifted(x.a);
      if (x.a.is_fork()) return X::bar(other_fork(x.a), pred(x.b));
      return X::bar(pred(x.a), pred(x.b));
    case X::Dbl:
      if (x.b == kFar) return X::bar(c, pred(x.a));
      return X::dbl(pred(x.a), pred(x.b));
    case X::Hob:
      if (x.b == kFar) return X::shifted(x.a);
      return X::hob(x.a.pt.ray, pred(x.b));
  }
  throw std::logic_error("ar_translate_inverse");
}

TaggedEdge phi(const DiskModel& m, const Indecomposable& x) {
  const MarkedPoint o = MarkedPoint::at(1, -1), z = MarkedPoint::at(1, 0);
  switch (x.kind) {
    case X::P:
      if (x.a.is_fork()) return TaggedEdge::radius(o, x.a.kind == V::ForkUp ? 1 : -1);
      return TaggedEdge::arc(o, x.a.pt);
    case X::P1:
      if (x.a.is_fork()) return TaggedEdge::radius(z, x.a.kind == V::ForkUp ? -1 : 1);
      return TaggedEdge::arc(z, ccw_successor(m, x.a.pt));
    case X::Bar:
      if (x.a.is_fork()) return TaggedEdge::radius(x.b.pt, x.a.kind == V::ForkUp ? 1 : -1);
      return TaggedEdge::arc(x.b.pt, ccw_successor(m, ccw_successor(m, x.a.pt)));
    case X::Dbl:
      return TaggedEdge::arc(x.a.pt, x.b.pt);
    case X::Hob:
      return TaggedEdge::arc(x.b.pt, x.a.pt);
  }
  throw std::logic_error("phi");
}

Result<Indecomposable> phi_inverse(const DiskModel& m, const TaggedEdge& e) {
  if (!validate_edge(m, e).ok())
    return make_error(ErrorCode::NoPreimage, to_string(e) + " is not an edge of this model");
  const MarkedPoint o = MarkedPoint::at(1, -1), z = MarkedPoint::at(1, 0);
  const MarkedPoint p = e.from, q = e.to;
  if (e.is_puncture()) {
    if (p == o) return X::proj(e.tag > 0 ? V::up() : V::down());
    if (p == z) return X::shifted(e.tag > 0 ? V::down() : V::up());
    return X::bar(e.tag > 0 ? V::up() : V::down(), V::tail(p));
  }
  if (p == o) return X::proj(V::tail(q));
  if (p == z) return X::shifted(q.inf ? V::tail(q) : V::tail(ccw_predecessor(m, q)));
  if (!is_tail_point(q) || ccw_key(m, q) > ccw_key(m, p)) {
    if (q.inf) return X::hob(q.ray, V::tail(p));
    return X::bar(V::tail(ccw_predecessor(m, ccw_predecessor(m, q))), V::tail(p));
  }
  return X::dbl(V::tail(p), V::tail(q));
}

int dimension_at(const DiskModel& m, const Indecomposable& x, const QuiverVertex& v) {
  switch (x.kind) {
    case X::P:
      if (x.a.is_fork()) return v == x.a ? 1 : 0;
      return (v.is_fork() || has_path(m, x.a, v)) ? 1 : 0;
    case X::P1:
      return 0;
    case X::Bar:
      if (x.a.is_fork()) return (v == x.a || (!v.is_fork() && has_path(m, x.b, v))) ? 1 : 0;
      return (!v.is_fork() && has_path(m, x.b, v) && has_path(m, v, x.a)) ? 1 : 0;
    case X::Dbl:
      if (v.is_fork()) return 1;
      if (has_path(m, x.a, v)) return 2;
      return has_path(m, x.b, v) ? 1 : 0;
    case X::Hob:
      return (!v.is_fork() && has_path(m, x.b, v) && closer_to_fork(m, x.a, v)) ? 1 : 0;
  }
  return 0;
}

std::map<QuiverVertex, int> dimension_window(const DiskModel& m, const Indecomposable& x,
                                             pos_t bound) {
  auto inside = [&](const V& v) { return v.is_fork() || v.pt.inf || std::llabs(v.pt.pos) <= bound; };
  if (!inside(x.a) || ((x.kind != X::P && x.kind != X::P1) && !inside(x.b)))
    throw Failure(ErrorCode::SupportOverflow, to_string(x) + " leaves window " + std::to_string(bound));
  std::map<QuiverVertex, int> out;
  out[V::up()] = dimension_at(m, x, V::up());
  out[V::down()] = dimension_at(m, x, V::down());
  for (const auto& p : window(m, bound))
    if (is_tail_point(p)) out[V::tail(p)] = dimension_at(m, x, V::tail(p));
  return out;
}

std::vector<QuiverVertex> generator_vertices(const DiskModel&, const Indecomposable& x) {
  std::vector<V> out;
  switch (x.kind) {
    case X::P:
    case X::P1:
      if (!x.a.is_fork()) out.push_back(x.a);
      break;
    case X::Bar:
      out.push_back(x.b);
      if (!x.a.is_fork() && is_tail_point(succ(x.a).pt)) out.push_back(succ(x.a));
      break;
    case X::Dbl:
      out.push_back(x.a);
      out.push_back(x.b);
      break;
    case X::Hob:
      out.push_back(x.b);
      break;
  }
  return out;
}

std::vector<Indecomposable> window_objects(const DiskModel& m, pos_t bound) {
  std::vector<V> tails;
  for (const auto& p : window(m, bound))
    if (is_tail_point(p)) tails.push_back(V::tail(p));
  std::vector<V> all{V::up(), V::down()};
  all.insert(all.end(), tails.begin(), tails.end());

  std::vector<X> out;
  auto keep = [&](const X& x) {
    if (validate_indec(m, x).ok()) out.push_back(x);
  };
  for (const auto& v : all) {
    keep(X::proj(v));
    keep(X::shifted(v));
  }
  for (const auto& a : all)
    for (const auto& b : tails) {
      keep(X::bar(a, b));
      keep(X::dbl(a, b));
      if (m.completed && !a.is_fork() && a.pt.inf) keep(X{X::Hob, a, b});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiskModel doubled_model(const DiskModel& m) { return DiskModel{2 * m.n, false}; }

namespace {

V iota_vertex(const V& v) {
  if (v.is_fork()) return v;
  if (v.pt.inf) return tail(2 * v.pt.ray, 0);
  return tail(2 * v.pt.ray - 1, v.pt.pos);
}

}  // namespace

Indecomposable iota(const DiskModel&, const Indecomposable& x) {
  if (x.kind == X::Hob) return X::bar(tail(2 * x.a.pt.ray, -1), iota_vertex(x.b));
  X y = x;
  y.a = iota_vertex(x.a);
  if (x.kind != X::P && x.kind != X::P1) y.b = iota_vertex(x.b);
  return y;
}

namespace {

V collapse_vertex(const V& v) {
  if (v.is_fork()) return v;
  if (v.pt.ray % 2 == 0) return V::tail(MarkedPoint::limit(v.pt.ray / 2));
  return tail((v.pt.ray + 1) / 2, v.pt.pos);
}

}  // namespace

Indecomposable collapse(const DiskModel&, const Indecomposable& y) {
  if (y.kind == X::Bar && !y.a.is_fork() && y.a.pt.ray % 2 == 0)
    return X::hob(y.a.pt.ray / 2, collapse_vertex(y.b));
  X x = y;
  x.a = collapse_vertex(y.a);
  if (y.kind != X::P && y.kind != X::P1) x.b = collapse_vertex(y.b);
  return x;
}

Indecomposable slide_up(const DiskModel& doubled, const Indecomposable& x) {
  constexpr pos_t kFarOut = 7;
  TaggedEdge e = phi(doubled, x);
  auto mv = [&](MarkedPoint p) {
    if (!p.inf && p.ray % 2 == 0 && (p.pos == 0 || p.pos == 1)) p.pos = kFarOut;
    return p;
  };
  e.from = mv(e.from);
  e.to = mv(e.to);
  return phi_inverse(doubled, e).value();
}

// ---- presentation engine -------------------------------------------------

namespace {

using Mat = std::vector<std::vector<long long>>;

int rank_of(Mat a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  long long prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// region of a vertex inside a doubled bar: 2, 1, 0 or fork (3)
int dbl_region(const DiskModel& m, const X& n, const V& v) {
  if (v.is_fork()) return 3;
  if (has_path(m, n.a, v)) return 2;
  return has_path(m, n.b, v) ? 1 : 0;
}

// structure map of module n along the path u -> w, dim(w) x dim(u)
Mat structure_map(const DiskModel& m, const X& n, const V& u, const V& w) {
  const int du = dimension_at(m, n, u), dw = dimension_at(m, n, w);
  Mat out(dw, std::vector<long long>(du, 0));
  if (du == 0 || dw == 0) return out;
  if (n.kind != X::Dbl) {
    out[0][0] = 1;
    return out;
  }
  const int ru = dbl_region(m, n, u), rw = dbl_region(m, n, w);
  if (ru == 2 && rw == 2) {
    out[0][0] = out[1][1] = 1;
  } else if (ru == 1 && rw == 2) {
    out[0][0] = out[1][0] = 1;
  } else if (ru == 2 && rw == 3) {
    out[0][w.kind == V::ForkUp ? 0 : 1] = 1;
  } else {
    out[0][0] = 1;
  }
  return out;
}

struct Presentation {
  std::vector<V> top;       // P0 summands
  std::vector<V> rel;       // P1 summands
  Mat coeff;                // rel x top
};

Presentation presentation(const DiskModel& m, const X& x) {
  const V c = center_vertex();
  switch (x.kind) {
    case X::P:
      return {{x.a}, {}, {}};
    case X::Bar:
      if (x.a.is_fork()) return {{x.b}, {other_fork(x.a)}, {{1}}};
      if (x.a == c) return {{x.b}, {V::up(), V::down()}, {{1}, {1}}};
      return {{x.b}, {succ(x.a)}, {{1}}};
    case X::Dbl:
      return {{x.a, x.b}, {V::up(), V::down()}, {{1, -1}, {1, 0}}};
    default:
      throw std::logic_error("presentation of a non-module");
  }
}

// (hom, ext1) of modules x -> n over the hereditary path algebra
std::pair<int, int> hom_ext(const DiskModel& m, const X& x, const X& n) {
  Presentation pr = presentation(m, x);
  std::vector<int> col_off, row_off;
  int cols = 0, rows = 0;
  for (const auto& w : pr.top) {
    col_off.push_back(cols);
    cols += dimension_at(m, n, w);
  }
  for (const auto& u : pr.rel) {
    row_off.push_back(rows);
    rows += dimension_at(m, n, u);
  }
  Mat a(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < pr.rel.size(); ++i)
    for (std::size_t j = 0; j < pr.top.size(); ++j) {
      long long k = pr.coeff[i][j];
      if (k == 0) continue;
      Mat blk = structure_map(m, n, pr.top[j], pr.rel[i]);
      for (std::size_t r = 0; r < blk.size(); ++r)
        for (std::size_t s = 0; s < blk[r].size(); ++s) a[row_off[i] + r][col_off[j] + s] = k * blk[r][s];
    }
  int rk = rank_of(a);
  return {cols - rk, rows - rk};
}

}  // namespace

int presentation_cluster_ext(const DiskModel& m, const Indecomposable& x, const Indecomposable& y) {
  const bool sx = x.kind == X::P1, sy = y.kind == X::P1;
  if (sx && sy) return 0;
  if (sx) return dimension_at(m, y, x.a);
  if (sy) return dimension_at(m, x, y.a);
  return hom_ext(m, x, y).second + hom_ext(m, y, x).second;
}

// ---- Ext positivity ------------------------------------------------------

namespace {

// puncture-type M against a non-puncture N, following the case split of the proof
bool puncture_case(const DiskModel& m, const X& M, const X& N) {
  const V c = center_vertex();
  if (M.kind == X::P) {
    switch (N.kind) {
      case X::P:
      case X::P1: return false;
      case X::Bar: return N.a == c;
      default: return true;
    }
  }
  if (M.kind == X::P1) return N.kind == X::P || N.kind == X::Dbl;
  const V& x = M.b;
  switch (N.kind) {
    case X::P: return closer_to_fork(m, N.a, x);
    case X::P1: return has_path(m, x, N.a);
    case X::Bar:
      return x == succ(N.a) || (x != N.b && has_path(m, N.b, x) && has_path(m, x, N.a));
    case X::Dbl: return closer_to_fork(m, N.b, x) || closer_to_fork(m, x, N.a);
    default: throw std::logic_error("puncture_case");
  }
}

}  // namespace

ExtVerdict ext_verdict(const DiskModel& m, const Indecomposable& x, const Indecomposable& y) {
  if (x == y) throw Failure(ErrorCode::EqualObjects, "ext of an object with itself");
  ExtVerdict v;
  if (!m.completed) {
    const bool px = is_puncture_type(x), py = is_puncture_type(y);
    if (px != py) {
      v.positive = px ? puncture_case(m, x, y) : puncture_case(m, y, x);
    } else {
      v.dim_sum = 2 * presentation_cluster_ext(m, x, y);
      v.positive = v.dim_sum > 0;
    }
    v.above_threshold = v.positive;
    return v;
  }
  const DiskModel d = doubled_model(m);
  const X ix = iota(m, x), iy = iota(m, y);
  v.dim_sum = presentation_cluster_ext(d, slide_up(d, ix), iy) +
              presentation_cluster_ext(d, slide_up(d, iy), ix);
  v.positive = v.dim_sum > 0;
  v.shared_limit = share_limit_point(phi(m, x), phi(m, y));
  v.above_threshold = v.shared_limit ? v.dim_sum > 1 : v.dim_sum > 0;
  return v;
}

bool ext_sum_positive(const DiskModel& m, const Indecomposable& x, const Indecomposable& y) {
  return ext_verdict(m, x, y).positive;
}

bool compatible(const DiskModel& m, const Indecomposable& x, const Indecomposable& y) {
  if (x == y) return true;
  if (!m.completed) return !ext_sum_positive(m, x, y);
  return crossing_number(m, phi(m, x), phi(m, y)) == 0;
}

// ---- text ----------------------------------------------------------------

std::string to_string(const QuiverVertex& v) {
  if (v.kind == V::ForkUp) return "(1,-1)";
  if (v.kind == V::ForkDown) return "(1,-1')";
  return to_string(v.pt);
}

namespace {
std::string inner(const V& v) {
  std::string s = to_string(v);
  return s.substr(1, s.size() - 2);
}
}  // namespace

std::string to_string(const Indecomposable& x) {
  switch (x.kind) {
    case X::P: return "P" + to_string(x.a);
    case X::P1: return "P" + to_string(x.a) + "[1]";
    case X::Bar: return "M[" + inner(x.a) + "," + inner(x.b) + "]";
    case X::Dbl: return "M" + to_string(x.a) + "^2" + to_string(x.b);
    case X::Hob: return "M(" + inner(x.a) + "," + inner(x.b) + "]";
  }
  return "?";
}

}  // namespace dinf
