#include "dinf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "dinf/error.hpp"

namespace dinf {

FiniteQuiver dynkin_d(int k) {
  if (k < 4) throw Failure(ErrorCode::ShapeMismatch, "D_k needs k >= 4");
  FiniteQuiver q;
  q.k = k;
  q.arrows = {{3, 1}, {3, 2}};
  for (int i = 3; i < k; ++i) q.arrows.push_back({i + 1, i});
  return q;
}

std::string dim_label(const DimVector& d) {
  const bool wide = d.size() >= 10;
  std::string out;
  for (int v = static_cast<int>(d.size()); v >= 1; --v) {
    int m = d[v - 1];
    if (m <= 0) continue;
    if (wide && !out.empty() && out.back() != ' ') out += ' ';
    out += std::to_string(v);
    if (m > 1) out += "^" + std::to_string(m) + " ";
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

DimVector projective_dim(const FiniteQuiver& q, int v) {
  DimVector d(q.k, 0);
  d[v - 1] = 1;
  // follow arrows towards the forks
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [s, t] : q.arrows)
      if (s == x) {
        d[t - 1] += 1;
        stack.push_back(t);
      }
  }
  return d;
}

// ---- Hom by intertwiners -------------------------------------------------

int hom_dim(const FiniteRep& m, const FiniteRep& n) {
  if (m.k != n.k || m.maps.size() != n.maps.size())
    throw Failure(ErrorCode::ShapeMismatch, "representations of different quivers");
  const FiniteQuiver q = dynkin_d(m.k);
  std::vector<int> off(q.k + 1, 0);
  for (int v = 0; v < q.k; ++v) off[v + 1] = off[v] + n.dim[v] * m.dim[v];
  const int unknowns = off[q.k];
  if (unknowns == 0) return 0;
  auto idx = [&](int v, int i, int j) { return off[v] + i * m.dim[v] + j; };

  int eqs = 0;
  for (auto [s, t] : q.arrows) eqs += n.dim[t - 1] * m.dim[s - 1];
  QMatrix a(eqs, unknowns);
  int row = 0;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const int s = q.arrows[ai].first - 1, t = q.arrows[ai].second - 1;
    const QMatrix& ma = m.maps[ai];
    const QMatrix& na = n.maps[ai];
    for (int i = 0; i < n.dim[t]; ++i)
      for (int j = 0; j < m.dim[s]; ++j, ++row) {
        for (int l = 0; l < n.dim[s]; ++l) a(row, idx(s, l, j)) += na(i, l);
        for (int l = 0; l < m.dim[t]; ++l) a(row, idx(t, i, l)) -= ma(l, j);
      }
  }
  return unknowns - rank(a);
}

int euler_form(const FiniteQuiver& q, const DimVector& d1, const DimVector& d2) {
  if (static_cast<int>(d1.size()) != q.k || static_cast<int>(d2.size()) != q.k)
    throw Failure(ErrorCode::ShapeMismatch, "dimension vector length");
  int s = 0;
  for (int v = 0; v < q.k; ++v) s += d1[v] * d2[v];
  for (auto [a, b] : q.arrows) s -= d1[a - 1] * d2[b - 1];
  return s;
}

int ext1_dim(const FiniteRep& m, const FiniteRep& n) {
  if (m.k != n.k) throw Failure(ErrorCode::ShapeMismatch, "representations of different quivers");
  return hom_dim(m, n) - euler_form(dynkin_d(m.k), m.dim, n.dim);
}

int cluster_ext_dim(const FiniteObject& x, const FiniteObject& y) {
  if (x.shifted && y.shifted) return 0;
  if (x.shifted) return y.rep.dim.at(x.vertex - 1);
  if (y.shifted) return x.rep.dim.at(y.vertex - 1);
  return ext1_dim(x.rep, y.rep) + ext1_dim(y.rep, x.rep);
}

// ---- representatives -----------------------------------------------------

FiniteRep projective_rep(const FiniteQuiver& q, int v) {
  DimVector d = projective_dim(q, v);
  FiniteRep r{q.k, d, {}};
  for (auto [s, t] : q.arrows) {
    QMatrix mtx(d[t - 1], d[s - 1]);
    if (d[s - 1] && d[t - 1]) mtx(0, 0) = 1;
    r.maps.push_back(mtx);
  }
  return r;
}

namespace {

std::uint64_t dim_seed(int k, const DimVector& d) {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(k);
  for (int x : d) h = (h ^ static_cast<std::uint64_t>(x + 7)) * 1099511628211ull;
  return h;
}

std::mutex g_rep_mu;
std::map<std::pair<int, DimVector>, FiniteRep> g_reps;

std::mutex g_ext_mu;
std::map<std::tuple<int, bool, int, DimVector, bool, int, DimVector>, int> g_ext;

}  // namespace

FiniteRep generic_rep(const FiniteQuiver& q, const DimVector& d) {
  {
    std::lock_guard lk(g_rep_mu);
    auto it = g_reps.find({q.k, d});
    if (it != g_reps.end()) return it->second;
  }
  std::mt19937_64 rng(dim_seed(q.k, d));
  std::uniform_int_distribution<int> coef(-2, 2);
  FiniteRep r{q.k, d, {}};
  for (int attempt = 0;; ++attempt) {
    if (attempt > 500) throw std::runtime_error("no indecomposable with dimension " + dim_label(d));
    r.maps.clear();
    for (auto [s, t] : q.arrows) {
      QMatrix mtx(d[t - 1], d[s - 1]);
      for (auto& x : mtx.a) x = coef(rng);
      r.maps.push_back(std::move(mtx));
    }
    if (hom_dim(r, r) == 1) break;
  }
  std::lock_guard lk(g_rep_mu);
  g_reps.emplace(std::pair{q.k, d}, r);
  return r;
}

int cluster_ext_classes(int k, bool xs, int xv, const DimVector& xd, bool ys, int yv,
                        const DimVector& yd) {
  if (xs && ys) return 0;
  if (xs) return yd.at(xv - 1);
  if (ys) return xd.at(yv - 1);
  auto key = std::tuple{k, xs, xv, xd, ys, yv, yd};
  {
    std::lock_guard lk(g_ext_mu);
    auto it = g_ext.find(key);
    if (it != g_ext.end()) return it->second;
  }
  FiniteQuiver q = dynkin_d(k);
  FiniteObject x{false, 0, generic_rep(q, xd)}, y{false, 0, generic_rep(q, yd)};
  int v = cluster_ext_dim(x, y);
  std::lock_guard lk(g_ext_mu);
  g_ext.emplace(key, v);
  return v;
}

// ---- knitting ------------------------------------------------------------

namespace {

struct Knit {
  int k;
  std::vector<std::vector<DimVector>> layer;  // layer[m][v-1], K_0 classes
  std::vector<int> last;                      // per orbit: layer holding the shifted projective
  std::vector<int> shift_of;                  // per orbit: which P_w[1] sits there
};

bool positive(const DimVector& d) {
  bool any = false;
  for (int x : d) {
    if (x < 0) return false;
    any = any || x > 0;
  }
  return any;
}

Knit knit(const FiniteQuiver& q) {
  Knit kn{q.k, {}, std::vector<int>(q.k, -1), std::vector<int>(q.k, 0)};
  std::vector<DimVector> l0;
  for (int v = 1; v <= q.k; ++v) l0.push_back(projective_dim(q, v));
  kn.layer.push_back(l0);
  // order of computation inside a layer: forks first, then outward
  std::vector<int> order;
  for (int v = 1; v <= q.k; ++v) order.push_back(v);

  for (int m = 1;; ++m) {
    bool pending = false;
    for (int v = 0; v < q.k; ++v) pending = pending || kn.last[v] < 0;
    if (!pending) break;
    if (m > 4 * q.k) throw std::logic_error("knitting did not close");
    std::vector<DimVector> cur(q.k, DimVector(q.k, 0));
    for (int v : order) {
      // successors of (m-1, v): (m-1, i) for i->v, (m, j) for v->j
      DimVector d(q.k, 0);
      for (auto [s, t] : q.arrows) {
        if (t == v)
          for (int x = 0; x < q.k; ++x) d[x] += kn.layer[m - 1][s - 1][x];
        if (s == v)
          for (int x = 0; x < q.k; ++x) d[x] += cur[t - 1][x];
      }
      for (int x = 0; x < q.k; ++x) d[x] -= kn.layer[m - 1][v - 1][x];
      cur[v - 1] = d;
    }
    for (int v = 1; v <= q.k; ++v) {
      if (kn.last[v - 1] >= 0) continue;
      if (!positive(cur[v - 1])) {
        kn.last[v - 1] = m;
        DimVector neg = cur[v - 1];
        for (auto& x : neg) x = -x;
        for (int w = 1; w <= q.k; ++w)
          if (projective_dim(q, w) == neg) kn.shift_of[v - 1] = w;
        if (kn.shift_of[v - 1] == 0) throw std::logic_error("orbit does not end at a shifted projective");
      }
    }
    kn.layer.push_back(cur);
  }
  return kn;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> zq_arrows_from(
    const FiniteQuiver& q, int m, int v) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (auto [s, t] : q.arrows) {
    if (t == v) out.push_back({{m, v}, {m, s}});
    if (s == v) out.push_back({{m, v}, {m + 1, t}});
  }
  return out;
}

}  // namespace

int ARQuiver::find_module(const DimVector& d) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!vertices[i].shifted && vertices[i].dim == d) return static_cast<int>(i);
  return -1;
}

int ARQuiver::find_shifted(int v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].shifted && vertices[i].proj == v) return static_cast<int>(i);
  return -1;
}

namespace {

ARQuiver build_ar(const FiniteQuiver& q, bool cluster) {
  Knit kn = knit(q);
  ARQuiver ar;
  ar.k = q.k;
  ar.cluster = cluster;
  std::map<std::pair<int, int>, int> id;
  for (int v = 1; v <= q.k; ++v) {
    const int top = cluster ? kn.last[v - 1] : kn.last[v - 1] - 1;
    for (int m = 0; m <= top; ++m) {
      ARVertex x;
      x.layer = m;
      x.orbit = v;
      if (m == kn.last[v - 1]) {
        x.shifted = true;
        x.proj = kn.shift_of[v - 1];
        x.dim = projective_dim(q, x.proj);
        x.label = "P" + std::to_string(x.proj) + "[1]";
      } else {
        x.dim = kn.layer[m][v - 1];
        x.proj = m == 0 ? v : 0;
        x.label = m == 0 ? "P" + std::to_string(v) : dim_label(x.dim);
      }
      id[{m, v}] = static_cast<int>(ar.vertices.size());
      ar.vertices.push_back(x);
    }
  }
  // orbit holding P_w[1], for folding
  std::vector<int> orbit_of_shift(q.k + 1, 0);
  for (int v = 1; v <= q.k; ++v) orbit_of_shift[kn.shift_of[v - 1]] = v;

  for (const auto& [mv, src] : id) {
    for (const auto& [from, to] : zq_arrows_from(q, mv.first, mv.second)) {
      auto it = id.find(to);
      if (it != id.end()) {
        ar.arrows.push_back({src, it->second});
        continue;
      }
      if (!cluster) continue;
      // to = F(t, w) with P_w[1] in orbit u = to.second
      const int u = to.second;
      const int t = to.first - kn.last[u - 1] - 1;
      int w = kn.shift_of[u - 1];
      auto jt = id.find({t, w});
      if (t >= 0 && jt != id.end()) ar.arrows.push_back({src, jt->second});
    }
    (void)orbit_of_shift;
  }
  for (const auto& [mv, x] : id) {
    if (mv.first >= 1) {
      ar.tau.push_back({x, id.at({mv.first - 1, mv.second})});
    } else if (cluster) {
      const int u = orbit_of_shift[mv.second];
      ar.tau.push_back({x, id.at({kn.last[u - 1], u})});
    }
  }
  std::sort(ar.arrows.begin(), ar.arrows.end());
  std::sort(ar.tau.begin(), ar.tau.end());
  return ar;
}

}  // namespace

ARQuiver knit_module_ar(const FiniteQuiver& q) { return build_ar(q, false); }
ARQuiver knit_cluster_ar(const FiniteQuiver& q) { return build_ar(q, true); }

std::vector<FiniteRep> enumerate_indecomposables(const FiniteQuiver& q) {
  if (q.k > 16) throw Failure(ErrorCode::ShapeMismatch, "explicit representations only up to k = 16");
  ARQuiver ar = knit_module_ar(q);
  std::vector<FiniteRep> out;
  for (const auto& v : ar.vertices) out.push_back(v.layer == 0 ? projective_rep(q, v.orbit) : generic_rep(q, v.dim));
  return out;
}

std::vector<FiniteObject> cluster_objects(const FiniteQuiver& q) {
  std::vector<FiniteObject> out;
  for (auto& r : enumerate_indecomposables(q)) out.push_back({false, 0, std::move(r)});
  for (int v = 1; v <= q.k; ++v) out.push_back({true, v, {}});
  return out;
}

std::vector<std::vector<int>> enumerate_cluster_tilting(const FiniteQuiver& q) {
  if (q.k > 6) throw Failure(ErrorCode::ShapeMismatch, "tilting enumeration is capped at k = 6");
  auto obj = cluster_objects(q);
  const int n = static_cast<int>(obj.size());
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) ok[i][j] = ok[j][i] = cluster_ext_dim(obj[i], obj[j]) == 0;

  // maximal cliques of the compatibility graph (Bron-Kerbosch with pivot)
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          auto s = r;
          std::sort(s.begin(), s.end());
          out.push_back(s);
          return;
        }
        int piv = !p.empty() ? p.front() : x.front();
        std::vector<int> cand;
        for (int v : p)
          if (!ok[piv][v] || v == piv) cand.push_back(v);
        for (int v : cand) {
          std::vector<int> p2, x2;
          for (int w : p)
            if (w != v && ok[v][w]) p2.push_back(w);
          for (int w : x)
            if (ok[v][w]) x2.push_back(w);
          r.push_back(v);
          bk(r, p2, x2);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<int> all, r;
  for (int i = 0; i < n; ++i)
    if (ok[i][i]) all.push_back(i);
  bk(r, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

// ---- exchange matrices ---------------------------------------------------

ExchangeMatrix exchange_matrix(const FiniteQuiver& q) {
  ExchangeMatrix b;
  b.b.assign(q.k, std::vector<std::int64_t>(q.k, 0));
  for (auto [s, t] : q.arrows) {
    b.b[s - 1][t - 1] += 1;
    b.b[t - 1][s - 1] -= 1;
  }
  return b;
}

ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& b, int z) {
  const int n = b.size();
  if (z < 0 || z >= n) throw Failure(ErrorCode::BadIndex, "mutation index " + std::to_string(z));
  ExchangeMatrix r = b;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == z || y == z) {
        r.b[x][y] = -b.b[x][y];
        continue;
      }
      const std::int64_t bxz = b.b[x][z], bzy = b.b[z][y];
      r.b[x][y] = b.b[x][y] + (std::llabs(bxz) * bzy + bxz * std::llabs(bzy)) / 2;
    }
  return r;
}

bool is_skew_symmetric(const ExchangeMatrix& b) {
  for (int x = 0; x < b.size(); ++x) {
    if (static_cast<int>(b.b[x].size()) != b.size()) return false;
    for (int y = 0; y < b.size(); ++y)
      if (b.b[x][y] != -b.b[y][x]) return false;
  }
  return true;
}

}  // namespace dinf
