#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dinf/embed.hpp"
#include "dinf/oracle.hpp"

using namespace dinf;

namespace {

FiniteRep simple(const FiniteQuiver& q, int v) {
  FiniteRep r{q.k, DimVector(q.k, 0), {}};
  r.dim[v - 1] = 1;
  for (auto [s, t] : q.arrows) r.maps.emplace_back(r.dim[t - 1], r.dim[s - 1]);
  return r;
}

// Tits form of D_k, written out from the graph
int tits(const FiniteQuiver& q, const DimVector& d) {
  int s = 0;
  for (int x : d) s += x * x;
  for (auto [a, b] : q.arrows) s -= d[a - 1] * d[b - 1];
  return s;
}

// positive roots: every vector with entries in {0,1,2} of Tits form 1
std::set<DimVector> roots_by_search(const FiniteQuiver& q) {
  std::set<DimVector> out;
  DimVector d(q.k, 0);
  for (;;) {
    int v = 0;
    while (v < q.k && d[v] == 2) d[v++] = 0;
    if (v == q.k) break;
    ++d[v];
    if (tits(q, d) == 1) out.insert(d);
  }
  return out;
}

struct Fixture {
  const char* label;
  DimVector dim;
};

// the 20 vertices of the D5 drawing
const std::vector<Fixture> kD5 = {
    {"P1", {1, 0, 0, 0, 0}},     {"P2", {0, 1, 0, 0, 0}},     {"P3", {1, 1, 1, 0, 0}},
    {"P4", {1, 1, 1, 1, 0}},     {"P5", {1, 1, 1, 1, 1}},     {"31", {1, 0, 1, 0, 0}},
    {"32", {0, 1, 1, 0, 0}},     {"43^2 21", {1, 1, 2, 1, 0}}, {"432", {0, 1, 1, 1, 0}},
    {"431", {1, 0, 1, 1, 0}},    {"543^2 21", {1, 1, 2, 1, 1}}, {"54^2 3^2 21", {1, 1, 2, 2, 1}},
    {"43", {0, 0, 1, 1, 0}},     {"I4", {0, 0, 0, 1, 1}},     {"I5", {0, 0, 0, 0, 1}},
    {"S4", {0, 0, 0, 1, 0}},     {"S3", {0, 0, 1, 0, 0}},     {"I1", {1, 0, 1, 1, 1}},
    {"I2", {0, 1, 1, 1, 1}},     {"I3", {0, 0, 1, 1, 1}}};

}  // namespace

TEST_CASE("quiver shape") {
  auto q = dynkin_d(5);
  CHECK(q.arrows == std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 3}, {5, 4}});
  CHECK(projective_dim(q, 5) == DimVector{1, 1, 1, 1, 1});
  CHECK(projective_dim(q, 1) == DimVector{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(dynkin_d(3), Failure);
}

TEST_CASE("hom dimensions") {
  auto q = dynkin_d(5);
  CHECK(hom_dim(projective_rep(q, 1), projective_rep(q, 1)) == 1);
  // the path 5 -> 1 gives P1 -> P5 (Hom(P_i, M) = M_i)
  CHECK(hom_dim(projective_rep(q, 1), projective_rep(q, 5)) == 1);
  CHECK(hom_dim(projective_rep(q, 5), projective_rep(q, 1)) == 0);
  CHECK(hom_dim(simple(q, 1), simple(q, 2)) == 0);
  CHECK(hom_dim(simple(q, 3), simple(q, 3)) == 1);
  CHECK_THROWS_AS(hom_dim(simple(q, 1), simple(dynkin_d(4), 1)), Failure);
}

TEST_CASE("euler form and ext") {
  auto q = dynkin_d(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      CHECK(euler_form(q, projective_dim(q, i), projective_dim(q, j)) ==
            hom_dim(projective_rep(q, i), projective_rep(q, j)));
  CHECK(euler_form(q, simple(q, 5).dim, simple(q, 4).dim) == -1);
  CHECK(ext1_dim(simple(q, 5), simple(q, 4)) == 1);
  CHECK(ext1_dim(simple(q, 4), simple(q, 5)) == 0);
  const auto mods = enumerate_indecomposables(q);
  for (int i = 1; i <= 5; ++i)
    for (const auto& m : mods) CHECK(ext1_dim(projective_rep(q, i), m) == 0);
}

TEST_CASE("knitting yields the positive roots") {
  for (int k = 4; k <= 9; ++k) {
    auto q = dynkin_d(k);
    auto ar = knit_module_ar(q);
    CHECK(ar.vertices.size() == static_cast<std::size_t>(k * (k - 1)));
    std::set<DimVector> knitted;
    for (const auto& v : ar.vertices) {
      CHECK(tits(q, v.dim) == 1);
      CHECK(euler_form(q, v.dim, v.dim) == 1);
      knitted.insert(v.dim);
    }
    CHECK(knitted == roots_by_search(q));
    auto cl = knit_cluster_ar(q);
    CHECK(cl.vertices.size() == static_cast<std::size_t>(k * k));
    CHECK(cl.tau.size() == cl.vertices.size());
  }
}

TEST_CASE("D5 matches the reference drawing") {
  auto q = dynkin_d(5);
  const auto mods = enumerate_indecomposables(q);
  REQUIRE(mods.size() == 20);
  std::multiset<DimVector> got, want;
  for (const auto& m : mods) got.insert(m.dim);
  for (const auto& f : kD5) want.insert(f.dim);
  CHECK(got == want);
  for (const auto& f : kD5)
    if (f.label[0] != 'P' && f.label[0] != 'I' && f.label[0] != 'S') CHECK(dim_label(f.dim) == f.label);
  CHECK(dim_label({1, 1, 2, 1, 0}) == "43^2 21");
  for (const auto& m : mods) {
    CHECK(hom_dim(m, m) == 1);
    CHECK(ext1_dim(m, m) == 0);
  }
  auto ar = knit_module_ar(q);
  CHECK(ar.arrows.size() == 28);
  std::map<int, int> orbit_len;
  for (const auto& v : ar.vertices) ++orbit_len[v.orbit];
  for (auto [o, len] : orbit_len) CHECK(len == 4);
}

TEST_CASE("rigidity up to D6") {
  for (int k = 4; k <= 6; ++k)
    for (const auto& m : enumerate_indecomposables(dynkin_d(k))) CHECK(ext1_dim(m, m) == 0);
}

TEST_CASE("cluster ext symmetry") {
  for (int k = 4; k <= 6; ++k) {
    const auto objs = cluster_objects(dynkin_d(k));
    for (const auto& x : objs)
      for (const auto& y : objs) CHECK(cluster_ext_dim(x, y) == cluster_ext_dim(y, x));
    std::vector<FiniteObject> proj;
    for (int v = 1; v <= k; ++v) proj.push_back({false, 0, projective_rep(dynkin_d(k), v)});
    for (const auto& x : proj)
      for (const auto& y : proj) CHECK(cluster_ext_dim(x, y) == 0);
  }
}

TEST_CASE("tilting sets against brute force over 4-subsets") {
  auto q = dynkin_d(4);
  const auto objs = cluster_objects(q);
  REQUIRE(objs.size() == 16);
  std::set<std::vector<int>> brute;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      for (int c = b + 1; c < 16; ++c)
        for (int d = c + 1; d < 16; ++d) {
          const int s[4] = {a, b, c, d};
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = i; j < 4 && ok; ++j) ok = cluster_ext_dim(objs[s[i]], objs[s[j]]) == 0;
          if (ok) brute.insert({a, b, c, d});
        }
  CHECK(brute.size() == 50);
  const auto sets = enumerate_cluster_tilting(q);
  CHECK(std::set<std::vector<int>>(sets.begin(), sets.end()) == brute);
  CHECK(enumerate_cluster_tilting(dynkin_d(5)).size() == 182);
  CHECK(enumerate_cluster_tilting(dynkin_d(6)).size() == 672);
  CHECK_THROWS_AS(enumerate_cluster_tilting(dynkin_d(7)), Failure);
}

TEST_CASE("exchange pairs") {
  for (int k = 4; k <= 5; ++k) {
    auto q = dynkin_d(k);
    const auto objs = cluster_objects(q);
    const auto sets = enumerate_cluster_tilting(q);
    std::set<std::vector<int>> all(sets.begin(), sets.end());
    for (const auto& s : sets)
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto rest = s;
        rest.erase(rest.begin() + static_cast<long>(i));
        std::vector<int> completions;
        for (int o = 0; o < static_cast<int>(objs.size()); ++o) {
          auto c = rest;
          if (std::find(c.begin(), c.end(), o) != c.end()) continue;
          c.push_back(o);
          std::sort(c.begin(), c.end());
          if (all.count(c)) completions.push_back(o);
        }
        REQUIRE(completions.size() == 2);
        CHECK(cluster_ext_dim(objs[completions[0]], objs[completions[1]]) == 1);
        CHECK(cluster_ext_dim(objs[completions[1]], objs[completions[0]]) == 1);
      }
  }
}

TEST_CASE("exchange matrices") {
  ExchangeMatrix b{{{0, 1}, {-1, 0}}};
  CHECK(mutate_exchange_matrix(b, 0) == ExchangeMatrix{{{0, -1}, {1, 0}}});
  CHECK(mutate_exchange_matrix(mutate_exchange_matrix(b, 0), 0) == b);
  auto d4 = exchange_matrix(dynkin_d(4));
  CHECK(is_skew_symmetric(d4));
  auto m1 = mutate_exchange_matrix(d4, 0);
  CHECK(is_skew_symmetric(m1));
  CHECK(m1 != d4);
  // 3 -> 1 and 3 -> 2 around the fork vertex 3: mutating there reverses them
  auto m3 = mutate_exchange_matrix(d4, 2);
  CHECK(m3.b[2][0] == -1);
  CHECK(m3.b[3][0] == 1);
  CHECK_THROWS_AS(mutate_exchange_matrix(b, 2), Failure);
  CHECK_FALSE(is_skew_symmetric(ExchangeMatrix{{{0, 1}, {1, 0}}}));
}

TEST_CASE("window embedding") {
  using V = QuiverVertex;
  using X = Indecomposable;
  DiskModel m{1, false};
  const X pu = X::proj(V::up());
  const X dbl = X::dbl(V::tail(MarkedPoint::at(1, -3)), V::tail(MarkedPoint::at(1, 2)));
  const X sh = X::shifted(V::tail(MarkedPoint::at(1, 2)));
  auto w = embed_window(m, {pu, dbl, sh}, 4);
  const int k = w.quiver.k;
  CHECK(w.objects.at(pu).rep.dim == projective_dim(w.quiver, 1));
  CHECK(w.objects.at(sh).shifted);
  CHECK(w.spine.tail[static_cast<std::size_t>(w.objects.at(sh).vertex - 3)] == V::tail(MarkedPoint::at(1, 2)));
  const auto& rep = w.objects.at(dbl).rep;
  int matches = 0;
  for (const auto& mod : enumerate_indecomposables(dynkin_d(k)))
    if (mod.dim == rep.dim) ++matches;
  CHECK(matches == 1);
  CHECK(hom_dim(rep, rep) == 1);
  CHECK(std::count(rep.dim.begin(), rep.dim.end(), 2) > 0);
  CHECK_THROWS_AS(embed_window(m, {dbl}, 2), Failure);

  DiskModel c{1, true};
  const X pinf = X::proj(V::tail(MarkedPoint::limit(1)));
  auto wc = embed_window(c, {pinf}, 3);
  CHECK(wc.routed.at(pinf) == X::proj(V::tail(MarkedPoint::at(2, 0))));
  CHECK(collapse(c, wc.routed.at(pinf)) == pinf);
}
