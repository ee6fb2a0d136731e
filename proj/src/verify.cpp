#include "dinf/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dinf/embed.hpp"
#include "dinf/quiver_export.hpp"
#include "dinf/triangulation.hpp"

namespace dinf {

namespace {

using X = Indecomposable;
using V = QuiverVertex;

void finish(PropertyResult& r) { std::sort(r.failures.begin(), r.failures.end()); }

std::string pair_text(const X& x, const X& y) { return to_string(x) + " / " + to_string(y); }

// every unordered pair, optionally split over threads; results are order-normalized
template <class F>
PropertyResult pair_sweep(const std::string& name, const std::vector<X>& objs, bool parallel, F&& test) {
  PropertyResult r;
  r.name = name;
  const long n = static_cast<long>(objs.size());
  std::vector<std::vector<std::string>> fails(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (auto msg = test(objs[i], objs[j]); !msg.empty()) fails[i].push_back(msg);
  } else {
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (auto msg = test(objs[i], objs[j]); !msg.empty()) fails[i].push_back(msg);
  }
  r.checked = n * (n - 1) / 2;
  for (auto& f : fails) r.failures.insert(r.failures.end(), f.begin(), f.end());
  finish(r);
  return r;
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass(); });
}

TaggedEdge translate_with(Fault f, const DiskModel& m, const TaggedEdge& e) {
  TaggedEdge t = translate(m, e);
  if (f == Fault::FlippedTag && t.is_puncture()) t.tag = -t.tag;
  return t;
}

PropertyResult check_bijection(const DiskModel& m, pos_t bound, Fault f) {
  PropertyResult r;
  r.name = "bijection";
  std::map<TaggedEdge, X> seen;
  for (const auto& x : window_objects(m, bound)) {
    ++r.checked;
    const TaggedEdge e = phi(m, x);
    if (auto [it, fresh] = seen.emplace(e, x); !fresh)
      r.failures.push_back("not injective: " + pair_text(it->second, x));
    auto back = phi_inverse(m, e);
    if (!back.ok() || back.value() != x) r.failures.push_back("inverse: " + to_string(x));
    if (phi(m, ar_translate(m, x)) != translate_with(f, m, e))
      r.failures.push_back("commutation: " + to_string(x));
  }
  finish(r);
  return r;
}

PropertyResult check_move_lemma(const DiskModel& m, pos_t bound) {
  PropertyResult r;
  r.name = "move-lemma";
  const auto edges = window_edges(m, bound);
  for (const auto& e : edges)
    for (const auto& f : edges) {
      if (e == f) continue;
      ++r.checked;
      const TaggedEdge tf = translate(m, f);
      if (is_elementary_move(m, e, f) != (tf != e && is_elementary_move(m, tf, e)))
        r.failures.push_back(to_string(e) + " -> " + to_string(f));
    }
  finish(r);
  return r;
}

PropertyResult check_crossing_ext(const DiskModel& m, pos_t bound, bool parallel) {
  const auto objs = window_objects(m, bound);
  return pair_sweep("crossing-ext", objs, parallel, [&](const X& x, const X& y) -> std::string {
    const bool ext = ext_verdict(m, x, y).above_threshold;
    const int cr = crossing_number(m, phi(m, x), phi(m, y));
    if (ext == (cr >= 1)) return {};
    return pair_text(x, y) + " ext=" + (ext ? "yes" : "no") + " crossing=" + std::to_string(cr);
  });
}

namespace {

int oracle_dim_sum(const DiskModel& m, const X& x, const X& y) {
  if (!m.completed) return oracle_cluster_ext(m, x, y);
  const DiskModel d = doubled_model(m);
  const X ix = iota(m, x), iy = iota(m, y);
  return oracle_cluster_ext(d, slide_up(d, ix), iy) + oracle_cluster_ext(d, slide_up(d, iy), ix);
}

}  // namespace

PropertyResult check_oracle_ext(const DiskModel& m, pos_t bound, bool parallel) {
  const auto objs = window_objects(m, bound);
  // warm the representation cache serially so threads mostly read it
  for (std::size_t i = 0; i < objs.size(); ++i) oracle_dim_sum(m, objs[i], objs[(i + 1) % objs.size()]);
  return pair_sweep("oracle-ext", objs, parallel, [&](const X& x, const X& y) -> std::string {
    const TaggedEdge ex = phi(m, x), ey = phi(m, y);
    const int sum = oracle_dim_sum(m, x, y);
    const bool shared = m.completed && share_limit_point(ex, ey);
    const bool ext = shared ? sum > 1 : sum > 0;
    const int cr = crossing_number(m, ex, ey);
    if (ext == (cr >= 1)) return {};
    return pair_text(x, y) + " ext=" + std::to_string(sum) + " crossing=" + std::to_string(cr);
  });
}

namespace {

bool limit_arc(const TaggedEdge& e) { return e.from.inf && e.to.inf; }

void check_members(const Triangulation& t, pos_t bound, PropertyResult& r, const std::string& where) {
  for (const auto& e : members_in_window(t, bound)) {
    ++r.checked;
    auto mu = mutate(t, e);
    if (t.model.completed && limit_arc(e)) {
      if (mu.ok() || mu.error().code != ErrorCode::NonMutable)
        r.failures.push_back(where + ": limit arc mutable " + to_string(e));
      continue;
    }
    // arcs to an accumulation point may be limits of other members
    if (!mu.ok() && t.model.completed && touches_limit(e) && mu.error().code == ErrorCode::NonMutable) continue;
    if (!mu.ok()) {
      r.failures.push_back(where + ": " + code_name(mu.error().code) + " at " + to_string(e));
      continue;
    }
    const auto& res = mu.value();
    if (auto s = validate(res.result); !s) {
      r.failures.push_back(where + ": invalid result for " + to_string(e));
      continue;
    }
    auto back = mutate(res.result, res.replacement);
    if (!back.ok() || back.value().replacement != e || !same_members(back.value().result, t, support_bound(t) + 2))
      r.failures.push_back(where + ": not an involution at " + to_string(e));
  }
}

}  // namespace

PropertyResult check_fan_mutation(const DiskModel& m, pos_t bound, int walk_length) {
  PropertyResult r;
  r.name = "fan-mutation";
  std::mt19937_64 rng(11);
  for (const auto& apex : window(m, bound)) {
    auto f = fan(m, apex);
    ++r.checked;
    if (!f.ok()) {
      r.failures.push_back("fan " + to_string(apex) + ": " + f.error().message);
      continue;
    }
    if (auto s = validate(f.value()); !s) {
      r.failures.push_back("fan " + to_string(apex) + " invalid: " + s.error().message);
      continue;
    }
    Triangulation t = f.value();
    check_members(t, bound, r, "fan " + to_string(apex));
    // a short random walk away from the fan
    for (int step = 0; step < walk_length; ++step) {
      std::vector<TaggedEdge> mem;
      for (const auto& e : members_in_window(t, bound - 1))
        if (!(m.completed && limit_arc(e))) mem.push_back(e);
      if (mem.empty()) break;
      auto mu = mutate(t, mem[rng() % mem.size()]);
      if (!mu.ok()) break;
      t = mu.value().result;
      check_members(t, bound, r, "walk " + to_string(apex) + "#" + std::to_string(step));
    }
  }
  finish(r);
  return r;
}

std::vector<DimVector> d5_reference_dims() {
  return {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 1},
          {1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}, {1, 1, 2, 1, 0}, {0, 1, 1, 1, 0}, {1, 0, 1, 1, 0},
          {1, 1, 2, 1, 1}, {1, 1, 2, 2, 1}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1},
          {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 0, 1, 1, 1}};
}

PropertyResult check_finite_counts() {
  PropertyResult r;
  r.name = "finite-counts";
  {
    ++r.checked;
    std::multiset<DimVector> got, want;
    for (const auto& m : enumerate_indecomposables(dynkin_d(5))) got.insert(m.dim);
    for (const auto& d : d5_reference_dims()) want.insert(d);
    if (got != want) r.failures.push_back("D5 classes differ from the reference drawing");
  }
  const FiniteQuiver q4 = dynkin_d(4);
  const auto sets = enumerate_cluster_tilting(q4);
  ++r.checked;
  if (sets.size() != 50) r.failures.push_back("D4 tilting sets: " + std::to_string(sets.size()));
  for (const auto& s : sets) {
    ++r.checked;
    if (s.size() != 4) r.failures.push_back("tilting set of size " + std::to_string(s.size()));
  }
  const auto objs = cluster_objects(q4);
  std::set<std::vector<int>> all(sets.begin(), sets.end());
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.size(); ++i) {
      ++r.checked;
      std::vector<int> rest = s;
      rest.erase(rest.begin() + static_cast<long>(i));
      std::vector<int> partners;
      for (int o = 0; o < static_cast<int>(objs.size()); ++o) {
        if (std::find(rest.begin(), rest.end(), o) != rest.end()) continue;
        auto c = rest;
        c.push_back(o);
        std::sort(c.begin(), c.end());
        if (all.count(c)) partners.push_back(o);
      }
      if (partners.size() != 2) {
        r.failures.push_back("complements: " + std::to_string(partners.size()));
        continue;
      }
      const auto& a = objs[partners[0]];
      const auto& b = objs[partners[1]];
      if (cluster_ext_dim(a, b) != 1 || cluster_ext_dim(b, a) != 1) r.failures.push_back("exchange pair Ext != 1");
    }
  finish(r);
  return r;
}

PropertyResult check_translation_window(const DiskModel& m, pos_t bound) {
  PropertyResult r;
  r.name = "translation-window";
  const EdgeQuiverWindow w = build_edge_quiver_window(m, bound);
  for (int id : translation_law_violations(w.quiver)) r.failures.push_back("law at " + w.quiver.vertices[id].label);

  // spine carrying every finite window object
  const DiskModel d = routed_model(m);
  std::vector<V> tail;
  for (const auto& p : window(m, bound)) {
    if (!is_tail_point(p) || p.inf) continue;
    tail.push_back(V::tail(m.completed ? MarkedPoint::at(2 * p.ray - 1, p.pos) : p));
  }
  if (m.completed)
    for (int j = 1; j <= m.n; ++j)
      for (pos_t a = -1; a <= 1; ++a) tail.push_back(V::tail(MarkedPoint::at(2 * j, a)));
  std::vector<Indecomposable> routed;
  for (const auto& e : w.edges)
    if (!(m.completed && touches_limit(e))) routed.push_back(route(m, phi_inverse(m, e).value()));
  for (const auto& v : spine_for(d, routed).tail)
    if (std::find(tail.begin(), tail.end(), v) == tail.end()) tail.push_back(v);
  const Spine s = make_spine(d, tail);
  const ARQuiver ar = knit_cluster_ar(dynkin_d(s.k()));
  const std::set<std::pair<int, int>> oracle(ar.arrows.begin(), ar.arrows.end());

  std::vector<int> img(w.edges.size(), -1);
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (m.completed && touches_limit(w.edges[i])) continue;
    const FiniteClass c = classify(s, route(m, phi_inverse(m, w.edges[i]).value()));
    img[i] = c.shifted ? ar.find_shifted(c.vertex) : ar.find_module(c.dim);
    if (img[i] < 0) r.failures.push_back("no oracle class for " + to_string(w.edges[i]));
  }
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (w.quiver.vertices[i].clipped) continue;
    ++r.checked;
    if (img[i] < 0) continue;
    for (std::size_t j = 0; j < w.edges.size(); ++j) {
      if (img[j] < 0) continue;
      const int a = static_cast<int>(i), b = static_cast<int>(j);
      const bool in_w = w.quiver.arrow_count(b, a) > 0, in_o = oracle.count({img[j], img[i]}) > 0;
      const bool out_w = w.quiver.arrow_count(a, b) > 0, out_o = oracle.count({img[i], img[j]}) > 0;
      if (in_w != in_o || out_w != out_o)
        r.failures.push_back("arrows differ between " + to_string(w.edges[i]) + " and " + to_string(w.edges[j]));
    }
  }
  finish(r);
  return r;
}

PropertyResult check_exchange_matrices(int count, int max_size, std::uint64_t seed) {
  PropertyResult r;
  r.name = "exchange-matrix";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_size), entry(-3, 3);
  for (int it = 0; it < count; ++it) {
    const int n = size(rng);
    ExchangeMatrix b;
    b.b.assign(n, std::vector<std::int64_t>(n, 0));
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        b.b[x][y] = entry(rng);
        b.b[y][x] = -b.b[x][y];
      }
    for (int z = 0; z < n; ++z) {
      ++r.checked;
      const ExchangeMatrix c = mutate_exchange_matrix(b, z);
      if (!is_skew_symmetric(c)) r.failures.push_back("skew-symmetry lost, case " + std::to_string(it));
      if (mutate_exchange_matrix(c, z) != b) r.failures.push_back("not an involution, case " + std::to_string(it));
    }
  }
  finish(r);
  return r;
}

Report run_verification_suite(const DiskModel& m, pos_t bound, Fault f) {
  if (bound < 2 || bound > 8) throw Failure(ErrorCode::SupportOverflow, "suite bound must lie in [2, 8]");
  Report rep{m, bound, {}};
  rep.properties.push_back(check_bijection(m, bound, f));
  if (!m.completed) rep.properties.push_back(check_move_lemma(m, bound));
  rep.properties.push_back(check_crossing_ext(m, bound));
  rep.properties.push_back(check_oracle_ext(m, std::min<pos_t>(bound, 4)));
  rep.properties.push_back(check_fan_mutation(m, bound));
  rep.properties.push_back(check_finite_counts());
  rep.properties.push_back(check_translation_window(m, std::min<pos_t>(bound, 4)));
  rep.properties.push_back(check_exchange_matrices());
  return rep;
}

std::string summary(const Report& r) {
  std::ostringstream os;
  long failed = 0;
  for (const auto& p : r.properties) {
    os << p.name << ": " << p.checked << " checked, " << p.failed() << " failed\n";
    failed += p.failed();
  }
  os << "total failures: " << failed << "\n";
  return os.str();
}

}  // namespace dinf
