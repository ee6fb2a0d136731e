#include "dinf/quiver_export.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dinf {

int TranslationQuiverWindow::arrow_count(int from, int to) const {
  auto r = std::equal_range(arrows.begin(), arrows.end(), std::pair{from, to});
  return static_cast<int>(r.second - r.first);
}

std::optional<int> EdgeQuiverWindow::find(const TaggedEdge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges.begin());
}

namespace {

void fill_mesh(TranslationQuiverWindow& w) {
  for (const auto& v : w.vertices) {
    auto t = w.tau.find(v.id);
    if (v.clipped || t == w.tau.end()) continue;
    std::vector<int> mid;
    for (std::size_t i = 0; i < w.arrows.size(); ++i) {
      if (w.arrows[i].second != v.id) continue;
      const int y = w.arrows[i].first;
      mid.push_back(y);
      auto it = std::lower_bound(w.arrows.begin(), w.arrows.end(), std::pair{t->second, y});
      if (it != w.arrows.end() && *it == std::pair{t->second, y})
        w.sigma[static_cast<int>(i)] = static_cast<int>(it - w.arrows.begin());
    }
    w.mesh[v.id] = mid;
  }
}

}  // namespace

EdgeQuiverWindow build_edge_quiver_window(const DiskModel& m, pos_t bound) {
  EdgeQuiverWindow out;
  out.edges = window_edges(m, bound);
  auto& w = out.quiver;
  auto in = [&](const TaggedEdge& e) { return out.find(e).has_value(); };
  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    const TaggedEdge& e = out.edges[i];
    w.vertices.push_back({static_cast<int>(i), to_string(e), e.is_puncture() ? "puncture" : "edge", false});
    for (const auto& f : elementary_moves_from(m, e))
      if (auto j = out.find(f)) w.arrows.push_back({static_cast<int>(i), *j});
    if (auto j = out.find(translate(m, e))) w.tau[static_cast<int>(i)] = *j;
  }
  std::sort(w.arrows.begin(), w.arrows.end());

  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    const TaggedEdge& e = out.edges[i];
    bool interior = abs_pos(e) <= bound - 1 && !(m.completed && touches_limit(e));
    const TaggedEdge te = translate(m, e);
    interior = interior && in(te) && in(translate_inverse(m, e));
    for (const auto& f : elementary_moves_from(m, e)) interior = interior && in(f);
    for (const auto& f : elementary_moves_from(m, te)) interior = interior && in(f);
    w.vertices[i].clipped = !interior;
  }
  fill_mesh(w);
  return out;
}

TranslationQuiverWindow build_ZQ_window(const FiniteQuiver& q, int lo, int hi) {
  TranslationQuiverWindow w;
  auto id = [&](int i, int x) { return (i - lo) * q.k + (x - 1); };
  for (int i = lo; i <= hi; ++i)
    for (int x = 1; x <= q.k; ++x) {
      std::string label = "(" + std::to_string(i) + "," + std::to_string(x) + ")";
      w.vertices.push_back({id(i, x), label, "mesh", i == lo || i == hi});
      if (i > lo) w.tau[id(i, x)] = id(i - 1, x);
    }
  for (int i = lo; i <= hi; ++i)
    for (auto [x, y] : q.arrows) {
      w.arrows.push_back({id(i, x), id(i, y)});
      if (i < hi) w.arrows.push_back({id(i, y), id(i + 1, x)});
    }
  std::sort(w.arrows.begin(), w.arrows.end());
  fill_mesh(w);
  return w;
}

TranslationQuiverWindow build_ar_window(const ARQuiver& ar) {
  TranslationQuiverWindow w;
  std::set<int> has_tau;
  for (auto [x, t] : ar.tau) has_tau.insert(x);
  for (std::size_t i = 0; i < ar.vertices.size(); ++i) {
    const auto& v = ar.vertices[i];
    const bool clipped = !ar.cluster && !has_tau.count(static_cast<int>(i));
    w.vertices.push_back({static_cast<int>(i), v.label, v.shifted ? "shifted" : "module", clipped});
  }
  w.arrows = ar.arrows;
  std::sort(w.arrows.begin(), w.arrows.end());
  for (auto [x, t] : ar.tau) w.tau[x] = t;
  fill_mesh(w);
  return w;
}

std::vector<int> translation_law_violations(const TranslationQuiverWindow& w) {
  std::vector<int> bad;
  for (const auto& v : w.vertices) {
    if (v.clipped) continue;
    auto t = w.tau.find(v.id);
    if (t == w.tau.end()) {
      bad.push_back(v.id);
      continue;
    }
    for (const auto& y : w.vertices)
      if (w.arrow_count(y.id, v.id) != w.arrow_count(t->second, y.id)) {
        bad.push_back(v.id);
        break;
      }
  }
  return bad;
}

namespace {

std::string quote(const std::string& s) {
  std::string o = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o + "\"";
}

}  // namespace

std::string to_dot(const TranslationQuiverWindow& w) {
  std::vector<const WindowVertex*> vs;
  for (const auto& v : w.vertices) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return std::tie(a->label, a->id) < std::tie(b->label, b->id); });
  std::map<int, std::string> name;
  for (const auto* v : vs) name[v->id] = quote(v->label);

  std::ostringstream os;
  os << "digraph window {\n";
  for (const auto* v : vs) {
    os << "  " << name[v->id] << " [kind=" << quote(v->kind);
    if (v->clipped) os << ", style=dotted";
    os << "];\n";
  }
  std::vector<std::pair<std::string, std::string>> arrows, taus;
  for (auto [a, b] : w.arrows) arrows.push_back({name[a], name[b]});
  for (auto [a, b] : w.tau) taus.push_back({name[a], name[b]});
  std::sort(arrows.begin(), arrows.end());
  std::sort(taus.begin(), taus.end());
  for (const auto& [a, b] : arrows) os << "  " << a << " -> " << b << ";\n";
  for (const auto& [a, b] : taus) os << "  " << a << " -> " << b << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace dinf
