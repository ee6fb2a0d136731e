#include "dinf/json_io.hpp"

namespace dinf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Failure(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

const char* kind_name(Indecomposable::Kind k) {
  switch (k) {
    case Indecomposable::P: return "P";
    case Indecomposable::P1: return "P1";
    case Indecomposable::Bar: return "bar";
    case Indecomposable::Dbl: return "dbl";
    case Indecomposable::Hob: return "hob";
  }
  return "?";
}

}  // namespace

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

void to_json(json& j, const MarkedPoint& p) {
  j = json{{"ray", p.ray}};
  if (p.inf)
    j["pos"] = "inf";
  else
    j["pos"] = p.pos;
}

void from_json(const json& j, MarkedPoint& p) {
  const json& pos = field(j, "pos");
  p.ray = static_cast<int>(as_int(field(j, "ray"), "ray"));
  if (pos.is_string()) {
    if (pos.get<std::string>() != "inf") bad("pos must be an integer or \"inf\"");
    p.inf = true;
    p.pos = 0;
  } else {
    p.inf = false;
    p.pos = as_int(pos, "pos");
  }
}

void to_json(json& j, const DiskModel& m) { j = json{{"n", m.n}, {"completed", m.completed}}; }

void from_json(const json& j, DiskModel& m) {
  m.n = static_cast<int>(as_int(field(j, "n"), "n"));
  const json& c = j.contains("completed") ? j.at("completed") : json(false);
  if (!c.is_boolean()) bad("completed must be a boolean");
  m.completed = c.get<bool>();
  if (m.n < 1) bad("n must be positive");
}

void to_json(json& j, const TaggedEdge& e) {
  j = json{{"from", e.from}, {"to", e.to}, {"tag", e.tag > 0 ? "+1" : "-1"}};
}

void from_json(const json& j, TaggedEdge& e) {
  e.from = field(j, "from").get<MarkedPoint>();
  e.to = field(j, "to").get<MarkedPoint>();
  e.tag = 1;
  if (j.contains("tag")) {
    const json& t = j.at("tag");
    if (t == "+1")
      e.tag = 1;
    else if (t == "-1")
      e.tag = -1;
    else
      bad("tag must be \"+1\" or \"-1\"");
  }
}

void to_json(json& j, const QuiverVertex& v) {
  if (v.kind == QuiverVertex::ForkUp)
    j = json{{"ray", 1}, {"pos", -1}};
  else if (v.kind == QuiverVertex::ForkDown)
    j = json{{"ray", 1}, {"pos", "-1p"}};
  else
    j = v.pt;
}

void from_json(const json& j, QuiverVertex& v) {
  const json& pos = field(j, "pos");
  if (pos == "-1p") {
    if (as_int(field(j, "ray"), "ray") != 1) bad("the primed fork lives on ray 1");
    v = QuiverVertex::down();
    return;
  }
  MarkedPoint p = j.get<MarkedPoint>();
  v = (p == MarkedPoint::at(1, -1)) ? QuiverVertex::up() : QuiverVertex::tail(p);
}

void to_json(json& j, const Indecomposable& x) {
  json coords = json::array({x.a});
  if (x.kind != Indecomposable::P && x.kind != Indecomposable::P1) coords.push_back(x.b);
  j = json{{"kind", kind_name(x.kind)}, {"coords", coords}};
}

void from_json(const json& j, Indecomposable& x) {
  const json& k = field(j, "kind");
  const json& c = field(j, "coords");
  if (!k.is_string() || !c.is_array()) bad("indecomposable needs a kind and a coords array");
  const std::string kind = k.get<std::string>();
  std::size_t want = 2;
  if (kind == "P")
    x.kind = Indecomposable::P, want = 1;
  else if (kind == "P1")
    x.kind = Indecomposable::P1, want = 1;
  else if (kind == "bar")
    x.kind = Indecomposable::Bar;
  else if (kind == "dbl")
    x.kind = Indecomposable::Dbl;
  else if (kind == "hob")
    x.kind = Indecomposable::Hob;
  else
    bad("unknown kind \"" + kind + "\"");
  if (c.size() != want) bad(kind + " takes " + std::to_string(want) + " coordinates");
  x.a = c[0].get<QuiverVertex>();
  x.b = want == 2 ? c[1].get<QuiverVertex>() : QuiverVertex{};
}

void to_json(json& j, const Triangulation& t) {
  json rem = json::array(), add = json::array();
  for (const auto& e : t.removed) rem.push_back(e);
  for (const auto& e : t.added) add.push_back(e);
  j = json{{"model", t.model}, {"apex", t.apex}, {"removed", rem}, {"added", add}};
}

void from_json(const json& j, Triangulation& t) {
  t.model = field(j, "model").get<DiskModel>();
  t.apex = field(j, "apex").get<MarkedPoint>();
  t.removed.clear();
  t.added.clear();
  for (const char* key : {"removed", "added"}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_array()) bad(std::string(key) + " must be an array");
    for (const auto& e : j.at(key)) (std::string(key) == "removed" ? t.removed : t.added).insert(e.get<TaggedEdge>());
  }
}

void to_json(json& j, const Error& e) { j = json{{"code", code_name(e.code)}, {"message", e.message}}; }

void to_json(json& j, const TranslationQuiverWindow& w) {
  json vs = json::array(), as = json::array(), ts = json::array();
  for (const auto& v : w.vertices) vs.push_back({{"id", v.id}, {"label", v.label}, {"kind", v.kind}});
  for (auto [a, b] : w.arrows) as.push_back({a, b});
  for (auto [a, b] : w.tau) ts.push_back({a, b});
  j = json{{"vertices", vs}, {"arrows", as}, {"tau", ts}};
}

void to_json(json& j, const ARQuiver& ar) {
  json vs = json::array(), as = json::array(), ts = json::array();
  for (std::size_t i = 0; i < ar.vertices.size(); ++i) {
    const auto& v = ar.vertices[i];
    vs.push_back({{"id", i}, {"label", v.label}, {"kind", v.shifted ? "shifted" : "module"}, {"dim", v.dim}});
  }
  for (auto [a, b] : ar.arrows) as.push_back({a, b});
  for (auto [a, b] : ar.tau) ts.push_back({a, b});
  j = json{{"k", ar.k}, {"cluster", ar.cluster}, {"vertices", vs}, {"arrows", as}, {"tau", ts}};
}

void to_json(json& j, const ExchangeMatrix& b) { j = b.b; }

void from_json(const json& j, ExchangeMatrix& b) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  b.b.clear();
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(as_int(x, "matrix entry"));
    b.b.push_back(r);
  }
}

}  // namespace dinf
