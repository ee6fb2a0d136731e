#include "dinf/service.hpp"

#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <regex>

#include "dinf/embed.hpp"
#include "dinf/quiver_export.hpp"

namespace dinf {

namespace {

HttpReply fail(int status, ErrorCode c, const std::string& msg) { return {status, json(Error{c, msg})}; }

int status_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonMutable:
    case ErrorCode::NotMember:
    case ErrorCode::AmbiguousFlip: return 409;
    default: return 400;
  }
}

HttpReply fail(const Error& e) { return fail(status_for(e.code), e.code, e.message); }

DiskModel model_from_query(const std::map<std::string, std::string>& q, DiskModel def) {
  if (auto it = q.find("n"); it != q.end()) {
    try {
      def.n = std::stoi(it->second);
    } catch (const std::exception&) {
      throw Failure(ErrorCode::Parse, "n must be an integer");
    }
    if (def.n < 1) throw Failure(ErrorCode::Parse, "n must be positive");
  }
  if (auto it = q.find("completed"); it != q.end()) def.completed = it->second == "true" || it->second == "1";
  return def;
}

pos_t bound_from_query(const std::map<std::string, std::string>& q, pos_t def) {
  auto it = q.find("bound");
  if (it == q.end()) return def;
  try {
    pos_t b = std::stoll(it->second);
    if (b < 0 || b > 64) throw Failure(ErrorCode::Parse, "bound out of range");
    return b;
  } catch (const std::invalid_argument&) {
    throw Failure(ErrorCode::Parse, "bound must be an integer");
  } catch (const std::out_of_range&) {
    throw Failure(ErrorCode::Parse, "bound out of range");
  }
}

TaggedEdge edge_from(const json& j) {
  if (j.is_string()) {
    auto e = parse_edge(j.get<std::string>());
    if (!e) throw Failure(ErrorCode::Parse, "cannot read edge " + j.get<std::string>());
    return *e;
  }
  return j.get<TaggedEdge>();
}

json members_json(const Triangulation& t, pos_t bound) {
  json mem = json::array(), obj = json::array();
  for (const auto& e : members_in_window(t, bound)) {
    mem.push_back(e);
    auto x = phi_inverse(t.model, e);
    obj.push_back(x.ok() ? json{{"object", x.value()}, {"label", to_string(x.value())}} : json(nullptr));
  }
  return json{{"bound", bound}, {"members", mem}, {"objects", obj}};
}

}  // namespace

Service::Service(DiskModel default_model) : default_model_(default_model) {}

std::shared_ptr<Service::Session> Service::find(const std::string& id) const {
  std::lock_guard lk(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string Service::create(const Triangulation& start) {
  auto s = std::make_shared<Session>();
  s->model = start.model;
  s->initial = start;
  s->current = start;
  std::lock_guard lk(mu_);
  std::string id = "s" + std::to_string(next_id_++);
  sessions_[id] = s;
  return id;
}

HttpReply Service::new_session(const json& req) {
  DiskModel m = req.contains("model") ? req.at("model").get<DiskModel>() : default_model_;
  MarkedPoint apex = req.contains("apex") ? req.at("apex").get<MarkedPoint>() : MarkedPoint::at(1, 0);
  auto t = fan(m, apex);
  if (!t) return fail(t.error());
  std::string id = create(t.value());
  persist();
  return {200, json{{"id", id}, {"triangulation", t.value()}}};
}

HttpReply Service::window(Session& s, const std::map<std::string, std::string>& query) {
  std::lock_guard lk(s.mu);
  json out = members_json(s.current, bound_from_query(query, 4));
  out["triangulation"] = s.current;
  out["steps"] = s.history.size();
  return {200, out};
}

HttpReply Service::mutate_session(Session& s, const json& req) {
  if (!req.contains("edge")) return fail(400, ErrorCode::Parse, "missing field \"edge\"");
  const TaggedEdge e = edge_from(req.at("edge"));
  std::lock_guard lk(s.mu);
  auto r = mutate(s.current, e);
  if (!r) return fail(r.error());
  s.current = r.value().result;
  s.history.push_back({e, r.value().replacement});
  return {200, json{{"replacement", r.value().replacement}, {"triangulation", s.current}}};
}

HttpReply Service::undo(Session& s) {
  std::lock_guard lk(s.mu);
  if (s.history.empty()) return fail(409, ErrorCode::BadIndex, "nothing to undo");
  s.history.pop_back();
  Triangulation t = s.initial;
  for (const auto& [e, rep] : s.history) t = mutate(t, e).value().result;
  s.current = t;
  return {200, json{{"triangulation", s.current}}};
}

HttpReply Service::handle(const std::string& method, const std::string& path,
                          const std::map<std::string, std::string>& query, const std::string& body) {
  static const std::regex session_re(R"(^/api/session/([A-Za-z0-9]+)(/(window|mutate|undo))?$)");
  try {
    json req = body.empty() ? json::object() : parse_json(body);
    std::smatch mt;
    if (method == "GET" && path == "/api/model") return {200, json(model_from_query(query, default_model_))};
    if (method == "POST" && path == "/api/session") return new_session(req);
    if (std::regex_match(path, mt, session_re)) {
      auto s = find(mt[1]);
      if (!s) return fail(404, ErrorCode::BadIndex, "unknown session " + mt[1].str());
      const std::string op = mt[3];
      if (method == "GET" && (op == "window" || op.empty())) return window(*s, query);
      if (method == "POST" && op == "mutate") {
        auto r = mutate_session(*s, req);
        if (r.status == 200) persist();
        return r;
      }
      if (method == "POST" && op == "undo") {
        auto r = undo(*s);
        if (r.status == 200) persist();
        return r;
      }
      return fail(405, ErrorCode::Parse, method + " " + path);
    }
    if (method == "GET" && path == "/api/phi") {
      const DiskModel m = model_from_query(query, default_model_);
      if (auto it = query.find("object"); it != query.end()) {
        Indecomposable x = parse_json(it->second).get<Indecomposable>();
        if (auto st = validate_indec(m, x); !st) return fail(st.error());
        TaggedEdge e = phi(m, x);
        return {200, json{{"edge", e}, {"text", to_string(e)}}};
      }
      if (auto it = query.find("edge"); it != query.end()) {
        const std::string& v = it->second;
        TaggedEdge e = edge_from(!v.empty() && v[0] == '{' ? parse_json(v) : json(v));
        auto x = phi_inverse(m, e);
        if (!x) return fail(x.error());
        return {200, json{{"object", x.value()}, {"text", to_string(x.value())}}};
      }
      return fail(400, ErrorCode::Parse, "give object= or edge=");
    }
    if (method == "POST" && path == "/api/ext") {
      const DiskModel m = req.contains("model") ? req.at("model").get<DiskModel>() : default_model_;
      if (!req.contains("x") || !req.contains("y")) return fail(400, ErrorCode::Parse, "need x and y");
      Indecomposable x = req.at("x").get<Indecomposable>(), y = req.at("y").get<Indecomposable>();
      for (const auto& o : {x, y})
        if (auto st = validate_indec(m, o); !st) return fail(st.error());
      if (x == y) return fail(400, ErrorCode::EqualObjects, "x and y coincide");
      ExtVerdict v = ext_verdict(m, x, y);
      return {200, json{{"positive", v.positive},
                        {"shared_limit", v.shared_limit},
                        {"above_threshold", v.above_threshold},
                        {"dim_sum", v.dim_sum},
                        {"crossing", crossing_number(m, phi(m, x), phi(m, y))},
                        {"compatible", compatible(m, x, y)}}};
    }
    if (method == "GET" && path == "/api/quiver-window") {
      const DiskModel m = model_from_query(query, default_model_);
      const pos_t b = bound_from_query(query, 3);
      if (b < 2 || b > 8) return fail(400, ErrorCode::Parse, "bound must lie in [2, 8]");
      return {200, json(build_edge_quiver_window(m, b).quiver)};
    }
    return fail(404, ErrorCode::Parse, "no route " + method + " " + path);
  } catch (const Failure& f) {
    return fail(f.error());
  } catch (const json::exception& e) {
    return fail(400, ErrorCode::Parse, e.what());
  }
}

json Service::snapshot() const {
  std::lock_guard lk(mu_);
  json ss = json::array();
  for (const auto& [id, s] : sessions_) {
    std::lock_guard sl(s->mu);
    json h = json::array();
    for (const auto& [e, r] : s->history) h.push_back({e, r});
    ss.push_back({{"id", id}, {"initial", s->initial}, {"history", h}});
  }
  return json{{"next_id", next_id_}, {"sessions", ss}};
}

void Service::restore(const json& snap) {
  std::map<std::string, std::shared_ptr<Session>> loaded;
  for (const auto& js : snap.at("sessions")) {
    auto s = std::make_shared<Session>();
    s->initial = js.at("initial").get<Triangulation>();
    s->model = s->initial.model;
    s->current = s->initial;
    for (const auto& step : js.at("history")) {
      const TaggedEdge e = step.at(0).get<TaggedEdge>();
      auto r = mutate(s->current, e).value();
      if (r.replacement != step.at(1).get<TaggedEdge>())
        throw Failure(ErrorCode::BadDiff, "snapshot history does not replay");
      s->current = r.result;
      s->history.push_back({e, r.replacement});
    }
    loaded[js.at("id").get<std::string>()] = s;
  }
  std::lock_guard lk(mu_);
  sessions_ = std::move(loaded);
  next_id_ = snap.at("next_id").get<std::uint64_t>();
}

void Service::persist() const {
  if (dump_path_.empty()) return;
  std::ofstream(dump_path_) << snapshot().dump(2) << "\n";
}

void Service::mount(httplib::Server& srv) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> q(req.params.begin(), req.params.end());
    HttpReply r = handle(req.method, req.path, q, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  srv.Get(R"(/api/.*)", route);
  srv.Post(R"(/api/.*)", route);
}

int serve(Service& svc, const std::string& host, int port) {
  httplib::Server srv;
  svc.mount(srv);
  return srv.listen(host, port) ? 0 : 1;
}

int default_port() {
  if (const char* p = std::getenv("DINF_PORT")) {
    try {
      return std::stoi(p);
    } catch (const std::exception&) {
    }
  }
  return 8080;
}

}  // namespace dinf
