#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "dinf/service.hpp"

using namespace dinf;

namespace {

MarkedPoint P(int h, pos_t a) { return MarkedPoint::at(h, a); }

HttpReply post(Service& s, const std::string& path, const json& body) { return s.handle("POST", path, {}, body.dump()); }

std::string open_session(Service& s, const json& model) {
  auto r = post(s, "/api/session", {{"model", model}});
  REQUIRE(r.status == 200);
  return r.body["id"];
}

}  // namespace

TEST_CASE("session lifecycle") {
  Service svc;
  CHECK(svc.handle("GET", "/api/model", {}, "").body == json(DiskModel{1, false}));
  const std::string id = open_session(svc, {{"n", 1}, {"completed", false}});

  auto w = svc.handle("GET", "/api/session/" + id + "/window", {{"bound", "2"}}, "");
  REQUIRE(w.status == 200);
  const Triangulation f = fan(DiskModel{1, false}, P(1, 0)).value();
  CHECK(w.body["members"] == json(members_in_window(f, 2)));
  CHECK(w.body["objects"].size() == w.body["members"].size());

  auto r = post(svc, "/api/session/" + id + "/mutate", {{"edge", TaggedEdge::radius(P(1, 0), 1)}});
  REQUIRE(r.status == 200);
  CHECK(r.body["replacement"].get<TaggedEdge>() == TaggedEdge::radius(P(1, -1), -1));

  auto again = post(svc, "/api/session/" + id + "/mutate", {{"edge", TaggedEdge::radius(P(1, 0), 1)}});
  CHECK(again.status == 409);
  CHECK(again.body["code"] == "NotMember");

  auto u = post(svc, "/api/session/" + id + "/undo", json::object());
  CHECK(u.status == 200);
  CHECK(u.body["triangulation"].get<Triangulation>() == f);
}

TEST_CASE("service errors") {
  Service svc;
  CHECK(svc.handle("GET", "/api/session/nope/window", {}, "").status == 404);
  CHECK(svc.handle("POST", "/api/session", {}, "{oops").status == 400);
  CHECK(svc.handle("GET", "/api/nowhere", {}, "").status == 404);
  const std::string id = open_session(svc, {{"n", 2}, {"completed", true}});
  auto bad = post(svc, "/api/session/" + id + "/mutate", {{"edge", "E[(1,0)"}});
  CHECK(bad.status == 400);
  CHECK(bad.body["code"] == "Parse");

  auto lim = post(svc, "/api/session", {{"model", {{"n", 2}, {"completed", true}}}, {"apex", {{"ray", 1}, {"pos", "inf"}}}});
  REQUIRE(lim.status == 200);
  auto r = post(svc, "/api/session/" + lim.body["id"].get<std::string>() + "/mutate",
                {{"edge", TaggedEdge::arc(MarkedPoint::limit(1), MarkedPoint::limit(2))}});
  CHECK(r.status == 409);
  CHECK(r.body["code"] == "NonMutable");
}

TEST_CASE("phi, ext and quiver endpoints") {
  Service svc;
  auto p = svc.handle("GET", "/api/phi", {{"n", "1"}, {"object", R"({"kind":"P","coords":[{"ray":1,"pos":-2}]})"}}, "");
  REQUIRE(p.status == 200);
  CHECK(p.body["text"] == "E[(1,-1)-(1,-2)]^+");
  auto q = svc.handle("GET", "/api/phi", {{"n", "1"}, {"edge", "E[(1,3)-(1,3)]^+"}}, "");
  CHECK(q.body["text"] == "M[1,-1,1,3]");
  CHECK(svc.handle("GET", "/api/phi", {{"n", "1"}, {"edge", "E[(1,3)-(1,4)]^+"}}, "").body["code"] == "NoPreimage");

  auto e = post(svc, "/api/ext",
                {{"model", {{"n", 2}, {"completed", false}}},
                 {"x", {{"kind", "P1"}, {"coords", {{{"ray", 1}, {"pos", -1}}}}}},
                 {"y", {{"kind", "P"}, {"coords", {{{"ray", 2}, {"pos", 4}}}}}}});
  REQUIRE(e.status == 200);
  CHECK(e.body["positive"] == true);
  CHECK(e.body["crossing"] == 1);

  auto w = svc.handle("GET", "/api/quiver-window", {{"n", "1"}, {"bound", "2"}}, "");
  REQUIRE(w.status == 200);
  CHECK(w.body["vertices"].size() == window_edges(DiskModel{1, false}, 2).size());
  CHECK(svc.handle("GET", "/api/quiver-window", {{"bound", "x"}}, "").status == 400);
}

TEST_CASE("snapshots replay") {
  Service a;
  const std::string id = open_session(a, {{"n", 1}, {"completed", false}});
  Triangulation t = fan(DiskModel{1, false}, P(1, 0)).value();
  for (int step = 0; step < 5; ++step) {
    auto mem = members_in_window(t, 2);
    const TaggedEdge e = mem[static_cast<std::size_t>(step * 3) % mem.size()];
    auto r = post(a, "/api/session/" + id + "/mutate", {{"edge", e}});
    REQUIRE(r.status == 200);
    t = r.body["triangulation"].get<Triangulation>();
  }
  Service b;
  b.restore(a.snapshot());
  auto w = b.handle("GET", "/api/session/" + id, {}, "");
  REQUIRE(w.status == 200);
  CHECK(w.body["triangulation"].get<Triangulation>() == t);
  CHECK(w.body["steps"] == 5);
  CHECK(b.snapshot() == a.snapshot());
}

TEST_CASE("concurrent sessions") {
  Service svc;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(open_session(svc, {{"n", 2}, {"completed", false}}));
  std::vector<std::thread> th;
  for (int i = 0; i < 8; ++i)
    th.emplace_back([&, i] {
      const std::string& id = ids[static_cast<std::size_t>(i % 4)];
      for (int k = 0; k < 3; ++k) {
        auto w = svc.handle("GET", "/api/session/" + id + "/window", {{"bound", "2"}}, "");
        auto mem = w.body["members"];
        post(svc, "/api/session/" + id + "/mutate", {{"edge", mem[static_cast<std::size_t>(k + i) % mem.size()]}});
      }
    });
  for (auto& t : th) t.join();
  // every history still replays to the stored triangulation
  Service copy;
  copy.restore(svc.snapshot());
  for (const auto& id : ids) {
    auto a = svc.handle("GET", "/api/session/" + id, {}, "");
    auto b = copy.handle("GET", "/api/session/" + id, {}, "");
    CHECK(a.body["triangulation"] == b.body["triangulation"]);
    CHECK(validate(a.body["triangulation"].get<Triangulation>()).ok());
  }
}

TEST_CASE("http round trip") {
  Service svc;
  httplib::Server srv;
  svc.mount(srv);
  const int port = srv.bind_to_any_port("127.0.0.1");
  std::thread t([&] { srv.listen_after_bind(); });
  srv.wait_until_ready();
  httplib::Client cl("127.0.0.1", port);
  auto s = cl.Post("/api/session", R"({"model":{"n":1,"completed":false}})", "application/json");
  REQUIRE(s);
  CHECK(s->status == 200);
  const std::string id = json::parse(s->body)["id"];
  auto m = cl.Post("/api/session/" + id + "/mutate", R"({"edge":"E[(1,0)-(1,0)]^+"})", "application/json");
  REQUIRE(m);
  CHECK(json::parse(m->body)["replacement"].get<TaggedEdge>() == TaggedEdge::radius(P(1, -1), -1));
  auto w = cl.Get("/api/session/" + id + "/window?bound=1");
  REQUIRE(w);
  CHECK(w->status == 200);
  auto missing = cl.Get("/api/session/zzz/window");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  srv.stop();
  t.join();
}
