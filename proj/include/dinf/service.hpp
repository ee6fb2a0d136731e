#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dinf/json_io.hpp"

namespace httplib {
class Server;
}

namespace dinf {

struct HttpReply {
  int status = 200;
  json body;
};

// one triangulation per session; requests on a session run under its own lock
class Service {
 public:
  explicit Service(DiskModel default_model = {1, false});

  HttpReply handle(const std::string& method, const std::string& path,
                   const std::map<std::string, std::string>& query, const std::string& body);

  json snapshot() const;
  void restore(const json& snap);  // replays every history

  void mount(httplib::Server& srv);
  void set_dump_path(std::string path) { dump_path_ = std::move(path); }

 private:
  struct Session {
    std::mutex mu;
    DiskModel model;
    Triangulation initial;
    Triangulation current;
    std::vector<std::pair<TaggedEdge, TaggedEdge>> history;  // (edge, replacement)
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string create(const Triangulation& start);
  void persist() const;

  HttpReply new_session(const json& req);
  HttpReply window(Session& s, const std::map<std::string, std::string>& query);
  HttpReply mutate_session(Session& s, const json& req);
  HttpReply undo(Session& s);

  DiskModel default_model_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
  std::string dump_path_;
};

// blocks; returns when the server stops
int serve(Service& svc, const std::string& host, int port);

int default_port();  // DINF_PORT or 8080

}  // namespace dinf
