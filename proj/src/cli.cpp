#include "dinf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "dinf/embed.hpp"
#include "dinf/json_io.hpp"
#include "dinf/quiver_export.hpp"
#include "dinf/service.hpp"
#include "dinf/verify.hpp"

namespace dinf {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TaggedEdge read_edge(const std::string& s, const char* what) {
  if (!s.empty() && s[0] == '{') {
    try {
      return parse_json(s).get<TaggedEdge>();
    } catch (const Failure& f) {
      throw Usage(std::string(what) + ": " + f.what());
    }
  }
  auto e = parse_edge(s);
  if (!e) throw Usage(std::string(what) + ": cannot read edge \"" + s + "\"");
  return *e;
}

Indecomposable read_object(const std::string& s, const char* what) {
  try {
    return parse_json(s).get<Indecomposable>();
  } catch (const Failure& f) {
    throw Usage(std::string(what) + ": " + f.what());
  }
}

MarkedPoint read_point(const std::string& s, const char* what) {
  if (!s.empty() && s[0] == '{') {
    try {
      return parse_json(s).get<MarkedPoint>();
    } catch (const Failure& f) {
      throw Usage(std::string(what) + ": " + f.what());
    }
  }
  auto p = parse_point(s);
  if (!p) throw Usage(std::string(what) + ": cannot read point \"" + s + "\"");
  return *p;
}

void check(const Status& s) {
  if (!s) throw Failure(s.error().code, s.error().message);
}

struct ModelOpts {
  int n = 1;
  bool completed = false;
  DiskModel model() const { return DiskModel{n, completed}; }
};

void add_model(CLI::App* app, ModelOpts& m) {
  app->add_option("--n", m.n, "number of rays")->check(CLI::PositiveNumber);
  app->add_flag("--completed", m.completed, "use the completed model");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tagged edges of the punctured disk with accumulation points"};
  app.require_subcommand(1);
  ModelOpts mo;
  std::function<void()> action;
  int rc = 0;  // nonzero when an action reports failures without an error

  // edge
  auto* edge = app.add_subcommand("edge", "single-edge operations");
  edge->require_subcommand(1);
  std::string e1, e2;
  bool inverse = false;
  auto* ev = edge->add_subcommand("validate", "check an edge");
  add_model(ev, mo);
  ev->add_option("edge", e1)->required();
  ev->callback([&] {
    action = [&] {
      check(validate_edge(mo.model(), read_edge(e1, "edge")));
      out << "ok\n";
    };
  });
  auto* ec = edge->add_subcommand("cross", "crossing number");
  add_model(ec, mo);
  ec->add_option("first", e1)->required();
  ec->add_option("second", e2)->required();
  ec->callback([&] {
    action = [&] {
      const DiskModel m = mo.model();
      TaggedEdge a = read_edge(e1, "first"), b = read_edge(e2, "second");
      check(validate_edge(m, a));
      check(validate_edge(m, b));
      out << crossing_number(m, a, b) << "\n";
    };
  });
  auto* et = edge->add_subcommand("translate", "rotate an edge");
  add_model(et, mo);
  et->add_option("edge", e1)->required();
  et->add_flag("--inverse", inverse);
  et->callback([&] {
    action = [&] {
      const DiskModel m = mo.model();
      TaggedEdge a = read_edge(e1, "edge");
      check(validate_edge(m, a));
      TaggedEdge t = inverse ? translate_inverse(m, a) : translate(m, a);
      out << json(t).dump() << "\n";
    };
  });
  auto* em = edge->add_subcommand("moves", "elementary moves out of an edge");
  add_model(em, mo);
  em->add_option("edge", e1)->required();
  em->callback([&] {
    action = [&] {
      const DiskModel m = mo.model();
      TaggedEdge a = read_edge(e1, "edge");
      check(validate_edge(m, a));
      out << json(elementary_moves_from(m, a)).dump() << "\n";
    };
  });

  // fan / mutate
  std::string apex = "(1,0)", tri;
  long long bound = 4;
  auto* fa = app.add_subcommand("fan", "fan triangulation at a marked point");
  add_model(fa, mo);
  fa->add_option("--apex", apex);
  fa->add_option("--bound", bound, "also list members inside this window");
  fa->callback([&] {
    action = [&] {
      auto t = fan(mo.model(), read_point(apex, "--apex"));
      if (!t) throw Failure(t.error().code, t.error().message);
      out << json{{"triangulation", t.value()}, {"members", members_in_window(t.value(), bound)}}.dump() << "\n";
    };
  });
  auto* mu = app.add_subcommand("mutate", "flip one member");
  mu->add_option("--triangulation", tri, "JSON triangulation")->required();
  mu->add_option("edge", e1)->required();
  mu->callback([&] {
    action = [&] {
      Triangulation t;
      try {
        t = parse_json(tri).get<Triangulation>();
      } catch (const Failure& f) {
        throw Usage(std::string("--triangulation: ") + f.what());
      }
      check(validate(t));
      auto r = mutate(t, read_edge(e1, "edge"));
      if (!r) throw Failure(r.error().code, r.error().message);
      out << json{{"replacement", r.value().replacement}, {"triangulation", r.value().result}}.dump() << "\n";
    };
  });

  // phi / phi-inv / ext / compatible
  std::string o1, o2;
  bool text = false;
  auto* ph = app.add_subcommand("phi", "object to edge");
  add_model(ph, mo);
  ph->add_option("object", o1)->required();
  ph->add_flag("--text", text, "print the text form");
  ph->callback([&] {
    action = [&] {
      const DiskModel m = mo.model();
      Indecomposable x = read_object(o1, "object");
      check(validate_indec(m, x));
      TaggedEdge e = phi(m, x);
      out << (text ? to_string(e) : json(e).dump()) << "\n";
    };
  });
  auto* pi = app.add_subcommand("phi-inv", "edge to object");
  add_model(pi, mo);
  pi->add_option("edge", e1)->required();
  pi->add_flag("--text", text, "print the text form");
  pi->callback([&] {
    action = [&] {
      auto x = phi_inverse(mo.model(), read_edge(e1, "edge"));
      if (!x) throw Failure(x.error().code, x.error().message);
      out << (text ? to_string(x.value()) : json(x.value()).dump()) << "\n";
    };
  });
  auto pair_cmd = [&](const char* name, const char* help, bool verdict) {
    auto* c = app.add_subcommand(name, help);
    add_model(c, mo);
    c->add_option("first", o1)->required();
    c->add_option("second", o2)->required();
    c->callback([&, verdict] {
      action = [&, verdict] {
        const DiskModel m = mo.model();
        Indecomposable x = read_object(o1, "first"), y = read_object(o2, "second");
        check(validate_indec(m, x));
        check(validate_indec(m, y));
        if (!verdict) {
          out << (compatible(m, x, y) ? "true" : "false") << "\n";
          return;
        }
        ExtVerdict v = ext_verdict(m, x, y);
        out << json{{"positive", v.positive},
                    {"shared_limit", v.shared_limit},
                    {"above_threshold", v.above_threshold},
                    {"dim_sum", v.dim_sum}}
                   .dump()
            << "\n";
      };
    });
  };
  pair_cmd("ext", "Ext verdict for two objects", true);
  pair_cmd("compatible", "compatibility of two objects", false);

  // window-quiver
  bool dot = false;
  auto* wq = app.add_subcommand("window-quiver", "elementary-move quiver of a window");
  add_model(wq, mo);
  wq->add_option("--bound", bound)->check(CLI::Range(2, 8));
  wq->add_flag("--dot", dot, "DOT instead of JSON");
  wq->callback([&] {
    action = [&] {
      auto w = build_edge_quiver_window(mo.model(), bound);
      out << (dot ? to_dot(w.quiver) : json(w.quiver).dump() + "\n");
    };
  });

  // oracle
  int k = 5;
  bool cluster = false;
  auto* orc = app.add_subcommand("oracle", "finite type D_k");
  orc->require_subcommand(1);
  auto* oa = orc->add_subcommand("ar", "knitted AR quiver");
  oa->add_option("--k", k)->check(CLI::Range(4, 64));
  oa->add_flag("--cluster", cluster, "cluster category instead of modules");
  oa->add_flag("--dot", dot);
  oa->callback([&] {
    action = [&] {
      FiniteQuiver q = dynkin_d(k);
      ARQuiver ar = cluster ? knit_cluster_ar(q) : knit_module_ar(q);
      out << (dot ? to_dot(build_ar_window(ar)) : json(ar).dump() + "\n");
    };
  });
  auto* ot = orc->add_subcommand("tilting", "cluster-tilting sets");
  ot->add_option("--k", k)->check(CLI::Range(4, 6));
  ot->callback([&] {
    action = [&] {
      FiniteQuiver q = dynkin_d(k);
      auto objs = cluster_objects(q);
      json sets = json::array();
      for (const auto& s : enumerate_cluster_tilting(q)) {
        json one = json::array();
        for (int i : s)
          one.push_back(objs[i].shifted ? "P" + std::to_string(objs[i].vertex) + "[1]" : dim_label(objs[i].rep.dim));
        sets.push_back(one);
      }
      out << json{{"k", k}, {"count", sets.size()}, {"sets", sets}}.dump() << "\n";
    };
  });
  auto* ovf = orc->add_subcommand("verify", "finite-type counts and exchange matrices");
  ovf->callback([&] {
    action = [&] {
      Report r{DiskModel{}, 0, {check_finite_counts(), check_exchange_matrices()}};
      out << summary(r);
      if (!r.all_pass()) rc = 1;
    };
  });

  // verify all
  std::string fault = "none";
  auto* vf = app.add_subcommand("verify", "property sweeps");
  vf->require_subcommand(1);
  auto* va = vf->add_subcommand("all", "every property at one window");
  add_model(va, mo);
  va->add_option("--bound", bound)->check(CLI::Range(2, 8));
  va->add_option("--fault", fault, "inject a fault")->check(CLI::IsMember({"none", "flipped-tag"}));
  va->callback([&] {
    action = [&] {
      Report r = run_verification_suite(mo.model(), bound, fault == "none" ? Fault::None : Fault::FlippedTag);
      out << summary(r);
      for (const auto& p : r.properties)
        for (std::size_t i = 0; i < p.failures.size() && i < 5; ++i) out << "  " << p.name << ": " << p.failures[i] << "\n";
      if (!r.all_pass()) rc = 1;
    };
  });

  // serve
  int port = default_port();
  std::string host = "127.0.0.1", dump, load;
  auto* sv = app.add_subcommand("serve", "HTTP service");
  add_model(sv, mo);
  sv->add_option("--port", port)->check(CLI::Range(1, 65535));
  sv->add_option("--host", host);
  sv->add_option("--dump", dump, "write a session snapshot after each change");
  sv->add_option("--load", load, "start from a session snapshot")->check(CLI::ExistingFile);
  sv->callback([&] {
    action = [&] {
      Service svc(mo.model());
      if (!load.empty()) {
        std::ifstream in(load);
        std::stringstream ss;
        ss << in.rdbuf();
        svc.restore(parse_json(ss.str()));
      }
      svc.set_dump_path(dump);
      err << "listening on " << host << ":" << port << "\n";
      if (serve(svc, host, port) != 0) throw Failure(ErrorCode::Parse, "cannot listen on port " + std::to_string(port));
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (action) action();
    return rc;
  } catch (const Usage& u) {
    err << "usage error: " << u.what() << "\n";
    return 2;
  } catch (const Failure& f) {
    err << json(f.error()).dump() << "\n";
    return 1;
  }
}

}  // namespace dinf
