#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "api.hpp"
#include "httplib.h"
#include "server.hpp"
#include "text.hpp"
#include "trigrid/graph.hpp"

namespace {

using trigrid::api::Json;

struct Config {
  std::string graph;
  std::string slopes = "standard";
  int w = 1;
  std::uint64_t seed = 0;
  std::size_t cap = 3;
  std::size_t budget = 64;
  std::size_t component = 0;
  bool best_effort = false;
  std::string format = "json";

  std::string t;
  std::string points;
  std::size_t chamber = 0;
  bool snap = false;

  std::size_t bridge = 2;
  bool bipartite = false;
  std::string surface;
  bool no_moduli = false;

  std::size_t n = 3;
  bool no_dedup = false;

  std::int64_t bound = 100;
  std::string triple, alpha, beta;

  std::string host = "127.0.0.1";
  int port = 8080;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Json int_list(const std::string& s) {
  Json out = Json::array();
  for (const auto& x : split(s, ',')) out.push_back(std::stoll(x));
  return out;
}

Json graph_field(const std::string& source) {
  if (trigrid::builtin_graph(source)) return source;
  std::ifstream in(source);
  if (!in) throw CLI::ValidationError("--graph", "'" + source + "' is neither a builtin graph nor a readable file");
  std::ostringstream text;
  text << in.rdbuf();
  return Json{{"text", text.str()}};
}

Json build_request(const std::string& command, const Config& c, const CLI::App& sub) {
  Json r = Json::object();
  if (sub.get_option_no_throw("--graph") && !c.graph.empty()) r["graph"] = graph_field(c.graph);
  auto set = [&](const char* flag, const char* key, Json value) {
    if (sub.get_option_no_throw(flag) && sub.count(flag) > 0) r[key] = std::move(value);
  };
  set("--slopes", "slopes", c.slopes);
  set("--w", "w", c.w);
  set("--seed", "seed", c.seed);
  set("--cap", "cap", c.cap);
  set("--budget", "budget", c.budget);
  set("--component", "component", c.component);
  set("--best-effort", "best_effort", c.best_effort);
  set("--chamber", "chamber", c.chamber);
  set("--snap", "snap", c.snap);
  set("--bridge", "bridge", c.bridge);
  set("--bipartite", "bipartite", c.bipartite);
  set("--surface", "surface", c.surface);
  set("--no-moduli", "moduli", !c.no_moduli);
  set("--n", "n", c.n);
  set("--no-dedup", "dedup", !c.no_dedup);
  set("--bound", "bound", c.bound);
  if (!c.t.empty()) r["t"] = split(c.t, ',');
  if (!c.points.empty()) {
    Json pts = Json::array();
    for (const auto& p : split(c.points, ' ')) pts.push_back(split(p, ','));
    r["points"] = pts;
  }
  if (!c.triple.empty()) {
    r["triple"] = int_list(c.triple);
    r["alpha"] = int_list(c.alpha.empty() ? "1,0" : c.alpha);
    r["beta"] = int_list(c.beta.empty() ? "0,1" : c.beta);
  }
  if (command == "diagram") r["format"] = c.format == "json" || c.format == "svg" ? "svg" : "ascii";
  return r;
}

int serve(const Config& c) {
  trigrid::api::ResponseCache cache;
  auto server = trigrid::api::make_server(cache);
  static httplib::Server* active = nullptr;
  active = server.get();
  std::signal(SIGINT, [](int) { active->stop(); });
  std::signal(SIGTERM, [](int) { active->stop(); });
  if (!server->bind_to_port(c.host, c.port)) {
    std::cerr << "trigrid: cannot bind " << c.host << ":" << c.port << "\n";
    return 1;
  }
  std::cerr << "trigrid: listening on http://" << c.host << ":" << c.port << "\n";
  server->listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple grid diagram moduli toolkit"};
  app.require_subcommand(1);
  Config c;

  auto graph_opt = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--graph", c.graph, "builtin graph name or edge-list file");
    if (required) o->required();
  };
  auto moduli_opts = [&](CLI::App* s) {
    graph_opt(s);
    s->add_option("--slopes", c.slopes, "'standard' or a,b,c:ax,ay:bx,by");
    s->add_option("--w", c.w, "winding bound")->check(CLI::Range(0, 3));
    s->add_option("--seed", c.seed, "sampling seed");
    s->add_option("--cap", c.cap, "chamber enumeration dimension cap");
    s->add_option("--budget", c.budget, "sampling attempts per wall");
    s->add_flag("--best-effort", c.best_effort, "enumerate chambers above the cap");
  };
  auto format_opt = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember(allowed));
  };

  const std::vector<std::string> json_text = {"json", "text"};
  for (const char* name : {"validate", "surface", "colorings", "obstruct"}) {
    auto* s = app.add_subcommand(name);
    graph_opt(s);
    format_opt(s, json_text);
  }
  for (const char* name : {"moduli", "sample", "chambers", "moves"}) {
    auto* s = app.add_subcommand(name);
    moduli_opts(s);
    if (std::string(name) != "moduli") s->add_option("--component", c.component, "component position");
    format_opt(s, json_text);
  }
  {
    auto* s = app.add_subcommand("diagram", "render a diagram");
    moduli_opts(s);
    s->add_option("--component", c.component, "component position");
    s->add_option("--t", c.t, "chart parameters p/q,p/q,...");
    s->add_option("--chamber", c.chamber, "render the witness of this chamber");
    s->add_option("--points", c.points, "explicit points 'x,y x,y ...'");
    s->add_flag("--snap", c.snap, "snap to a combinatorial grid diagram");
    c.format = "svg";
    format_opt(s, {"svg", "text", "ascii"});
  }
  {
    auto* s = app.add_subcommand("search", "all Tait-colored graphs with b bridges");
    s->add_option("--bridge", c.bridge, "bridge number")->check(CLI::Range(1, 5));
    s->add_flag("--bipartite", c.bipartite, "keep bipartite graphs only");
    s->add_option("--surface", c.surface, "keep graphs with this surface normal form");
    s->add_flag("--no-moduli", c.no_moduli, "skip moduli analysis");
    s->add_option("--w", c.w, "winding bound")->check(CLI::Range(0, 3));
    s->add_option("--cap", c.cap, "chamber enumeration dimension cap");
    format_opt(s, json_text);
  }
  {
    auto* s = app.add_subcommand("crosscheck", "compare diagram enumeration with the moduli engine");
    s->add_option("--n", c.n, "grid size")->check(CLI::Range(1, 4));
    s->add_option("--w", c.w, "winding bound")->check(CLI::Range(0, 3));
    s->add_flag("--no-dedup", c.no_dedup, "keep translates");
    format_opt(s, json_text);
  }
  {
    auto* s = app.add_subcommand("markov", "Markov triples and slope systems");
    s->add_option("--bound", c.bound, "largest entry");
    s->add_option("--triple", c.triple, "a,b,c to solve for gamma");
    s->add_option("--alpha", c.alpha, "alpha direction x,y");
    s->add_option("--beta", c.beta, "beta direction x,y");
    format_opt(s, json_text);
  }
  {
    auto* s = app.add_subcommand("serve", "HTTP JSON API");
    s->add_option("--host", c.host, "bind address");
    s->add_option("--port", c.port, "port")->check(CLI::Range(0, 65535));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "serve") return serve(c);

  Json request;
  try {
    request = build_request(command, c, *sub);
  } catch (const std::exception& e) {
    std::cerr << "trigrid: " << e.what() << "\n";
    return 2;
  }

  const auto response = trigrid::api::handle(command, request);
  const int code = trigrid::api::exit_code(response.outcome);
  std::ostream& out = std::cout;
  if (c.format == "text" && response.content_type == "application/json") {
    const Json doc = Json::parse(response.body);
    if (auto view = trigrid::api::text_view(command, doc)) {
      out << *view;
      return code;
    }
  }
  out << response.body;
  return code;
}
