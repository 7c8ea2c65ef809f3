#include <array>
#include <cstdio>
#include <memory>
#include <thread>

#include "api.hpp"
#include "doctest.h"
#include "httplib.h"
#include "server.hpp"

using namespace trigrid;
using api::Json;
using api::Outcome;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TRIGRID_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class TestServer {
 public:
  TestServer() : server_(api::make_server(cache_)) {
    port_ = server_->bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
  }
  ~TestServer() {
    server_->stop();
    thread_.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }
  const api::ResponseCache& cache() const { return cache_; }

 private:
  api::ResponseCache cache_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = 0;
  std::thread thread_;
};

TestServer& server() {
  static TestServer s;
  return s;
}

}  // namespace

TEST_SUITE("api") {
  TEST_CASE("handler outcomes") {
    CHECK(api::handle("graphs", Json::object()).outcome == Outcome::kOk);
    CHECK(api::handle("moduli", {{"graph", "k33"}}).outcome == Outcome::kOk);
    CHECK(api::handle("moduli", {{"graph", "nope"}}).outcome == Outcome::kUsageError);
    CHECK(api::handle("moduli", Json::object()).outcome == Outcome::kUsageError);
    CHECK(api::handle("bogus", Json::object()).outcome == Outcome::kUsageError);
    CHECK(api::handle("moduli", {{"graph", "k33"}, {"w", 9}}).outcome == Outcome::kUsageError);
    const auto bad = api::handle("validate", {{"graph", {{"text", "0 1 red\n0 1 red\n0 1 green\n"}}}});
    CHECK(bad.outcome == Outcome::kDomainError);
    const auto doc = Json::parse(bad.body);
    CHECK(doc["kind"] == "error");
    CHECK(doc["error"]["code"] == "validation_error");
    CHECK_FALSE(doc["error"]["details"]["problems"].empty());
    CHECK(api::handle("validate", {{"graph", {{"text", "0 1 rd\n"}}}}).outcome == Outcome::kUsageError);
  }

  TEST_CASE("exit codes and statuses") {
    CHECK(api::exit_code(Outcome::kOk) == 0);
    CHECK(api::exit_code(Outcome::kDomainError) == 1);
    CHECK(api::exit_code(Outcome::kUsageError) == 2);
    CHECK(api::exit_code(Outcome::kInternalError) == 1);
    CHECK(api::http_status(Outcome::kUsageError) == 400);
    CHECK(api::http_status(Outcome::kDomainError) == 422);
    CHECK(api::http_status(Outcome::kInternalError) == 500);
  }

  TEST_CASE("CLI moduli examples") {
    const auto theta = run_cli("moduli --graph theta");
    CHECK(theta.status == 0);
    const auto t = Json::parse(theta.out);
    CHECK(t["components"].empty());
    CHECK(t["note"] == "empty");
    const auto k33 = Json::parse(run_cli("moduli --graph k33").out);
    CHECK(k33["dimension"] == 4);
    CHECK(k33["based_dimension"] == 2);
    const auto torus = Json::parse(run_cli("chambers --graph torus8").out);
    CHECK(torus["chambers"]["count"] == 16);
  }

  TEST_CASE("CLI exit codes") {
    CHECK(run_cli("moduli --graph no-such-graph").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("moduli --graph k33 --w 7").status == 2);
    const auto wall = run_cli("diagram --graph k33 --t 1/2,1/2");
    CHECK(wall.status == 1);
    CHECK(Json::parse(wall.out)["error"]["code"] == "degenerate_point");
    CHECK(run_cli("chambers --graph theta").status == 1);
    CHECK(run_cli("moduli --graph k33 --format text").out.find("dimension: 4") != std::string::npos);
  }

  TEST_CASE("CLI graph files") {
    const std::string path = "api_test_graph.txt";
    {
      std::FILE* f = std::fopen(path.c_str(), "w");
      REQUIRE(f);
      std::fputs("# K4\n0 1 red\n2 3 red\n0 2 blue\n1 3 blue\n0 3 green\n1 2 green\n", f);
      std::fclose(f);
    }
    const auto r = run_cli("surface --graph " + path);
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out)["surface"]["normal_form"] == "projective_sum(1)");
    std::remove(path.c_str());
  }

  TEST_CASE("serve listing and moduli match the CLI byte for byte") {
    auto cli = server().client();
    const auto graphs = cli.Get("/api/graphs");
    REQUIRE(graphs);
    CHECK(graphs->status == 200);
    CHECK(Json::parse(graphs->body)["graphs"].size() == 6);

    const auto moduli = cli.Post("/api/moduli", R"({"graph":"k33","w":1})", "application/json");
    REQUIRE(moduli);
    CHECK(moduli->status == 200);
    CHECK(moduli->body == run_cli("moduli --graph k33 --w 1").out);
    CHECK(!Json::parse(moduli->body)["components"][0]["chart"].is_null());

    const auto obstruct = cli.Post("/api/obstruct", R"({"graph":"prism"})", "application/json");
    REQUIRE(obstruct);
    CHECK(obstruct->body == run_cli("obstruct --graph prism").out);

    const auto chambers = cli.Post("/api/chambers", R"({"graph":"torus8","component":0})", "application/json");
    REQUIRE(chambers);
    CHECK(chambers->body == run_cli("chambers --graph torus8 --component 0").out);

    const auto markov = cli.Get("/api/markov?bound=100");
    REQUIRE(markov);
    CHECK(markov->body == run_cli("markov --bound 100").out);
  }

  TEST_CASE("serve realize and diagram") {
    auto cli = server().client();
    const auto wall = cli.Post("/api/realize", R"({"graph":"k33","t":["1/2","1/2"]})", "application/json");
    REQUIRE(wall);
    CHECK(wall->status == 422);
    CHECK(Json::parse(wall->body)["error"]["code"] == "degenerate_point");

    const auto ok = cli.Post("/api/realize", R"({"graph":"k33","t":["1/3","1/3"]})", "application/json");
    REQUIRE(ok);
    CHECK(ok->status == 200);
    const auto doc = Json::parse(ok->body);
    CHECK(doc["chamber"] == 0);
    CHECK(doc["diagram"]["points"].size() == 6);

    const auto svg = cli.Post("/api/diagram", R"({"graph":"k33","t":["1/3","1/3"]})", "application/json");
    REQUIRE(svg);
    CHECK(svg->status == 200);
    CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");
    CHECK(svg->body == run_cli("diagram --graph k33 --t 1/3,1/3").out);

    const auto pts = cli.Post("/api/diagram", R"({"graph":"k4","points":[["0","0"],["1/2","0"],["0","1/2"],["1/2","1/2"]]})",
                              "application/json");
    REQUIRE(pts);
    CHECK(pts->status == 422);
  }

  TEST_CASE("serve error statuses") {
    auto cli = server().client();
    const auto malformed = cli.Post("/api/moduli", "{not json", "application/json");
    REQUIRE(malformed);
    CHECK(malformed->status == 400);
    const auto unknown = cli.Post("/api/moduli", R"({"graph":"nope"})", "application/json");
    REQUIRE(unknown);
    CHECK(unknown->status == 400);
    const auto bound = cli.Get("/api/markov?bound=abc");
    REQUIRE(bound);
    CHECK(bound->status == 400);
    const auto empty = cli.Post("/api/moves", R"({"graph":"theta"})", "application/json");
    REQUIRE(empty);
    CHECK(empty->status == 422);
  }

  TEST_CASE("concurrent requests see one cached answer") {
    auto& s = server();
    std::vector<std::thread> threads;
    std::vector<std::string> bodies(8);
    for (std::size_t i = 0; i < bodies.size(); ++i)
      threads.emplace_back([&, i] {
        auto cli = s.client();
        if (auto r = cli.Post("/api/moves", R"({"graph":"torus8"})", "application/json")) bodies[i] = r->body;
      });
    for (auto& t : threads) t.join();
    for (const auto& b : bodies) CHECK(b == bodies[0]);
    CHECK_FALSE(bodies[0].empty());
    const auto before = s.cache().size();
    auto cli = s.client();
    cli.Post("/api/moves", R"({"graph":"torus8"})", "application/json");
    CHECK(s.cache().size() == before);
  }
}
