#include "doctest.h"
#include "support.hpp"
#include "trigrid/serialize.hpp"

using namespace trigrid;
using test::lib;
using json::Json;

namespace {

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& e : j)
      if (has_float(e)) return true;
  return false;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("rationals are exact strings") {
    CHECK(json::rational(Rational(-3, 4)) == "-3/4");
    CHECK(json::rational(Rational(2)) == "2/1");
    CHECK(json::parse_rationals(Json::array({"1/2", "-3", 4})) == RatVector{Rational(1, 2), -3, 4});
    CHECK_THROWS(json::parse_rationals(Json::array({0.5})));
    CHECK_THROWS(json::parse_rationals(Json("1/2")));
  }

  TEST_CASE("documents carry the schema version and kind") {
    const auto d = json::document("x", {{"a", 1}});
    CHECK(d["schema_version"] == json::kSchemaVersion);
    CHECK(d["kind"] == "x");
    CHECK(d["a"] == 1);
    const auto e = json::error_document("degenerate_point", "msg");
    CHECK(e["kind"] == "error");
    CHECK(e["error"]["code"] == "degenerate_point");
    CHECK(json::dump(d).back() == '\n');
  }

  TEST_CASE("theta moduli report is empty") {
    const auto j = json::moduli_report(full_moduli(lib("theta"), SlopeSystem::standard()));
    CHECK(j["components"].empty());
    CHECK(j["note"] == "empty");
    CHECK(j["dimension"].is_null());
    CHECK_FALSE(j["dropped"].empty());
  }

  TEST_CASE("K33 moduli report") {
    const auto j = json::moduli_report(full_moduli(lib("k33"), SlopeSystem::standard()));
    CHECK(j["dimension"] == 4);
    CHECK(j["based_dimension"] == 2);
    REQUIRE(j["components"].size() == 1);
    const auto& c = j["components"][0];
    CHECK(c["chart"]["basis"].size() == 2);
    CHECK(c["chambers"]["count"] == 2);
    CHECK_FALSE(has_float(j));
  }

  TEST_CASE("no floats anywhere in the library documents") {
    for (const auto& name : builtin_graph_names()) {
      const auto g = lib(name);
      CHECK_FALSE(has_float(json::moduli_report(full_moduli(g, SlopeSystem::standard()))));
      CHECK_FALSE(has_float(json::obstruction(obstruction_report(g))));
    }
    CHECK_FALSE(has_float(json::enumeration(cross_check(2, 1))));
  }

  TEST_CASE("serialization is deterministic") {
    const auto a = json::dump(json::moduli_report(full_moduli(lib("torus8"), SlopeSystem::standard())));
    const auto b = json::dump(json::moduli_report(full_moduli(lib("torus8"), SlopeSystem::standard())));
    CHECK(a == b);
  }
}
