#include <doctest.h>

#include "support.hpp"
#include "ulrich/catalog.hpp"
#include "ulrich/document.hpp"
#include "ulrich/error.hpp"

using namespace ulrich;

namespace {

const char* kMinimal = R"({
  "basis": ["u", "v"],
  "gram": [[0, 1], [1, 0]],
  "K": [-2, -2],
  "h": [1, 1],
  "pg": 0,
  "q": 0
})";

Error error_of(std::string_view text) {
  try {
    parse_surface(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse failure");
  return Error(ErrorCode::InvariantViolation, "unreachable");
}

}  // namespace

TEST_CASE("catalog surfaces round trip through the canonical text") {
  for (const auto& s : testing_support::catalog_surfaces()) {
    CAPTURE(s.name());
    const auto text = serialize_surface(s);
    const auto back = parse_surface(text);
    CHECK(back == s);
    CHECK(serialize_surface(back) == text);
    CHECK(surface_from_json(nlohmann::json::parse(surface_to_json(s).dump())) == s);
  }
}

TEST_CASE("defaults for omitted optional fields") {
  const auto s = parse_surface(kMinimal);
  CHECK(std::holds_alternative<kind::Abstract>(s.kind()));
  CHECK(s.flags() == SurfaceFlags{});
  CHECK(s.name().empty());
  CHECK(s.lattice().labels() == std::vector<std::string>{"u", "v"});
}

TEST_CASE("flags accept booleans and tri-state strings") {
  auto doc = nlohmann::json::parse(kMinimal);
  doc["flags"] = {{"very_ample", true}, {"non_special", "false"}};
  const auto s = surface_from_json(doc);
  CHECK(s.flags().very_ample == TriState::True);
  CHECK(s.flags().non_special == TriState::False);
  CHECK(s.flags().h0_2K_minus_h_zero == TriState::Unknown);
}

TEST_CASE("document errors carry a path") {
  {
    auto doc = nlohmann::json::parse(kMinimal);
    doc["gram"] = {{0, 1}, {2, 0}};
    try {
      surface_from_json(doc);
      FAIL("expected asymmetric gram to fail");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValidationError);
      CHECK(e.path() == "gram");
    }
  }
  {
    const auto e = error_of("{ not json");
    CHECK(e.code() == ErrorCode::ParseError);
  }
  {
    auto doc = nlohmann::json::parse(kMinimal);
    doc.erase("h");
    try {
      surface_from_json(doc);
      FAIL("expected missing h to fail");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValidationError);
      CHECK(e.path() == "h");
    }
  }
  {
    auto doc = nlohmann::json::parse(kMinimal);
    doc["colour"] = "blue";
    try {
      surface_from_json(doc);
      FAIL("expected unknown key to fail");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValidationError);
      CHECK(e.path() == "colour");
    }
  }
  {
    auto doc = nlohmann::json::parse(kMinimal);
    doc["K"] = {-1, -2};  // parity fails on the first basis vector
    try {
      surface_from_json(doc);
      FAIL("expected parity failure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValidationError);
      CHECK(e.path() == "K");
    }
  }
  {
    auto doc = nlohmann::json::parse(kMinimal);
    doc["kind"] = "p2(lambda=1)";
    CHECK_THROWS_AS(surface_from_json(doc), Error);
  }
  {
    auto doc = nlohmann::json::parse(kMinimal);
    doc["h"] = {1.5, 1};
    CHECK_THROWS_AS(surface_from_json(doc), Error);
  }
}

TEST_CASE("serialized text layout") {
  const auto text = serialize_surface(p2_surface(2));
  CHECK(text.rfind("{\n  \"name\": \"p2-2\",\n  \"basis\": [\"l\"],", 0) == 0);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"kind\": \"p2(lambda=2)\"") != std::string::npos);
}
