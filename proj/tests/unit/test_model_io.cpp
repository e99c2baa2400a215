#include "helpers.hpp"

#include "isect/error.hpp"
#include "isect/model_io.hpp"

#include <doctest.h>

#include <string>

using namespace isect;
using namespace isect::test;

namespace {

const ModelKind kAllKinds[] = {ModelKind::Interval, ModelKind::Arcs,  ModelKind::Permutation, ModelKind::Trapezoid,
                               ModelKind::Dotted,   ModelKind::Tolerance, ModelKind::Chords,  ModelKind::Disks,
                               ModelKind::Boxes,    ModelKind::Graph};

Errc error_of(std::string_view text) {
  try {
    parse_model_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::BadParams;
}

std::string message_of(std::string_view text) {
  try {
    parse_model_file(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse interval and dotted files") {
  ModelFile f = parse_model_file(R"({"kind": "interval", "items": [{"id": 2, "a": "3/2", "b": 4}, {"id": 1, "a": 0, "b": "2.5"}]})");
  CHECK(f.kind == ModelKind::Interval);
  const auto& m = std::get<IntervalModel>(f.model);
  REQUIRE(m.size() == 2);
  CHECK(m[1] == Interval{Rational(0), Rational(5, 2)});
  CHECK(m[2] == Interval{Rational(3, 2), Rational(4)});
  CHECK(f.weights.empty());

  ModelFile dotted = parse_model_file(R"({"kind": "dotted", "items": [
    {"id": 1, "s": 1, "t": 5, "d": 2}, {"id": 2, "s": 2, "t": 3, "d": 1}, {"id": 3, "s": 1, "t": 7, "d": 2},
    {"id": 4, "s": 4, "t": 6, "d": 2}, {"id": 5, "s": 6, "t": 8, "d": 2}]})");
  const auto& items = std::get<std::vector<DottedInterval>>(dotted.model);
  REQUIRE(items.size() == 5);
  CHECK(items[3].s == 4);
  CHECK(model_graph(dotted).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {4, 5}});
}

TEST_CASE("parse every kind") {
  CHECK(model_size(parse_model_file(R"({"kind": "arcs", "items": [{"id": 1, "h": 1, "t": 4}, {"id": 2, "h": 3, "t": 2}]})")) == 2);
  CHECK(std::get<Permutation>(parse_model_file(R"({"kind": "permutation", "pi": [2, 1, 3]})").model) == Permutation({2, 1, 3}));
  ModelFile trap = parse_model_file(R"({"kind": "trapezoid", "items": [{"id": 1, "a": 1, "b": 2, "c": 1, "d": 2}, {"id": 2, "a": 3, "b": 4, "c": 3, "d": 4}]})");
  CHECK_FALSE(std::get<TrapezoidModel>(trap.model).is_lines());
  ModelFile lines = parse_model_file(R"({"kind": "trapezoid", "items": [{"id": 1, "a": 1, "b": 1, "c": 2, "d": 2}, {"id": 2, "a": 2, "b": 2, "c": 1, "d": 1}]})");
  CHECK(std::get<TrapezoidModel>(lines.model).is_lines());
  CHECK(model_graph(lines).size() == 1);
  ModelFile tol = parse_model_file(R"({"kind": "tolerance", "items": [{"id": 1, "a": 0, "b": 3, "tol": "inf"}, {"id": 2, "a": 1, "b": 4, "tol": 1}]})");
  CHECK(std::get<ToleranceRep>(tol.model).tolerances[0].infinite);
  CHECK(model_graph(parse_model_file(R"({"kind": "chords", "items": [{"id": 1, "x": 1, "y": 3}, {"id": 2, "x": 2, "y": 4}]})")).size() == 1);
  ModelFile disks = parse_model_file(R"({"kind": "disks", "r": "1/2", "items": [{"id": 1, "x": 0, "y": 0}, {"id": 2, "x": "0.5", "y": 0}]})");
  CHECK(std::get<DiskPoints>(disks.model).r == Rational(1, 2));
  CHECK(model_graph(disks).size() == 1);
  ModelFile boxes = parse_model_file(R"({"kind": "boxes", "items": [{"id": 1, "intervals": [[0, 1], [0, 1]]}, {"id": 2, "intervals": [[1, 2], [2, 3]]}]})");
  CHECK(std::get<KBoxModel>(boxes.model).k == 2);
  CHECK(model_graph(boxes).size() == 0);
  ModelFile graph = parse_model_file(R"({"kind": "graph", "n": 3, "edges": [[1, 2], [3, 2]], "weights": [1, "1/2", 0]})");
  CHECK(model_graph(graph).edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(model_graph(graph).weight(2) == Rational(1, 2));
}

TEST_CASE("schema and validation errors") {
  CHECK(error_of("not json") == Errc::SchemaError);
  CHECK(error_of(R"({"items": []})") == Errc::SchemaError);
  CHECK(error_of(R"({"kind": "blob", "items": []})") == Errc::SchemaError);
  CHECK(error_of(R"({"kind": "interval", "items": [{"id": 1, "a": 0.5, "b": 2}]})") == Errc::SchemaError);
  CHECK(error_of(R"({"kind": "interval", "items": [{"id": 1, "b": 2}]})") == Errc::SchemaError);
  CHECK(error_of(R"({"kind": "interval", "items": [{"id": 1, "a": 0, "b": 2}, {"id": 1, "a": 1, "b": 3}]})") == Errc::ValidationError);
  CHECK(error_of(R"({"kind": "interval", "items": [{"id": 1, "a": 0, "b": 2}], "weights": [1, 2]})") == Errc::ValidationError);
  CHECK(error_of(R"({"kind": "interval", "items": [{"id": 1, "a": 0, "b": 2}], "weights": [-1]})") == Errc::ValidationError);
  CHECK(error_of(R"({"kind": "arcs", "items": [{"id": 1, "h": 1, "t": 2}, {"id": 2, "h": 2, "t": 3}]})") == Errc::ValidationError);
  CHECK(error_of(R"({"kind": "permutation", "pi": [1, 1]})") == Errc::ValidationError);
  CHECK(error_of(R"({"kind": "disks", "items": [{"id": 1, "x": 0, "y": 0}]})") == Errc::SchemaError);
  CHECK(error_of(R"({"kind": "graph", "n": 2, "edges": [[1, 3]]})") == Errc::ValidationError);

  const char* backwards = R"({"kind": "interval", "items": [{"id": 1, "a": 0, "b": 2}, {"id": 2, "a": 5, "b": 4}]})";
  CHECK(error_of(backwards) == Errc::ValidationError);
  CHECK(message_of(backwards).find("$.items[1]") != std::string::npos);
  CHECK(message_of(R"({"kind": "interval", "items": [{"id": 1, "a": 0, "b": true}]})").find("$.items[0].b") != std::string::npos);
}

TEST_CASE("generate_model") {
  for (ModelKind kind : kAllKinds) {
    CAPTURE(kind_name(kind));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.n = 1 + static_cast<int>(seed % 25);
      spec.seed = seed;
      ModelFile f = generate_model(spec);
      CHECK(model_size(f) == spec.n);
      std::string text = emit_model_file(f);
      CHECK(text == emit_model_file(generate_model(spec)));
      CHECK(emit_model_file(parse_model_file(text)) == text);
      CHECK(model_graph(parse_model_file(text)) == model_graph(f));
    }
  }

  GeneratorSpec spec;
  spec.kind = ModelKind::Interval;
  spec.n = 50;
  spec.seed = 9;
  const auto m = std::get<IntervalModel>(generate_model(spec).model);
  CHECK(m.is_strict());
  CHECK(is_connected(build_interval_graph(m)));
  CHECK(normalize(m).model == m);
  CHECK(normalize(normalize(m).model).model == normalize(m).model);

  spec.n = 0;
  CHECK_THROWS_AS(generate_model(spec), Error);
  spec.n = 5;
  spec.kind = static_cast<ModelKind>(99);
  CHECK_THROWS_AS(generate_model(spec), Error);
  CHECK(parse_kind("arcs") == ModelKind::Arcs);
  CHECK(parse_kind("nope") == std::nullopt);
}

TEST_CASE("uniform_int") {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t x = uniform_int(a, -3, 7);
    CHECK(x >= -3);
    CHECK(x <= 7);
    CHECK(x == uniform_int(b, -3, 7));
  }
  CHECK(uniform_int(a, 5, 5) == 5);
  std::mt19937_64 c(1);
  CHECK(uniform_int(c, 0, 0) == 0);
}
