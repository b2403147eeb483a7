#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "s4lie/catalog.hpp"
#include "s4lie/errors.hpp"
#include "s4lie/io.hpp"

using namespace s4lie;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::precondition;
}

json reparse(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST_CASE("fields") {
  CHECK(field_to_json(Field()) == json::parse(R"({"kind":"Q"})"));
  CHECK(field_to_json(Field::quadratic(-3)) == json::parse(R"({"kind":"Qsqrt","d":-3})"));
  CHECK(field_from_json(json::parse(R"({"kind":"Qsqrt","d":-1})")) == Field::quadratic(-1));
  CHECK(kind_of([] { field_from_json(json::parse(R"({"kind":"R"})")); }) == ErrorKind::format);
}

TEST_CASE("algebras round trip, including Q(sqrt -3) constants") {
  for (const char* name : {"rational", "quaternion", "octonion", "para-octonion", "okubo", "sym3", "twist:so3"}) {
    INFO(name);
    Algebra a = catalog_entry(name).datum.algebra;
    Algebra back = algebra_from_json(reparse(algebra_to_json(a)));
    CHECK(back == a);
    CHECK(back.has_involution() == a.has_involution());
  }
  // hand-written input with a radical coefficient
  json j = json::parse(R"({"field":{"kind":"Qsqrt","d":-3},"dim":1,"mul":[[0,0,0,"1/2+1/2*r"]]})");
  Algebra a = algebra_from_json(j);
  CHECK(a.basis_product(0, 0) == a.basis(0).scaled(Scalar(Field::quadratic(-3), mpq_class(1, 2), mpq_class(1, 2))));
  CHECK(algebra_to_json(a)["mul"][0][3] == "1/2+1/2*r");
}

TEST_CASE("algebra format errors") {
  auto parse = [](const char* s) { return algebra_from_json(json::parse(s)); };
  CHECK(kind_of([&] { parse(R"({"field":{"kind":"Q"},"dim":2,"mul":[[0,0,5,"1"]]})"); }) == ErrorKind::format);
  CHECK(kind_of([&] { parse(R"({"field":{"kind":"Q"},"dim":1,"mul":[[0,0,0,1.5]]})"); }) == ErrorKind::format);
  // integers are read leniently
  CHECK(parse(R"({"field":{"kind":"Q"},"dim":1,"mul":[[0,0,0,-2]]})").basis_product(0, 0).entries()[0].value ==
        Field().integer(-2));
  CHECK(kind_of([&] { parse(R"({"field":{"kind":"Q"},"dim":1,"mul":[[0,0,0,"x"]]})"); }) == ErrorKind::format);
  CHECK(kind_of([&] { parse(R"({"field":{"kind":"Q"},"dim":1,"mul":[[0,0]]})"); }) == ErrorKind::format);
  CHECK(kind_of([&] { parse(R"({"field":{"kind":"Q"},"dim":2,"mul":[],"involution":[["1"]]})"); }) ==
        ErrorKind::shape);
  CHECK(kind_of([&] { parse(R"({"field":{"kind":"Q"},"mul":[]})"); }) == ErrorKind::format);
  // radical over Q
  CHECK_THROWS_AS(parse(R"({"field":{"kind":"Q"},"dim":1,"mul":[[0,0,0,"1+1*r"]]})"), Error);
}

TEST_CASE("delta maps round trip and reject malformed input") {
  for (const char* name : {"sym2", "lie:sl2", "lts:sl2", "tensor:para-octonion,para-rational"}) {
    INFO(name);
    Datum d = catalog_entry(name).datum;
    DeltaMap back = delta_from_json(reparse(delta_to_json(d.delta)), d.algebra.field());
    CHECK(back == d.delta);
  }
  const Field q;
  json dup = json::parse(R"({"dim":2,"triples":[[0,1,["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
                                               [0,1,["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]]})");
  CHECK(kind_of([&] { delta_from_json(dup, q); }) == ErrorKind::format);
  json order = json::parse(R"({"dim":2,"triples":[[1,0,["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]]})");
  CHECK(kind_of([&] { delta_from_json(order, q); }) == ErrorKind::format);
  json shape = json::parse(R"({"dim":2,"triples":[[0,1,["0","0","0"],["0","0","0","0"],["0","0","0","0"]]]})");
  CHECK(kind_of([&] { delta_from_json(shape, q); }) == ErrorKind::shape);
  json other = json::parse(R"({"field":{"kind":"Qsqrt","d":-3},"dim":1,"triples":[]})");
  CHECK(kind_of([&] { delta_from_json(other, q); }) == ErrorKind::context);
}

TEST_CASE("Lie algebras with actions round trip") {
  Datum d = catalog_entry("sym2").datum;
  Construction g = construct_g_lrta(d.algebra, d.delta);
  LieFile back = lie_from_json(reparse(lie_to_json(g.lie, &g.action)));
  CHECK(back.lie == g.lie);
  REQUIRE(back.action.has_value());
  CHECK(back.action->group == g.action.group);
  REQUIRE(back.action->generators.size() == g.action.generators.size());
  // stored as an object, so compare by name
  for (const auto& [name, m] : g.action.generators) {
    INFO(name);
    auto it = std::find_if(back.action->generators.begin(), back.action->generators.end(),
                           [&](const auto& p) { return p.first == name; });
    REQUIRE(it != back.action->generators.end());
    CHECK(it->second == m);
  }
  CHECK(back.lie.blocks().size() == g.lie.blocks().size());
  for (std::size_t b = 0; b < g.lie.blocks().size(); ++b) {
    CHECK(back.lie.blocks()[b].label == g.lie.blocks()[b].label);
    CHECK(back.lie.blocks()[b].grade == g.lie.blocks()[b].grade);
  }
  LieFile bare = lie_from_json(reparse(lie_to_json(g.lie)));
  CHECK(!bare.action.has_value());

  json j = lie_to_json(g.lie);
  j["grading"] = "z7";
  CHECK(kind_of([&] { lie_from_json(j); }) == ErrorKind::format);
  j = lie_to_json(g.lie);
  j["blocks"][0]["dim"] = j["blocks"][0]["dim"].get<int>() + 1;
  CHECK(kind_of([&] { lie_from_json(j); }) == ErrorKind::shape);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "s4lie_io_test.json";
  Algebra h = oracle::quaternions();
  write_json_file(path.string(), algebra_to_json(h));
  CHECK(algebra_from_json(read_json_file(path.string())) == h);
  {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    std::fputs("{not json", f);
    std::fclose(f);
  }
  CHECK(kind_of([&] { read_json_file(path.string()); }) == ErrorKind::format);
  std::filesystem::remove(path);
  CHECK(kind_of([&] { read_json_file(path.string()); }) == ErrorKind::format);
}
