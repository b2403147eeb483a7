#include <doctest.h>
#include <s4lie.h>

#include <cstring>
#include <json.hpp>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  s4_string_free(s);
  return out;
}

// Hamilton quaternions written out by hand.
const char* kQuaternions = R"({"field":{"kind":"Q"},"dim":4,
  "mul":[[0,0,0,"1"],[0,1,1,"1"],[0,2,2,"1"],[0,3,3,"1"],
         [1,0,1,"1"],[2,0,2,"1"],[3,0,3,"1"],
         [1,1,0,"-1"],[2,2,0,"-1"],[3,3,0,"-1"],
         [1,2,3,"1"],[2,1,3,"-1"],[2,3,1,"1"],[3,2,1,"-1"],[3,1,2,"1"],[1,3,2,"-1"]],
  "involution":[["1","0","0","0"],["0","-1","0","0"],["0","0","-1","0"],["0","0","0","-1"]],
  "form":[["2","0","0","0"],["0","2","0","0"],["0","0","2","0"],["0","0","0","2"]]})";

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(s4_status_name(S4_OK)) == "ok");
  CHECK(std::strlen(s4_status_name(S4_ERR_AXIOM)) > 0);
  s4_algebra* a = nullptr;
  CHECK(s4_algebra_from_json("{not json", &a) == S4_ERR_FORMAT);
  CHECK(a == nullptr);
  CHECK(std::strlen(s4_last_error()) > 0);
  CHECK(s4_algebra_from_json(nullptr, &a) == S4_ERR_INVALID_ARGUMENT);
  CHECK(s4_algebra_from_json(kQuaternions, nullptr) == S4_ERR_INVALID_ARGUMENT);
  CHECK(s4_set_threads(2) == S4_OK);
  CHECK(s4_set_threads(0) == S4_OK);
}

TEST_CASE("catalog through the C API") {
  const size_t n = s4_catalog_count();
  CHECK(n == 29);
  for (size_t i = 0; i < n; ++i) CHECK(s4_catalog_name(i) != nullptr);
  CHECK(s4_catalog_name(n) == nullptr);

  s4_algebra* a = nullptr;
  s4_delta* d = nullptr;
  s4_kind kind;
  REQUIRE(s4_catalog_build("octonion", &a, &d, &kind) == S4_OK);
  CHECK(kind == S4_KIND_HURWITZ);
  CHECK(d == nullptr);
  CHECK(s4_algebra_dim(a) == 8);
  s4_report* r = nullptr;
  REQUIRE(s4_check_composition(a, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
  s4_algebra_free(a);

  REQUIRE(s4_catalog_build("sym2", &a, &d, &kind) == S4_OK);
  CHECK(kind == S4_KIND_LRTA);
  REQUIRE(d != nullptr);
  REQUIRE(s4_check_lrta(a, d, nullptr, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
  s4_delta_free(d);
  s4_algebra_free(a);

  CHECK(s4_catalog_build("no-such-thing", &a, nullptr, &kind) == S4_ERR_UNKNOWN_NAME);
  REQUIRE(s4_catalog_check("para-octonion", nullptr, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
}

TEST_CASE("algebra JSON in and out, validation, extension") {
  s4_algebra* h = nullptr;
  REQUIRE(s4_algebra_from_json(kQuaternions, &h) == S4_OK);
  CHECK(s4_algebra_dim(h) == 4);
  CHECK(s4_algebra_validate(h) == S4_OK);
  char* text = nullptr;
  REQUIRE(s4_algebra_to_json(h, &text) == S4_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j["dim"] == 4);
  CHECK(j["mul"].size() == 16);

  s4_report* r = nullptr;
  REQUIRE(s4_check_composition(h, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  REQUIRE(s4_report_to_json(r, &text) == S4_OK);
  auto rj = nlohmann::json::parse(take(text));
  CHECK(rj.is_object());
  REQUIRE(s4_report_to_text(r, &text) == S4_OK);
  CHECK(take(text).find("PASS") != std::string::npos);
  s4_report_free(r);

  s4_algebra* e = nullptr;
  REQUIRE(s4_algebra_extend(h, "Qsqrt:-1", &e) == S4_OK);
  REQUIRE(s4_algebra_to_json(e, &text) == S4_OK);
  CHECK(nlohmann::json::parse(take(text))["field"]["d"] == -1);
  s4_algebra_free(e);
  CHECK(s4_algebra_extend(h, "reals", &e) != S4_OK);

  // identity is not an anti-automorphism of the quaternions
  auto bad = nlohmann::json::parse(kQuaternions);
  bad["involution"] = nlohmann::json::array({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"},
                                              {"0", "0", "0", "1"}});
  s4_algebra* b = nullptr;
  REQUIRE(s4_algebra_from_json(bad.dump().c_str(), &b) == S4_OK);
  CHECK(s4_algebra_validate(b) == S4_ERR_INVALID_INVOLUTION);
  s4_algebra_free(b);
  s4_algebra_free(h);
}

TEST_CASE("Lie pipeline: construct, verify, extract, simple") {
  s4_algebra* a = nullptr;
  s4_delta* d = nullptr;
  s4_kind kind;
  REQUIRE(s4_catalog_build("sym2", &a, &d, &kind) == S4_OK);
  s4_lie* l = nullptr;
  REQUIRE(s4_lie_construct(a, d, 1, 0, &l) == S4_OK);
  CHECK(s4_lie_dim(l) == 10);
  s4_report* r = nullptr;
  REQUIRE(s4_lie_verify(l, S4_MODE_FULL, 0, 0, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);

  char* text = nullptr;
  REQUIRE(s4_lie_to_json(l, &text) == S4_OK);
  s4_lie* back = nullptr;
  REQUIRE(s4_lie_from_json(take(text).c_str(), &back) == S4_OK);
  CHECK(s4_lie_dim(back) == 10);

  s4_algebra* ea = nullptr;
  s4_delta* ed = nullptr;
  int lrta = -1;
  REQUIRE(s4_lie_extract(back, &ea, &ed, &lrta) == S4_OK);
  CHECK(lrta == 1);
  CHECK(s4_algebra_dim(ea) == 3);
  REQUIRE(s4_check_lrta(ea, ed, nullptr, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);

  s4_verdict v;
  REQUIRE(s4_lie_simple(back, 1, &v, &r) == S4_OK);
  CHECK(v == S4_SIMPLE);
  s4_report_free(r);

  // -delta spans the same triples but breaks the axioms; force builds it anyway
  REQUIRE(s4_delta_to_json(d, &text) == S4_OK);
  auto dj = nlohmann::json::parse(take(text));
  bool changed = false;
  for (auto& t : dj["triples"])
    for (int i = 2; i < 5; ++i)
      for (auto& c : t[i]) {
        std::string v = c.get<std::string>();
        if (v == "0") continue;
        c = v[0] == '-' ? v.substr(1) : "-" + v;
        changed = true;
      }
  REQUIRE(changed);
  s4_delta* bad = nullptr;
  REQUIRE(s4_delta_from_json(dj.dump().c_str(), a, &bad) == S4_OK);
  s4_lie* forced = nullptr;
  CHECK(s4_lie_construct(a, bad, 1, 0, &forced) == S4_ERR_AXIOM);
  CHECK(forced == nullptr);
  REQUIRE(s4_lie_construct(a, bad, 1, 1, &forced) == S4_OK);
  REQUIRE(s4_lie_verify(forced, S4_MODE_FULL, 0, 0, &r) == S4_OK);
  CHECK(!s4_report_passed(r));
  s4_report_free(r);

  s4_lie_free(forced);
  s4_delta_free(bad);
  s4_algebra_free(ea);
  s4_delta_free(ed);
  s4_lie_free(back);
  s4_lie_free(l);
  s4_delta_free(d);
  s4_algebra_free(a);
}

TEST_CASE("degree five and magic square") {
  s4_algebra* a = nullptr;
  s4_delta* d = nullptr;
  s4_kind kind;
  REQUIRE(s4_catalog_build("tensor:para-octonion,para-rational", &a, &d, &kind) == S4_OK);
  CHECK(kind == S4_KIND_STA);
  s4_report* r = nullptr;
  REQUIRE(s4_check_degree5(a, 100, 3, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
  s4_check_options opt{S4_MODE_SAMPLE, 50, 7};
  REQUIRE(s4_check_sta(a, d, &opt, &r) == S4_OK);
  CHECK(s4_report_passed(r));
  char* text = nullptr;
  REQUIRE(s4_report_to_json(r, &text) == S4_OK);
  CHECK(take(text).find("\"seed\":7") != std::string::npos);
  s4_report_free(r);
  s4_delta_free(d);
  s4_algebra_free(a);

  size_t dim = 0;
  REQUIRE(s4_magic_square_dim(1, 1, &dim) == S4_OK);
  CHECK(dim == 3);
  REQUIRE(s4_magic_square_dim(2, 4, &dim) == S4_OK);
  CHECK(dim == 35);
  CHECK(s4_magic_square_dim(3, 1, &dim) != S4_OK);
}

TEST_CASE("Kantor entry points") {
  s4_algebra* h = nullptr;
  REQUIRE(s4_algebra_from_json(kQuaternions, &h) == S4_OK);
  s4_lie* k = nullptr;
  s4_report* r = nullptr;
  REQUIRE(s4_kantor_build(h, S4_DER_INNER, "2", &k, &r) == S4_OK);
  CHECK(s4_lie_dim(k) == 21);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
  s4_lie_free(k);
  CHECK(s4_kantor_build(h, S4_DER_INNER, "0", &k, nullptr) == S4_ERR_PRECONDITION);

  REQUIRE(s4_kantor_psi_check(h, S4_DER_FULL, "-3", &r) == S4_OK);
  CHECK(s4_report_passed(r));
  s4_report_free(r);

  const char* gamma[3] = {"1", "-1", "4"};
  REQUIRE(s4_kantor_af(h, S4_DER_INNER, gamma, &k, &r) == S4_OK);
  CHECK(s4_lie_dim(k) == 21);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
  s4_lie_free(k);

  REQUIRE(s4_kantor_s4(h, S4_DER_INNER, &k, &r) == S4_OK);
  CHECK(s4_lie_dim(k) == 21);
  CHECK(s4_report_passed(r));
  s4_report_free(r);
  s4_lie_free(k);
  s4_algebra_free(h);
}
