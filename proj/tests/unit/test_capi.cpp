#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "pea/pea.h"

namespace {

nlohmann::json take(char* s) {
  auto j = nlohmann::json::parse(s);
  pea_string_free(s);
  return j;
}

struct Table {
  pea_table* t = nullptr;
  ~Table() { pea_table_free(t); }
};

}  // namespace

TEST_CASE("tables through the C API") {
  Table d;
  REQUIRE(pea_table_builtin("diamond", &d.t) == PEA_OK);
  CHECK(pea_table_size(d.t) == 4);
  CHECK(std::string(pea_table_name(d.t, 1)) == "a");
  CHECK(pea_table_name(d.t, 9) == nullptr);
  int s = 0;
  CHECK(pea_table_add(d.t, 1, 1, &s) == PEA_OK);
  CHECK(s == 3);
  CHECK(pea_table_add(d.t, 1, 2, &s) == PEA_OK);
  CHECK(s == -1);
  CHECK(pea_table_add(d.t, 1, 7, &s) == PEA_ERR_INPUT);
  int passed = 0;
  CHECK(pea_table_check_axioms(d.t, PEA_KIND_PEA, &passed) == PEA_OK);
  CHECK(passed == 1);

  char* text = nullptr;
  REQUIRE(pea_table_write(d.t, &text) == PEA_OK);
  Table back;
  CHECK(pea_table_parse(text, &back.t) == PEA_OK);
  char* again = nullptr;
  REQUIRE(pea_table_write(back.t, &again) == PEA_OK);
  CHECK(std::strcmp(text, again) == 0);
  pea_string_free(text);
  pea_string_free(again);
}

TEST_CASE("errors carry a type and message") {
  Table t;
  CHECK(pea_table_parse("{", &t.t) == PEA_ERR_INPUT);
  CHECK(std::string(pea_last_error_type()) == "InputError");
  CHECK(std::strlen(pea_last_error()) > 0);
  CHECK(pea_table_builtin("nope", &t.t) == PEA_ERR_INPUT);
  CHECK(pea_table_parse(nullptr, &t.t) == PEA_ERR_INPUT);

  REQUIRE(pea_table_parse(R"({"elements":["0","p","q","r","s"],"zero":"0","add":[["q","s","p"],["r","q","p"],["s","r","p"]]})", &t.t) == PEA_OK);
  char* out = nullptr;
  CHECK(pea_report_unitize(t.t, &out) == PEA_ERR_REFUSED);
  CHECK(std::string(pea_last_error_type()) == "NonSymmetric");
  CHECK(pea_report_suite(9, 5, 10, 1, &out) == PEA_ERR_TOO_LARGE);
  CHECK(std::string(pea_last_error_type()) == "TooLarge");
}

TEST_CASE("reports") {
  Table b;
  REQUIRE(pea_table_builtin("boolean4", &b.t) == PEA_OK);
  char* out = nullptr;
  REQUIRE(pea_report_decompose(b.t, 1, &out) == PEA_OK);
  auto j = take(out);
  CHECK(j["command"] == "decompose 1");
  CHECK(j["results"]["count"] == 2);
  CHECK(j["input_digest"].is_string());

  REQUIRE(pea_report_states(b.t, 2, 0, nullptr, &out) == PEA_OK);
  j = take(out);
  CHECK(j["results"]["discrete"]["count"] == 1);
  CHECK(j["results"]["discrete"]["states"][0]["state"]["a"] == "1/2");

  REQUIRE(pea_report_quotient(b.t, "0,a", &out) == PEA_OK);
  j = take(out);
  Table q;
  REQUIRE(pea_table_parse(j["document"].dump().c_str(), &q.t) == PEA_OK);
  CHECK(pea_table_size(q.t) == 2);

  REQUIRE(pea_report_construct(R"({"builtin":"chain:4"})", &out) == PEA_OK);
  j = take(out);
  CHECK(j["results"]["size"] == 5);

  REQUIRE(pea_report_construct(R"({"lex":2,"group":"z:1","samples":200,"seed":5})", &out) == PEA_OK);
  j = take(out);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 5);
}
