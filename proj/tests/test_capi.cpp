// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library through its C header only.

#include <doctest.h>

#include <string>

#include "refkac/refkac.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  refkac_string_free(s);
  return out;
}

refkac_quiver* parse(const char* text) {
  refkac_quiver* q = nullptr;
  REQUIRE(refkac_quiver_parse(text, &q) == REFKAC_OK);
  return q;
}

}  // namespace

TEST_CASE("quiver handles") {
  refkac_quiver* q = parse("[[2]]");
  size_t n = 0;
  CHECK(refkac_quiver_vertex_count(q, &n) == REFKAC_OK);
  CHECK(n == 1);
  int loops = 0;
  CHECK(refkac_quiver_has_enough_loops(q, &loops) == REFKAC_OK);
  CHECK(loops == 1);
  refkac_quiver* g = nullptr;
  CHECK(refkac_quiver_gamma_m(q, 2, &g) == REFKAC_OK);
  char* out = nullptr;
  CHECK(refkac_quiver_render(g, &out) == REFKAC_OK);
  CHECK(take(out) == "[[2,2],[0,3]]");
  CHECK(refkac_quiver_label(g, 1, &out) == REFKAC_OK);
  CHECK(take(out) == "v1^2");
  CHECK(refkac_quiver_label(g, 2, &out) == REFKAC_ERR_OUT_OF_RANGE);
  const unsigned a[] = {2};
  long e = 0;
  CHECK(refkac_euler_form(q, a, a, 1, &e) == REFKAC_OK);
  CHECK(e == -4);
  refkac_quiver_free(g);
  refkac_quiver_free(q);
}

TEST_CASE("errors map to status codes") {
  refkac_quiver* q = nullptr;
  CHECK(refkac_quiver_parse("[[1,", &q) == REFKAC_ERR_PARSE);
  CHECK(q == nullptr);
  CHECK(std::string(refkac_last_error()).find("position") != std::string::npos);
  CHECK(refkac_quiver_parse(nullptr, &q) == REFKAC_ERR_INVALID_ARGUMENT);
  CHECK(refkac_quiver_load("/nonexistent/quiver.json", &q) == REFKAC_ERR_IO);

  refkac_quiver* a2 = parse("[[0,1],[0,0]]");
  refkac_quiver* g = nullptr;
  CHECK(refkac_quiver_gamma_m(a2, 2, &g) == REFKAC_ERR_PRECONDITION);
  CHECK(std::string(refkac_last_error()).find("v1") != std::string::npos);
  refkac_quiver_free(a2);

  char* out = nullptr;
  CHECK(refkac_tau_m("[3]", 2, &out) == REFKAC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(refkac_status_string(REFKAC_ERR_DIVISION_BY_ZERO)) == "division by zero");
}

TEST_CASE("tables") {
  refkac_quiver* q = parse("[[2]]");
  refkac_table* t = nullptr;
  REQUIRE(refkac_kac_table(q, 4, &t) == REFKAC_OK);
  size_t size = 0;
  CHECK(refkac_table_size(t, &size) == REFKAC_OK);
  CHECK(size == 4);
  char* v = nullptr;
  CHECK(refkac_table_lookup(t, "2", &v) == REFKAC_OK);
  CHECK(take(v) == "q^5+q^3");
  CHECK(refkac_table_lookup(t, "5", &v) == REFKAC_ERR_OUT_OF_RANGE);
  CHECK(refkac_table_lookup(t, "x", &v) == REFKAC_ERR_PARSE);
  char* out = nullptr;
  CHECK(refkac_table_render(t, REFKAC_FORMAT_TABLE, &out) == REFKAC_OK);
  CHECK(take(out).rfind("(1): q^2\n(2): q^5+q^3\n", 0) == 0);
  refkac_table_free(t);

  REQUIRE(refkac_refined_table(q, 3, REFKAC_UNBOUNDED, &t) == REFKAC_OK);
  CHECK(refkac_table_lookup(t, "[2,1]", &v) == REFKAC_OK);
  CHECK(take(v) == "q^6+q^5");
  CHECK(refkac_table_render_entry(t, "[2,1]", REFKAC_FORMAT_JSON, &out) == REFKAC_OK);
  CHECK(take(out).find("\"value\": \"q^6+q^5\"") != std::string::npos);
  refkac_table_free(t);
  refkac_quiver_free(q);
}

TEST_CASE("tau_m and series") {
  char* out = nullptr;
  CHECK(refkac_tau_m("[2,1];[1]", 2, &out) == REFKAC_OK);
  CHECK(take(out) == "[1];[1];[1];[]");
  refkac_quiver* q = parse("[[1]]");
  CHECK(refkac_series_dump(q, REFKAC_SERIES_P, 1, REFKAC_UNBOUNDED, &out) == REFKAC_OK);
  CHECK(take(out) == "(0): 1\n(1): q/(q-1)\n");
  refkac_quiver_free(q);
}

TEST_CASE("verification reports") {
  refkac_report* r = nullptr;
  REQUIRE(refkac_verify("tables", 1, 0, &r) == REFKAC_OK);
  int passed = 0;
  CHECK(refkac_report_passed(r, &passed) == REFKAC_OK);
  CHECK(passed == 1);
  char* out = nullptr;
  CHECK(refkac_report_render(r, REFKAC_FORMAT_JSON, &out) == REFKAC_OK);
  CHECK(take(out).find("\"passed\": true") != std::string::npos);
  refkac_report_free(r);
  CHECK(refkac_verify("bogus", 1, 0, &r) == REFKAC_ERR_INVALID_ARGUMENT);
  CHECK(refkac_suite_names(&out) == REFKAC_OK);
  CHECK(take(out).find("heine\n") != std::string::npos);
}
