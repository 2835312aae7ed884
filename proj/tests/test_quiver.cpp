// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "refkac/error.hpp"
#include "refkac/quiver.hpp"

using namespace refkac;

TEST_CASE("Euler form of small quivers") {
  const Quiver a2(std::vector<std::vector<unsigned>>{{0, 1}, {0, 0}});
  const DimVector a{1, 1};
  CHECK(euler_form(a2, a, a) == 1);
  CHECK(euler_form(Quiver::loops(2), DimVector{3}, DimVector{3}) == -9);
  CHECK(euler_form(Quiver::loops(1), DimVector{4}, DimVector{4}) == 0);
  CHECK(rep_space_exponent(Quiver::loops(2), DimVector{3}) == 18);
  CHECK_THROWS_AS(euler_form(a2, DimVector{1}, DimVector{1, 1}), Error);
}

TEST_CASE("Euler form matches a direct double sum") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 3;
    std::vector<std::vector<unsigned>> c(n, std::vector<unsigned>(n));
    DimVector a(n), b(n);
    for (auto& row : c) for (auto& x : row) x = e(rng);
    for (auto& x : a) x = e(rng);
    for (auto& x : b) x = e(rng);
    long want = 0;
    for (std::size_t i = 0; i < n; ++i) {
      want += static_cast<long>(a[i]) * b[i];
      for (std::size_t j = 0; j < n; ++j) want -= static_cast<long>(a[i]) * c[i][j] * b[j];
    }
    CHECK(euler_form(Quiver(c), a, b) == want);
  }
}

TEST_CASE("loop detection") {
  CHECK(has_enough_loops(Quiver::loops(1)));
  CHECK_FALSE(has_enough_loops(Quiver::loops(0)));
  const Quiver q(std::vector<std::vector<unsigned>>{{1, 1}, {0, 0}}, {"a", "b"});
  CHECK(first_loop_free_vertex(q) == 1);
  CHECK(first_loop_free_vertex(Quiver::loops(1)) == 1);
}

TEST_CASE("gamma_m of loop quivers") {
  CHECK(render_quiver_matrix(gamma_m(Quiver::loops(2), 2)) == "[[2,2],[0,3]]");
  CHECK(render_quiver_matrix(gamma_m(Quiver::loops(3), 2)) == "[[3,4],[0,5]]");
  CHECK(gamma_m(Quiver::loops(2), 1) == Quiver::loops(2));
  const auto g = gamma_m(Quiver::loops(1), 3);
  CHECK(render_quiver_matrix(g) == "[[1,0,0],[0,1,0],[0,0,1]]");
  CHECK(g.labels() == std::vector<std::string>{"v1^1", "v1^2", "v1^3"});
}

TEST_CASE("gamma_m closed form equals the expanded quadratic form") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<unsigned> entry(0, 3);
  std::uniform_int_distribution<unsigned> loop(1, 3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 3;
    const unsigned m = 1 + (t / 3) % 3;
    std::vector<std::vector<unsigned>> c(n, std::vector<unsigned>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] = i == j ? loop(rng) : entry(rng);
    }
    const Quiver g = gamma_m(Quiver(c), m);
    CHECK(g.companion() == oracle::gamma_quadratic_form(c, m));
    CHECK(has_enough_loops(g));
    CHECK(g.vertex_count() == n * m);
  }
}

TEST_CASE("gamma_m names the vertex without a loop") {
  const Quiver q(std::vector<std::vector<unsigned>>{{1, 1}, {0, 0}}, {"a", "b"});
  try {
    (void)gamma_m(q, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
    CHECK(std::string(e.what()).find("b") != std::string::npos);
  }
  CHECK_THROWS_AS(gamma_m(Quiver::loops(1), 0), Error);
}

TEST_CASE("level-major indexing") {
  CHECK(level_major_index(3, 0, 1) == 0);
  CHECK(level_major_index(3, 2, 1) == 2);
  CHECK(level_major_index(3, 0, 2) == 3);
  CHECK(level_major_index(2, 1, 3) == 5);
}

TEST_CASE("quiver text formats") {
  const Quiver q = parse_quiver("[[1, 1], [0, 1]]");
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrows(0, 1) == 1);
  CHECK(render_quiver_matrix(q) == "[[1,1],[0,1]]");
  const Quiver d = parse_quiver(R"({"vertices": 2, "arrows": [[0,1],[0,0]], "labels": ["x","y"]})");
  CHECK(d.labels() == std::vector<std::string>{"x", "y"});
  CHECK(parse_quiver(render_quiver_document(d)) == d);
  CHECK(parse_quiver(render_quiver_document(d)).labels() == d.labels());
  CHECK_THROWS_AS(parse_quiver("[[1,2]]"), ParseError);
  CHECK_THROWS_AS(parse_quiver("[[-1]]"), ParseError);
  CHECK_THROWS_AS(parse_quiver("[[1.5]]"), ParseError);
  CHECK_THROWS_AS(parse_quiver("[[1]"), ParseError);
  CHECK_THROWS_AS(parse_quiver("[]"), Error);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": 3, "arrows": [[1]]})"), Error);
}
