// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>

#include "refkac/error.hpp"
#include "refkac/hua.hpp"
#include "refkac/table_io.hpp"

using namespace refkac;

namespace {

RationalFunction rf(std::string_view s) { return parse_rational_function(s); }
PartitionTuple tup(std::string_view s) { return parse_partition_tuple(s); }

const Quiver kA2 = parse_quiver("[[0,1],[0,0]]");
const Quiver kKronecker = parse_quiver("[[0,2],[0,0]]");
const Quiver kLoopedArrow = parse_quiver("[[1,1],[0,1]]");

long tits(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

}  // namespace

TEST_CASE("Kac polynomials of the 2-loop quiver") {
  const auto t = kac_table(Quiver::loops(2), 4);
  CHECK(t.at(DimVector{1}).to_string() == "q^2");
  CHECK(t.at(DimVector{2}).to_string() == "q^5+q^3");
  CHECK(t.at(DimVector{3}).to_string() == "q^10+q^8+q^7+q^6+q^5+q^4");
  CHECK(t.at(DimVector{4}).to_string() ==
        "q^17+q^15+q^14+2q^13+q^12+3q^11+2q^10+4q^9+2q^8+3q^7+q^6+q^5");
}

TEST_CASE("Dynkin A2 has Kac polynomial 1 exactly on its positive roots") {
  const auto t = kac_table(kA2, 5);
  for (const auto& a : t.keys()) {
    const bool root = a == DimVector{1, 0} || a == DimVector{0, 1} || a == DimVector{1, 1};
    CHECK(t.at(a) == RationalFunction(root ? 1 : 0));
  }
}

TEST_CASE("Kronecker quiver: real roots give 1, imaginary roots give q+1") {
  const auto t = kac_table(kKronecker, 5);
  for (const auto& a : t.keys()) {
    const long d = static_cast<long>(a[0]) - static_cast<long>(a[1]);
    RationalFunction want(0);
    if (d == 0) want = rf("q+1");
    if (d == 1 || d == -1) want = RationalFunction(1);
    CHECK_MESSAGE(t.at(a) == want, "alpha=(" << a[0] << "," << a[1] << ")");
  }
}

TEST_CASE("nonzero Kac polynomials are monic of degree 1 - <a,a>") {
  for (const Quiver& q : {Quiver::loops(2), Quiver::loops(3), kLoopedArrow, kKronecker}) {
    const auto t = kac_table(q, 4);
    for (const auto& a : t.keys()) {
      const auto v = t.at(a);
      if (v.is_zero()) continue;
      const auto p = rf_as_polynomial(v);
      REQUIRE(p.has_value());
      CHECK(p->degree() == 1 - tits(q, a));
      CHECK(p->leading() == 1);
    }
  }
}

TEST_CASE("Jordan quiver") {
  const auto t = kac_table(Quiver::loops(1), 5);
  for (unsigned n = 1; n <= 5; ++n) CHECK(t.at(DimVector{n}) == RationalFunction::q());
  const auto r = refined_kac_table(Quiver::loops(1), 5);
  CHECK(r.at(tup("[3]")) == RationalFunction::q());
  CHECK(r.at(tup("[2,1]")).is_zero());
}

TEST_CASE("refined values") {
  const auto t = refined_kac_table(Quiver::loops(2), 4);
  CHECK(t.at(tup("[2,1,1]")).to_string() == "q^11+q^10+2q^9+2q^8+q^7");
  CHECK(t.at(tup("[4]")).to_string() == "q^5");
  const auto a2 = refined_kac_table(kA2, 4);
  CHECK(a2.at(tup("[1,1];[1,1]")).to_string() == "-q^-1+q^-2");
  CHECK(a2.at(tup("[1];[1]")).is_one());
}

TEST_CASE("table lookups enforce bounds") {
  const auto t = kac_table(Quiver::loops(2), 2);
  CHECK_THROWS_AS(t.at(DimVector{3}), Error);
  CHECK_THROWS_AS(t.at(DimVector{0}), Error);
  CHECK_THROWS_AS(t.at(DimVector{1, 1}), Error);
  const auto r = refined_kac_table(Quiver::loops(2), 3, 1);
  CHECK_THROWS_AS(r.at(tup("[2]")), Error);
  CHECK_THROWS_AS(r.at(tup("[]")), Error);
  CHECK(r.keys().size() == 3);
  CHECK(kac_table(Quiver::loops(2), 0).keys().empty());
}

TEST_CASE("P series leading coefficients") {
  const auto p = p_series(Quiver::loops(3), 2);
  CHECK(p.constant_term().is_one());
  CHECK(p.coefficient(std::vector<unsigned>{1}) == rf("q^3/(q-1)"));
}

TEST_CASE("level series equals the level-one series of the enlarged quiver") {
  for (const Quiver& q : {Quiver::loops(2), kLoopedArrow}) {
    const unsigned w = 4;
    const unsigned m = 2;
    const std::size_t n = q.vertex_count();
    const auto refined = q_series(q, w, m);
    const auto flat = q_series(gamma_m(q, m), w, 1);
    std::size_t matched = 0;
    for (const auto& [key, c] : flat.terms()) {
      unsigned weighted = 0;
      for (unsigned k = 1; k <= m; ++k) {
        for (std::size_t i = 0; i < n; ++i) weighted += k * key.exps[level_major_index(n, i, k)];
      }
      if (weighted > w) continue;
      CHECK(refined.coefficient(key.exps) == c);
      ++matched;
    }
    CHECK(matched == refined.size());
  }
}

TEST_CASE("worker count does not change results") {
  const auto serial = render_table(refined_kac_table(kLoopedArrow, 4));
  ::setenv("REFKAC_WORKERS", "4", 1);
  CHECK(worker_count() == 4);
  const auto parallel = render_table(refined_kac_table(kLoopedArrow, 4));
  ::unsetenv("REFKAC_WORKERS");
  CHECK(serial == parallel);
  CHECK(worker_count() == 1);
}
