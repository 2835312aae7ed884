// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 iff
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "refkac/hua.hpp"
#include "refkac/table_io.hpp"
#include "refkac/verify.hpp"

#ifndef REFKAC_GOLDEN_DIR
#error "REFKAC_GOLDEN_DIR must point at data/golden"
#endif

using namespace refkac;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  void absorb(const CheckReport& r) {
    if (r.passed()) return;
    std::string why = r.name;
    if (!r.error.empty()) why += ": " + r.error;
    for (const auto& c : r.cases) {
      if (!c.pass) {
        why += ": " + c.input + " expected " + c.expected + " got " + c.actual;
        break;
      }
    }
    expect(false, why);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.expect(false, "took " + std::to_string(secs) + "s, limit " + std::to_string(limit_seconds) + "s");
  }
  if (!out.pass) ++failures;
  std::printf("%s %2d %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.pass ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

struct GoldenRow {
  std::string table, quiver, key, multiplicity, value;
};

std::vector<GoldenRow> golden(const std::string& file) {
  std::ifstream in(std::string(REFKAC_GOLDEN_DIR) + "/" + file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    GoldenRow r;
    std::getline(ss, r.table, '\t');
    std::getline(ss, r.quiver, '\t');
    std::getline(ss, r.key, '\t');
    std::getline(ss, r.multiplicity, '\t');
    std::getline(ss, r.value, '\t');
    rows.push_back(r);
  }
  return rows;
}

void compare_kac(Outcome& out, const std::vector<GoldenRow>& rows, unsigned weight) {
  std::map<std::string, KacTable> cache;
  for (const auto& r : rows) {
    auto it = cache.find(r.quiver);
    if (it == cache.end()) it = cache.emplace(r.quiver, kac_table(parse_quiver(r.quiver), weight)).first;
    const auto got = it->second.at(parse_dim_vector_text(r.key)).to_string();
    out.expect(got == r.value, r.quiver + " " + r.key + ": expected " + r.value + " got " + got);
  }
}

void compare_refined(Outcome& out, const std::vector<GoldenRow>& rows, unsigned weight) {
  std::map<std::string, RefinedKacTable> cache;
  for (const auto& r : rows) {
    auto it = cache.find(r.quiver);
    if (it == cache.end()) {
      it = cache.emplace(r.quiver, refined_kac_table(parse_quiver(r.quiver), weight)).first;
    }
    const auto lambda = parse_partition_tuple(r.key);
    const auto got = it->second.at(lambda).to_string();
    out.expect(got == r.value, r.quiver + " " + r.key + ": expected " + r.value + " got " + got);
    const auto mult = render_multiplicity(tuple_multiplicity_matrix(lambda));
    out.expect(mult == r.multiplicity,
               r.key + ": multiplicity expected " + r.multiplicity + " got " + mult);
  }
}

std::size_t term_count(const RationalFunction& r) {
  std::size_t n = 0;
  for (const auto& c : r.numerator().coeffs()) n += c != 0;
  return n;
}

}  // namespace

int main() {
  const std::uint64_t seed = kDefaultSeed;

  criterion(1, "Kac polynomials of the 2-loop quiver, n=1..4", 60, [](Outcome& out) {
    const auto rows = golden("two_loop_kac.tsv");
    out.expect(rows.size() == 4, "expected 4 rows");
    compare_kac(out, rows, 4);
    const auto a4 = kac_table(Quiver::loops(2), 4).at(DimVector{4});
    out.expect(term_count(a4) == 12, "n=4 should have 12 terms");
    out.expect(a4.numerator().coeff(9) == 4, "n=4 should have coefficient 4 on q^9");
  });

  criterion(2, "refined values of the 2-loop quiver through weight 4", 60, [](Outcome& out) {
    const auto rows = golden("two_loop_refined.tsv");
    out.expect(rows.size() == 11, "expected 11 rows");
    compare_refined(out, rows, 4);
    const auto t = refined_kac_table(Quiver::loops(2), 4);
    out.expect(t.at(parse_partition_tuple("[2,1,1]")).to_string() == "q^11+q^10+2q^9+2q^8+q^7",
               "[2,1,1]");
  });

  criterion(3, "two-vertex quivers, Kac and refined values", 120, [](Outcome& out) {
    const auto kac_rows = golden("two_vertex_kac.tsv");
    const auto ref_rows = golden("two_vertex_refined.tsv");
    out.expect(kac_rows.size() == 16, "expected 16 Kac rows");
    out.expect(ref_rows.size() == 30, "expected 30 refined rows");
    compare_kac(out, kac_rows, 4);
    compare_refined(out, ref_rows, 4);
    const auto a2 = refined_kac_table(parse_quiver("[[0,1],[0,0]]"), 4);
    out.expect(a2.at(parse_partition_tuple("[1,1];[1,1]")).to_string() == "-q^-1+q^-2",
               "([1,1],[1,1])");
  });

  criterion(4, "fiber sums of refined values equal Kac polynomials", 0, [](Outcome& out) {
    for (const char* m : {"[[2]]", "[[1,1],[0,1]]", "[[0,1],[0,0]]"}) {
      out.absorb(check_sum_identity(parse_quiver(m), 4));
    }
  });

  criterion(5, "level-2 transport and g-loop closed forms, g=1..3", 0, [](Outcome& out) {
    for (unsigned g = 1; g <= 3; ++g) {
      const auto start = std::chrono::steady_clock::now();
      out.absorb(check_level_transport(Quiver::loops(g), 2, 4));
      out.absorb(check_gloop_closed_forms(g));
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out.expect(secs < 120, "g=" + std::to_string(g) + " exceeded 120s");
    }
  });

  criterion(6, "Jordan quiver through weight 6", 0,
            [](Outcome& out) { out.absorb(check_jordan(6)); });

  criterion(7, "refined values are polynomials with non-negative coefficients", 0,
            [](Outcome& out) {
              for (const char* m : {"[[1]]", "[[2]]", "[[3]]", "[[1,1],[0,1]]"}) {
                out.absorb(check_positivity(parse_quiver(m), 4));
              }
            });

  criterion(8, "Heine identities to weight 8", 5,
            [](Outcome& out) { out.absorb(check_heine(8)); });

  criterion(9, "plethystic Log agrees with the slow oracle", 0, [&](Outcome& out) {
    out.absorb(check_oracle_log(pipeline_series()));
    const auto random = check_oracle_random(50, seed);
    out.expect(random.cases.size() == 50, "expected 50 random trials");
    out.absorb(random);
  });

  criterion(10, "Exp/Log round trips", 0, [&](Outcome& out) {
    const auto r = check_exp_log_roundtrip(50, seed);
    out.expect(r.cases.size() == 100, "expected 50+50 trials");
    out.absorb(r);
  });

  criterion(11, "level-m quiver matches the expanded quadratic form", 0, [&](Outcome& out) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> size(1, 3);
    std::uniform_int_distribution<unsigned> entry(0, 3);
    std::uniform_int_distribution<unsigned> loop(1, 3);
    for (int t = 0; t < 30; ++t) {
      const unsigned n = size(rng);
      const unsigned m = size(rng);
      oracle::Matrix c(n, std::vector<unsigned>(n));
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) c[i][j] = i == j ? loop(rng) : entry(rng);
      }
      const Quiver q(c);
      out.expect(gamma_m(q, m).companion() == oracle::gamma_quadratic_form(c, m),
                 "trial " + std::to_string(t) + " " + render_quiver_matrix(q) +
                     " m=" + std::to_string(m));
    }
  });

  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
