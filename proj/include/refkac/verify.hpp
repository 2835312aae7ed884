// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "refkac/quiver.hpp"
#include "refkac/series.hpp"

namespace refkac {

struct CaseResult {
  std::string input;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CheckReport {
  std::string name;
  std::vector<CaseResult> cases;
  std::string error;  // set when the check itself could not run

  bool passed() const;
  std::size_t failures() const;
  void add(std::string input, std::string expected, std::string actual, bool pass);
};

struct VerifyReport {
  std::vector<CheckReport> checks;

  bool passed() const;
  // One line per check plus one per failing case.
  std::string summary() const;
  // {"passed": bool, "checks": [{name, status, error?, cases: [{input, expected,
  // actual, pass}]}]}
  std::string to_json() const;
};

constexpr std::uint64_t kDefaultSeed = 20260101;

// Table 1-4 entries recomputed and compared with the embedded golden data.
CheckReport check_tables();
// A(alpha) equals the sum of refined values over Lambda_alpha.
CheckReport check_sum_identity(const Quiver& quiver, unsigned weight);
// A(lambda) = A_{Gamma_m}(tau_m(lambda)) for parts <= m, weight <= W.
CheckReport check_level_transport(const Quiver& quiver, unsigned m, unsigned weight);
// The four g-loop closed forms at a concrete g, against both sides.
CheckReport check_gloop_closed_forms(unsigned g);
// Enough-loop quivers must give non-negative integer polynomials; other
// quivers only have the shape of each value recorded.
CheckReport check_positivity(const Quiver& quiver, unsigned weight);
// One loop: A([n]) = q and every other refined value vanishes.
CheckReport check_jordan(unsigned weight);
CheckReport check_heine(unsigned weight);
CheckReport check_single_level(const Quiver& quiver, unsigned weight);
CheckReport check_random_transport(unsigned trials, unsigned weight, std::uint64_t seed);
// plethystic_log against oracle_log on named series, then on random ones.
CheckReport check_oracle_log(const std::vector<std::pair<std::string, TruncatedSeries>>& series);
CheckReport check_oracle_random(unsigned trials, std::uint64_t seed);
CheckReport check_exp_log_roundtrip(unsigned trials, std::uint64_t seed);

// Solves Exp(L) = f weight by weight; independent of plethystic_log.
TruncatedSeries oracle_log(const TruncatedSeries& f);

// Random series without constant term: up to max_terms terms with small
// rational-function coefficients.
TruncatedSeries random_series(std::mt19937_64& rng, const Grading& grading, unsigned max_terms);

// Series used by the default suites, named for reporting.
std::vector<std::pair<std::string, TruncatedSeries>> pipeline_series();

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<unsigned> weight;  // overrides each suite's default bound
};

const std::vector<std::string>& suite_names();
// Throws invalid_argument for unknown names; "all" runs every suite.
VerifyReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace refkac
