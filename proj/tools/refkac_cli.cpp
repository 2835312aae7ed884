// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the engine only through refkac.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "refkac/refkac.h"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

void check(refkac_status status) {
  if (status != REFKAC_OK) {
    throw CliError{std::string(refkac_status_string(status)) + ": " + refkac_last_error()};
  }
}

struct StringDeleter {
  void operator()(char* s) const { refkac_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct QuiverDeleter {
  void operator()(refkac_quiver* q) const { refkac_quiver_free(q); }
};
using OwnedQuiver = std::unique_ptr<refkac_quiver, QuiverDeleter>;

struct TableDeleter {
  void operator()(refkac_table* t) const { refkac_table_free(t); }
};
using OwnedTable = std::unique_ptr<refkac_table, TableDeleter>;

struct ReportDeleter {
  void operator()(refkac_report* r) const { refkac_report_free(r); }
};
using OwnedReport = std::unique_ptr<refkac_report, ReportDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct QuiverSource {
  std::string matrix;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* m = cmd->add_option("--matrix", matrix, "companion matrix, e.g. \"[[2]]\"");
    auto* f = cmd->add_option("--file", file, "quiver document");
    m->excludes(f);
  }

  OwnedQuiver load() const {
    if (matrix.empty() == file.empty()) {
      throw CliError{"exactly one of --matrix or --file is required"};
    }
    refkac_quiver* q = nullptr;
    check(matrix.empty() ? refkac_quiver_load(file.c_str(), &q)
                         : refkac_quiver_parse(matrix.c_str(), &q));
    return OwnedQuiver(q);
  }
};

refkac_format parse_format(const std::string& f) {
  return f == "json" ? REFKAC_FORMAT_JSON : REFKAC_FORMAT_TABLE;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot write " + path};
  out << text;
  if (!out) throw CliError{"error writing " + path};
}

void print_table(const refkac_table* table, const std::string& key, refkac_format format) {
  char* out = nullptr;
  if (key.empty()) {
    check(refkac_table_render(table, format, &out));
  } else {
    check(refkac_table_render_entry(table, key.c_str(), format, &out));
  }
  std::cout << take(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac polynomials and their refinements by partition tuples"};
  app.require_subcommand(1);
  app.set_version_flag("--version", refkac_version());

  std::string format = "table";
  unsigned weight = 3;
  std::string report_path;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
  };

  QuiverSource kac_src;
  std::string alpha;
  auto* kac = app.add_subcommand("kac", "Kac polynomials up to a weight bound");
  kac_src.attach(kac);
  kac->add_option("--weight", weight, "weight bound (default 3)");
  kac->add_option("--alpha", alpha, "single dimension vector, e.g. 1,2");
  add_format(kac);

  QuiverSource ref_src;
  std::optional<unsigned> max_part;
  std::string lambda;
  auto* refined = app.add_subcommand("refined", "refined Kac functions indexed by partition tuples");
  ref_src.attach(refined);
  refined->add_option("--weight", weight, "weight bound (default 3)");
  refined->add_option("--max-part", max_part, "largest allowed part (default: weight bound)");
  refined->add_option("--lambda", lambda, "single partition tuple, e.g. \"[2,1];[1]\"");
  add_format(refined);

  QuiverSource gm_src;
  unsigned m = 2;
  auto* gm = app.add_subcommand("gamma-m", "companion matrix of the level-m quiver");
  gm_src.attach(gm);
  gm->add_option("--m", m, "number of levels (default 2)");
  add_format(gm);

  std::string tau_lambda;
  unsigned tau_levels = 0;
  auto* tau = app.add_subcommand("tau-m", "image of a partition tuple under tau_m");
  tau->add_option("--lambda", tau_lambda, "partition tuple")->required();
  tau->add_option("--m", tau_levels, "bound on parts")->required();

  QuiverSource ser_src;
  std::string kind = "P";
  std::optional<unsigned> levels;
  auto* series = app.add_subcommand("series", "dump the truncated generating series");
  ser_src.attach(series);
  series->add_option("--weight", weight, "weight bound (default 3)");
  series->add_option("--kind", kind, "P (by dimension) or Q (refined)")
      ->check(CLI::IsMember({"P", "Q", "p", "q"}));
  series->add_option("--m", levels, "levels of the refined series (default: weight bound)");

  std::string suite = "all";
  std::uint64_t seed = 20260101;
  std::optional<unsigned> verify_weight;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or \"all\"");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--weight", verify_weight, "override each suite's weight bound");
  verify->add_option("--report", report_path, "write a JSON report to this file");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    const refkac_format fmt = parse_format(format);

    if (*kac) {
      auto q = kac_src.load();
      refkac_table* t = nullptr;
      check(refkac_kac_table(q.get(), weight, &t));
      OwnedTable table(t);
      print_table(table.get(), alpha, fmt);
      return 0;
    }

    if (*refined) {
      auto q = ref_src.load();
      refkac_table* t = nullptr;
      const unsigned bound = max_part.value_or(weight);
      if (bound == 0 && weight > 0) throw CliError{"--max-part must be at least 1"};
      check(refkac_refined_table(q.get(), weight, bound == 0 ? REFKAC_UNBOUNDED : bound, &t));
      OwnedTable table(t);
      print_table(table.get(), lambda, fmt);
      return 0;
    }

    if (*gm) {
      auto q = gm_src.load();
      refkac_quiver* g = nullptr;
      check(refkac_quiver_gamma_m(q.get(), m, &g));
      OwnedQuiver big(g);
      char* out = nullptr;
      if (fmt == REFKAC_FORMAT_JSON) {
        check(refkac_quiver_render_document(big.get(), &out));
        std::cout << take(out) << "\n";
        return 0;
      }
      std::size_t n = 0;
      check(refkac_quiver_vertex_count(big.get(), &n));
      std::string order = "order:";
      for (std::size_t i = 0; i < n; ++i) {
        check(refkac_quiver_label(big.get(), i, &out));
        order += " " + take(out);
      }
      check(refkac_quiver_render(big.get(), &out));
      std::cout << order << "\n" << take(out) << "\n";
      return 0;
    }

    if (*tau) {
      char* out = nullptr;
      check(refkac_tau_m(tau_lambda.c_str(), tau_levels, &out));
      std::cout << take(out) << "\n";
      return 0;
    }

    if (*series) {
      auto q = ser_src.load();
      const bool refined_kind = kind == "Q" || kind == "q";
      char* out = nullptr;
      check(refkac_series_dump(q.get(), refined_kind ? REFKAC_SERIES_Q : REFKAC_SERIES_P, weight,
                               levels.value_or(REFKAC_UNBOUNDED), &out));
      std::cout << take(out);
      return 0;
    }

    if (*verify) {
      if (verify_weight && *verify_weight == 0) throw CliError{"--weight must be at least 1"};
      refkac_report* r = nullptr;
      check(refkac_verify(suite.c_str(), seed, verify_weight.value_or(0), &r));
      OwnedReport report(r);
      char* out = nullptr;
      check(refkac_report_render(report.get(), fmt, &out));
      std::cout << take(out);
      if (!report_path.empty()) {
        check(refkac_report_render(report.get(), REFKAC_FORMAT_JSON, &out));
        write_file(report_path, take(out));
      }
      int passed = 0;
      check(refkac_report_passed(report.get(), &passed));
      return passed ? 0 : kExitFailedChecks;
    }
  } catch (const CliError& e) {
    std::cerr << "refkac: " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
