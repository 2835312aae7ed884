// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/refkac.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <variant>

#include "refkac/error.hpp"
#include "refkac/hua.hpp"
#include "refkac/table_io.hpp"
#include "refkac/verify.hpp"

struct refkac_quiver {
  refkac::Quiver value;
};

struct refkac_table {
  std::variant<refkac::KacTable, refkac::RefinedKacTable> value;
};

struct refkac_report {
  refkac::VerifyReport value;
};

namespace {

thread_local std::string last_error;

refkac_status fail(refkac_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

refkac_status status_of(refkac::ErrorCode code) {
  switch (code) {
    case refkac::ErrorCode::invalid_argument: return REFKAC_ERR_INVALID_ARGUMENT;
    case refkac::ErrorCode::parse_error: return REFKAC_ERR_PARSE;
    case refkac::ErrorCode::precondition: return REFKAC_ERR_PRECONDITION;
    case refkac::ErrorCode::division_by_zero: return REFKAC_ERR_DIVISION_BY_ZERO;
    case refkac::ErrorCode::out_of_range: return REFKAC_ERR_OUT_OF_RANGE;
  }
  return REFKAC_ERR_INTERNAL;
}

// Every entry point funnels through here so no exception crosses the C
// boundary.
template <typename Fn>
refkac_status guard(Fn&& fn) {
  try {
    fn();
    return REFKAC_OK;
  } catch (const refkac::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(REFKAC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(REFKAC_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw refkac::Error(refkac::ErrorCode::invalid_argument, std::string(what) + " is null");
}

std::optional<unsigned> bound_or_none(unsigned v) {
  return v == REFKAC_UNBOUNDED ? std::nullopt : std::optional<unsigned>(v);
}

}  // namespace

extern "C" {

const char* refkac_version(void) { return "0.1.0"; }

const char* refkac_status_string(refkac_status status) {
  switch (status) {
    case REFKAC_OK: return "ok";
    case REFKAC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case REFKAC_ERR_PARSE: return "parse error";
    case REFKAC_ERR_PRECONDITION: return "precondition violated";
    case REFKAC_ERR_DIVISION_BY_ZERO: return "division by zero";
    case REFKAC_ERR_OUT_OF_RANGE: return "out of range";
    case REFKAC_ERR_IO: return "i/o error";
    case REFKAC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* refkac_last_error(void) { return last_error.c_str(); }

void refkac_string_free(char* s) { std::free(s); }

refkac_status refkac_quiver_parse(const char* text, refkac_quiver** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new refkac_quiver{refkac::parse_quiver(text)};
  });
}

refkac_status refkac_quiver_load(const char* path, refkac_quiver** out) {
  require(path, "path");
  std::ifstream in(path);
  if (!in) return fail(REFKAC_ERR_IO, std::string("cannot open ") + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return refkac_quiver_parse(text.c_str(), out);
}

void refkac_quiver_free(refkac_quiver* quiver) { delete quiver; }

refkac_status refkac_quiver_vertex_count(const refkac_quiver* quiver, size_t* out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = quiver->value.vertex_count();
  });
}

refkac_status refkac_quiver_label(const refkac_quiver* quiver, size_t i, char** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    const auto& labels = quiver->value.labels();
    if (i >= labels.size()) {
      throw refkac::Error(refkac::ErrorCode::out_of_range, "vertex index out of range");
    }
    *out = dup_string(labels[i]);
  });
}

refkac_status refkac_quiver_has_enough_loops(const refkac_quiver* quiver, int* out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = refkac::has_enough_loops(quiver->value) ? 1 : 0;
  });
}

refkac_status refkac_quiver_render(const refkac_quiver* quiver, char** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = dup_string(refkac::render_quiver_matrix(quiver->value));
  });
}

refkac_status refkac_quiver_render_document(const refkac_quiver* quiver, char** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = dup_string(refkac::render_quiver_document(quiver->value));
  });
}

refkac_status refkac_quiver_gamma_m(const refkac_quiver* quiver, unsigned m, refkac_quiver** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = new refkac_quiver{refkac::gamma_m(quiver->value, m)};
  });
}

refkac_status refkac_euler_form(const refkac_quiver* quiver, const unsigned* a, const unsigned* b,
                                size_t len, long* out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    if (len > 0) {
      require(a, "a");
      require(b, "b");
    }
    *out = refkac::euler_form(quiver->value, std::span<const unsigned>(a, len),
                              std::span<const unsigned>(b, len));
  });
}

refkac_status refkac_kac_table(const refkac_quiver* quiver, unsigned weight, refkac_table** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = new refkac_table{refkac::kac_table(quiver->value, weight)};
  });
}

refkac_status refkac_refined_table(const refkac_quiver* quiver, unsigned weight, unsigned max_part,
                                   refkac_table** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    *out = new refkac_table{
        refkac::refined_kac_table(quiver->value, weight, bound_or_none(max_part))};
  });
}

void refkac_table_free(refkac_table* table) { delete table; }

refkac_status refkac_table_size(const refkac_table* table, size_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = std::visit([](const auto& t) { return t.keys().size(); }, table->value);
  });
}

namespace {

struct EntryRenderer {
  std::string_view key;
  refkac_format format;

  std::string operator()(const refkac::KacTable& t) const {
    const auto alpha = refkac::parse_dim_vector_text(key);
    return format == REFKAC_FORMAT_JSON ? refkac::render_entry_json(t, alpha)
                                        : refkac::render_entry(t, alpha);
  }
  std::string operator()(const refkac::RefinedKacTable& t) const {
    const auto lambda = refkac::parse_partition_tuple(key);
    return format == REFKAC_FORMAT_JSON ? refkac::render_entry_json(t, lambda)
                                        : refkac::render_entry(t, lambda);
  }
};

}  // namespace

refkac_status refkac_table_lookup(const refkac_table* table, const char* key, char** value) {
  return guard([&] {
    require(table, "table");
    require(key, "key");
    require(value, "value");
    std::string s = std::visit(EntryRenderer{key, REFKAC_FORMAT_TABLE}, table->value);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    *value = dup_string(s);
  });
}

refkac_status refkac_table_render(const refkac_table* table, refkac_format format, char** out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = dup_string(std::visit(
        [&](const auto& t) {
          return format == REFKAC_FORMAT_JSON ? refkac::render_json(t) : refkac::render_table(t);
        },
        table->value));
  });
}

refkac_status refkac_table_render_entry(const refkac_table* table, const char* key,
                                        refkac_format format, char** out) {
  return guard([&] {
    require(table, "table");
    require(key, "key");
    require(out, "out");
    *out = dup_string(std::visit(EntryRenderer{key, format}, table->value));
  });
}

refkac_status refkac_tau_m(const char* lambda, unsigned m, char** out) {
  return guard([&] {
    require(lambda, "lambda");
    require(out, "out");
    const auto image = refkac::tau_m(refkac::parse_partition_tuple(lambda), m);
    *out = dup_string(refkac::render_partition_tuple(image));
  });
}

refkac_status refkac_series_dump(const refkac_quiver* quiver, refkac_series_kind kind,
                                 unsigned weight, unsigned max_level, char** out) {
  return guard([&] {
    require(quiver, "quiver");
    require(out, "out");
    const refkac::TruncatedSeries s =
        kind == REFKAC_SERIES_P ? refkac::p_series(quiver->value, weight)
                                : refkac::q_series(quiver->value, weight, bound_or_none(max_level));
    *out = dup_string(s.dump());
  });
}

refkac_status refkac_suite_names(char** out) {
  return guard([&] {
    require(out, "out");
    std::string s;
    for (const auto& n : refkac::suite_names()) s += n + "\n";
    *out = dup_string(s);
  });
}

refkac_status refkac_verify(const char* suite, uint64_t seed, unsigned weight, refkac_report** out) {
  return guard([&] {
    require(out, "out");
    refkac::SuiteOptions options;
    options.seed = seed;
    if (weight != 0) options.weight = weight;
    *out = new refkac_report{refkac::run_suite(suite ? suite : "all", options)};
  });
}

void refkac_report_free(refkac_report* report) { delete report; }

refkac_status refkac_report_passed(const refkac_report* report, int* out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    *out = report->value.passed() ? 1 : 0;
  });
}

refkac_status refkac_report_render(const refkac_report* report, refkac_format format, char** out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(format == REFKAC_FORMAT_JSON ? report->value.to_json()
                                                   : report->value.summary());
  });
}

}  // extern "C"
