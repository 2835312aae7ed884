// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/quiver.hpp"

#include <algorithm>

#include <json.hpp>

#include "refkac/error.hpp"

namespace refkac {

namespace {

void check_length(const Quiver& quiver, std::size_t len) {
  if (len != quiver.vertex_count()) {
    throw Error(ErrorCode::invalid_argument,
                "dimension vector has length " + std::to_string(len) + ", quiver has " +
                    std::to_string(quiver.vertex_count()) + " vertices");
  }
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

}  // namespace

Quiver::Quiver(std::vector<std::vector<unsigned>> companion, std::vector<std::string> labels)
    : companion_(std::move(companion)), labels_(std::move(labels)) {
  if (companion_.empty()) throw Error(ErrorCode::invalid_argument, "quiver needs at least one vertex");
  for (const auto& row : companion_) {
    if (row.size() != companion_.size()) {
      throw Error(ErrorCode::invalid_argument, "companion matrix is not square");
    }
  }
  if (labels_.empty()) labels_ = default_labels(companion_.size());
  if (labels_.size() != companion_.size()) {
    throw Error(ErrorCode::invalid_argument, "label count does not match vertex count");
  }
}

long euler_form(const Quiver& quiver, std::span<const unsigned> a, std::span<const unsigned> b) {
  check_length(quiver, a.size());
  check_length(quiver, b.size());
  long acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    acc += static_cast<long>(a[i]) * b[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc -= static_cast<long>(quiver.arrows(i, j)) * a[i] * b[j];
    }
  }
  return acc;
}

long rep_space_exponent(const Quiver& quiver, std::span<const unsigned> alpha) {
  check_length(quiver, alpha.size());
  long acc = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      acc += static_cast<long>(quiver.arrows(i, j)) * alpha[i] * alpha[j];
    }
  }
  return acc;
}

std::size_t first_loop_free_vertex(const Quiver& quiver) {
  for (std::size_t i = 0; i < quiver.vertex_count(); ++i) {
    if (quiver.arrows(i, i) == 0) return i;
  }
  return quiver.vertex_count();
}

bool has_enough_loops(const Quiver& quiver) {
  return first_loop_free_vertex(quiver) == quiver.vertex_count();
}

Quiver gamma_m(const Quiver& quiver, unsigned m) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
  if (const auto v = first_loop_free_vertex(quiver); v != quiver.vertex_count()) {
    throw Error(ErrorCode::precondition,
                "vertex " + quiver.labels()[v] + " has no loop; gamma_m needs a loop at every vertex");
  }
  const std::size_t n = quiver.vertex_count();
  const std::size_t size = n * m;
  std::vector<std::vector<unsigned>> out(size, std::vector<unsigned>(size, 0));
  std::vector<std::string> labels(size);
  for (unsigned a = 1; a <= m; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = level_major_index(n, i, a);
      labels[row] = "v" + std::to_string(i + 1) + "^" + std::to_string(a);
      for (unsigned b = a; b <= m; ++b) {
        for (std::size_t s = 0; s < n; ++s) {
          const std::size_t col = level_major_index(n, s, b);
          if (col < row) continue;
          if (col == row) {
            out[row][col] = 1 + (quiver.arrows(i, i) - 1) * a;
            continue;
          }
          // D = C - I; the coefficient of x_i^a x_s^b collects d_is and d_si.
          const unsigned d_is = quiver.arrows(i, s) - (i == s ? 1 : 0);
          const unsigned d_si = quiver.arrows(s, i) - (i == s ? 1 : 0);
          out[row][col] = (d_is + d_si) * std::min(a, b);
        }
      }
    }
  }
  return Quiver(std::move(out), std::move(labels));
}

// ---------------------------------------------------------------------------
// text formats

namespace {

using nlohmann::json;

std::vector<std::vector<unsigned>> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(0, "companion matrix must be a non-empty array of rows");
  }
  std::vector<std::vector<unsigned>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array()) throw ParseError(0, "row " + std::to_string(r) + " is not an array");
    if (row.size() != j.size()) {
      throw ParseError(0, "companion matrix is not square (row " + std::to_string(r) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(j.size()) + ")");
    }
    std::vector<unsigned> vals;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const json& e = row[c];
      if (!e.is_number_integer()) {
        throw ParseError(0, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") is not an integer");
      }
      if (e.get<long long>() < 0) {
        throw ParseError(0, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") is negative");
      }
      vals.push_back(e.get<unsigned>());
    }
    out.push_back(std::move(vals));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "malformed quiver text");
  }
}

}  // namespace

Quiver parse_quiver_matrix(std::string_view text) {
  return Quiver(matrix_from_json(parse_json(text)));
}

Quiver parse_quiver_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError(0, "quiver document must be an object");
  if (!doc.contains("arrows")) throw ParseError(0, "quiver document lacks 'arrows'");
  auto matrix = matrix_from_json(doc.at("arrows"));
  if (doc.contains("vertices")) {
    const json& v = doc.at("vertices");
    if (!v.is_number_integer() || v.get<long long>() != static_cast<long long>(matrix.size())) {
      throw ParseError(0, "'vertices' does not match the size of 'arrows'");
    }
  } else {
    throw ParseError(0, "quiver document lacks 'vertices'");
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array() || l.size() != matrix.size()) {
      throw ParseError(0, "'labels' must list one string per vertex");
    }
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError(0, "'labels' must list one string per vertex");
      labels.push_back(s.get<std::string>());
    }
  }
  return Quiver(std::move(matrix), std::move(labels));
}

Quiver parse_quiver(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_quiver_document(text);
  return parse_quiver_matrix(text);
}

std::string render_quiver_matrix(const Quiver& quiver) {
  std::string out = "[";
  for (std::size_t i = 0; i < quiver.vertex_count(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < quiver.vertex_count(); ++j) {
      if (j) out += ',';
      out += std::to_string(quiver.arrows(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::string render_quiver_document(const Quiver& quiver) {
  json doc;
  doc["vertices"] = quiver.vertex_count();
  doc["arrows"] = quiver.companion();
  doc["labels"] = quiver.labels();
  return doc.dump();
}

}  // namespace refkac
