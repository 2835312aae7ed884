// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/table_io.hpp"

#include <cctype>

#include <json.hpp>

#include "refkac/error.hpp"

namespace refkac {

namespace {

using ojson = nlohmann::ordered_json;

std::string dim_text(std::span<const unsigned> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

ojson coeff_list(const IntPolynomial& p) {
  ojson out = ojson::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPolynomial poly_from_list(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(0, "coefficient list must be an array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError(0, "coefficients must be decimal strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError(0, "bad coefficient");
    coeffs.push_back(v);
  }
  return IntPolynomial(std::move(coeffs));
}

ojson value_fields(ojson entry, const RationalFunction& v) {
  entry["value"] = v.to_string();
  entry["value_num"] = coeff_list(v.numerator());
  entry["value_den"] = coeff_list(v.denominator());
  return entry;
}

ojson partition_json(const PartitionTuple& t) {
  ojson out = ojson::array();
  for (const auto& p : t) out.push_back(p.parts());
  return out;
}

ojson multiplicity_json(const PartitionTuple& t) {
  const MultiplicityMatrix m = tuple_multiplicity_matrix(t);
  ojson out = ojson::array();
  for (std::size_t k = 0; k < m.cols; ++k) {
    ojson col = ojson::array();
    for (std::size_t i = 0; i < m.rows; ++i) col.push_back(m.at(i, k));
    out.push_back(col);
  }
  return out;
}

ojson header(const Quiver& q, unsigned weight) {
  ojson doc;
  doc["quiver"] = q.companion();
  doc["weight_bound"] = weight;
  return doc;
}

ojson kac_entry(const KacTable& t, std::span<const unsigned> alpha) {
  ojson e;
  e["key"] = DimVector(alpha.begin(), alpha.end());
  return value_fields(e, t.at(alpha));
}

ojson refined_entry(const RefinedKacTable& t, const PartitionTuple& lambda) {
  ojson e;
  e["key"] = partition_json(lambda);
  e["multiplicity"] = multiplicity_json(lambda);
  return value_fields(e, t.at(lambda));
}

ojson refined_header(const RefinedKacTable& t) {
  ojson doc = header(t.quiver(), t.weight_bound());
  doc["max_part"] = t.max_part() ? ojson(*t.max_part()) : ojson(nullptr);
  return doc;
}

std::string finish(const ojson& doc) { return doc.dump(2) + "\n"; }

std::string refined_row(const RefinedKacTable& t, const PartitionTuple& lambda) {
  return render_tuple_table(lambda) + " " +
         render_multiplicity(tuple_multiplicity_matrix(lambda)) + ": " + t.at(lambda).to_string();
}

nlohmann::json parse_doc(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed table JSON");
  }
}

RationalFunction value_from_entry(const nlohmann::json& e) {
  return RationalFunction(poly_from_list(e.at("value_num")), poly_from_list(e.at("value_den")));
}

}  // namespace

std::string render_table(const KacTable& table) {
  std::string out;
  for (const auto& alpha : table.keys()) {
    out += dim_text(alpha) + ": " + table.at(alpha).to_string() + "\n";
  }
  return out;
}

std::string render_table(const RefinedKacTable& table) {
  std::string out;
  for (const auto& lambda : table.keys()) out += refined_row(table, lambda) + "\n";
  return out;
}

std::string render_json(const KacTable& table) {
  ojson doc = header(table.quiver(), table.weight_bound());
  doc["entries"] = ojson::array();
  for (const auto& alpha : table.keys()) doc["entries"].push_back(kac_entry(table, alpha));
  return finish(doc);
}

std::string render_json(const RefinedKacTable& table) {
  ojson doc = refined_header(table);
  doc["entries"] = ojson::array();
  for (const auto& lambda : table.keys()) doc["entries"].push_back(refined_entry(table, lambda));
  return finish(doc);
}

std::string render_entry(const KacTable& table, std::span<const unsigned> alpha) {
  return table.at(alpha).to_string() + "\n";
}

std::string render_entry_json(const KacTable& table, std::span<const unsigned> alpha) {
  ojson doc = header(table.quiver(), table.weight_bound());
  doc["entries"] = ojson::array({kac_entry(table, alpha)});
  return finish(doc);
}

std::string render_entry(const RefinedKacTable& table, const PartitionTuple& lambda) {
  return table.at(lambda).to_string() + "\n";
}

std::string render_entry_json(const RefinedKacTable& table, const PartitionTuple& lambda) {
  ojson doc = refined_header(table);
  doc["entries"] = ojson::array({refined_entry(table, lambda)});
  return finish(doc);
}

KacTable kac_table_from_json(std::string_view text) {
  const auto doc = parse_doc(text);
  try {
    Quiver q(doc.at("quiver").get<std::vector<std::vector<unsigned>>>());
    const auto w = doc.at("weight_bound").get<unsigned>();
    std::map<DimVector, RationalFunction> entries;
    for (const auto& e : doc.at("entries")) {
      RationalFunction v = value_from_entry(e);
      if (!v.is_zero()) entries.emplace(e.at("key").get<DimVector>(), std::move(v));
    }
    return KacTable(std::move(q), w, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("table JSON has the wrong shape: ") + e.what());
  }
}

RefinedKacTable refined_table_from_json(std::string_view text) {
  const auto doc = parse_doc(text);
  try {
    Quiver q(doc.at("quiver").get<std::vector<std::vector<unsigned>>>());
    const auto w = doc.at("weight_bound").get<unsigned>();
    std::optional<unsigned> m;
    if (!doc.at("max_part").is_null()) m = doc.at("max_part").get<unsigned>();
    std::map<PartitionTuple, RationalFunction> entries;
    for (const auto& e : doc.at("entries")) {
      PartitionTuple lambda;
      for (const auto& p : e.at("key")) lambda.emplace_back(p.get<std::vector<unsigned>>());
      RationalFunction v = value_from_entry(e);
      if (!v.is_zero()) entries.emplace(std::move(lambda), std::move(v));
    }
    return RefinedKacTable(std::move(q), w, m, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("table JSON has the wrong shape: ") + e.what());
  }
}

DimVector parse_dim_vector_text(std::string_view text) {
  DimVector out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  const bool wrapped = pos < text.size() && text[pos] == '(';
  if (wrapped) ++pos;
  for (;;) {
    skip();
    const std::size_t start = pos;
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (v > 1'000'000) throw ParseError(start, "dimension too large");
      ++pos;
    }
    if (pos == start) throw ParseError(pos, "expected a non-negative integer");
    out.push_back(static_cast<unsigned>(v));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (wrapped) {
    if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
    ++pos;
    skip();
  }
  if (pos != text.size()) throw ParseError(pos, "unexpected character in dimension vector");
  return out;
}

}  // namespace refkac
