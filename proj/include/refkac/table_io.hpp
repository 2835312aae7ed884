// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "refkac/hua.hpp"

namespace refkac {

// Text tables list every in-bound key, zeros included, one "key: value" row
// each. Kac rows look like "(1,2): q^3+q^2"; refined rows also show the
// multiplicity vectors, "([2],[1]) ((0,1),(1,0)): q^2".
std::string render_table(const KacTable& table);
std::string render_table(const RefinedKacTable& table);

// JSON documents:
//   {"quiver": [[...]], "weight_bound": W, ["max_part": m|null,]
//    "entries": [{"key": ..., ["multiplicity": ...,] "value": "q^2",
//                 "value_num": ["0","0","1"], "value_den": ["1"]}]}
// Coefficient lists are decimal strings, lowest power of q first.
std::string render_json(const KacTable& table);
std::string render_json(const RefinedKacTable& table);

// Single-entry variants used for --alpha / --lambda queries.
std::string render_entry(const KacTable& table, std::span<const unsigned> alpha);
std::string render_entry_json(const KacTable& table, std::span<const unsigned> alpha);
std::string render_entry(const RefinedKacTable& table, const PartitionTuple& lambda);
std::string render_entry_json(const RefinedKacTable& table, const PartitionTuple& lambda);

// Rebuild tables from render_json output.
KacTable kac_table_from_json(std::string_view text);
RefinedKacTable refined_table_from_json(std::string_view text);

// "1,2" or "(1,2)".
DimVector parse_dim_vector_text(std::string_view text);

}  // namespace refkac
