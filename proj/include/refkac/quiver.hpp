// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refkac {

// Dimension vector: one non-negative entry per vertex.
using DimVector = std::vector<unsigned>;

// A finite quiver described by its companion matrix: entry (i, j) counts the
// arrows from vertex i to vertex j. Loops sit on the diagonal.
class Quiver {
public:
  explicit Quiver(std::vector<std::vector<unsigned>> companion,
                  std::vector<std::string> labels = {});

  static Quiver loops(unsigned g) {
    return Quiver(std::vector<std::vector<unsigned>>{std::vector<unsigned>{g}});
  }

  std::size_t vertex_count() const { return companion_.size(); }
  unsigned arrows(std::size_t from, std::size_t to) const { return companion_[from][to]; }
  const std::vector<std::vector<unsigned>>& companion() const { return companion_; }
  // Display labels; defaults to "v1", "v2", ...
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.companion_ == b.companion_; }

private:
  std::vector<std::vector<unsigned>> companion_;
  std::vector<std::string> labels_;
};

// <a, b> = a (I - C) b^t
long euler_form(const Quiver& quiver, std::span<const unsigned> a, std::span<const unsigned> b);

// Exponent e with |R(alpha, F_q)| = q^e, i.e. alpha C alpha^t.
long rep_space_exponent(const Quiver& quiver, std::span<const unsigned> alpha);

bool has_enough_loops(const Quiver& quiver);

// Index of the first vertex without a loop, or vertex_count() if none.
std::size_t first_loop_free_vertex(const Quiver& quiver);

// The enlarged quiver on n*m vertices v_i^k, ordered level-major (k first,
// then i). Its companion matrix is the upper-triangular matrix of the quadratic
// form sum_k a^k (a^k)^t + b^k (C - I) (b^k)^t with b^k = sum_{j >= k} a^j.
// Vertex v_i^k sits at index (k - 1) * n + i and is labelled "v{i}^{k}"
// (1-based). Requires a loop at every vertex.
Quiver gamma_m(const Quiver& quiver, unsigned m);

// Position of v_i^k (0-based i, 1-based k) in gamma_m's vertex order.
inline std::size_t level_major_index(std::size_t n, std::size_t i, unsigned k) {
  return (k - 1) * n + i;
}

// "[[1,1],[0,1]]" style matrix text.
Quiver parse_quiver_matrix(std::string_view text);
// JSON document {"vertices": n, "arrows": [[...], ...], "labels": [...]}; the
// labels field is optional.
Quiver parse_quiver_document(std::string_view text);
// Accepts either form.
Quiver parse_quiver(std::string_view text);

std::string render_quiver_matrix(const Quiver& quiver);
std::string render_quiver_document(const Quiver& quiver);

}  // namespace refkac
