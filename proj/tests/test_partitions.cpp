// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "refkac/error.hpp"
#include "refkac/partitions.hpp"

using namespace refkac;

namespace {

PartitionTuple tup(std::string_view s) { return parse_partition_tuple(s); }

}  // namespace

TEST_CASE("partition validation") {
  CHECK_NOTHROW(Partition({3, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(Partition({3, 1, 1}).weight() == 5);
  CHECK(Partition().weight() == 0);
  CHECK(Partition::ones(3).parts() == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("multiplicity vectors") {
  CHECK(multiplicity_vector(Partition({2, 1, 1})) == std::vector<unsigned>{2, 1});
  CHECK(multiplicity_vector(Partition({4})) == std::vector<unsigned>{0, 0, 0, 1});
  CHECK(multiplicity_vector(Partition()).empty());
  const std::vector<unsigned> m{2, 0, 1};
  CHECK(Partition::from_multiplicities(m) == Partition({3, 1, 1}));
  for (unsigned w = 0; w <= 8; ++w) {
    for (const auto& p : partitions_of(w)) {
      CHECK(Partition::from_multiplicities(multiplicity_vector(p)) == p);
    }
  }
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  const auto p = oracle::partition_counts(15);
  for (unsigned w = 0; w <= 15; ++w) CHECK(partitions_of(w).size() == static_cast<std::size_t>(p[w]));
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("tuple enumeration") {
  const auto all = enumerate_tuples(2, 2);
  REQUIRE(all.size() == 1 + 2 + 5);
  CHECK(all[0] == PartitionTuple{Partition(), Partition()});
  CHECK(render_tuple_table(all[1]) == "([1],[0])");
  CHECK(render_tuple_table(all[2]) == "([0],[1])");
  CHECK(render_tuple_table(all[3]) == "([2],[0])");
  CHECK(render_tuple_table(all[4]) == "([1,1],[0])");
  CHECK(render_tuple_table(all[5]) == "([1],[1])");
  std::set<PartitionTuple> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  for (const auto& t : enumerate_tuples(3, 4, 2)) CHECK(tuple_largest_part(t) <= 2);
}

TEST_CASE("fibers partition the enumeration") {
  const DimVector alpha{2, 2};
  const auto fiber = lambda_fiber(alpha);
  CHECK(fiber.size() == 4);
  for (const auto& t : fiber) CHECK(tuple_weights(t) == alpha);
  CHECK(lambda_fiber(alpha, 1).size() == 1);
}

TEST_CASE("multiplicity matrices round-trip") {
  const auto t = tup("[2,1];[1]");
  const auto m = tuple_multiplicity_matrix(t);
  CHECK(m.rows == 2);
  CHECK(m.cols == 2);
  CHECK(m.entries == std::vector<unsigned>{1, 1, 1, 0});
  CHECK(tuple_from_multiplicity_matrix(m) == t);
  CHECK(render_multiplicity(m) == "((1,1),(1,0))");
  CHECK(render_multiplicity(tuple_multiplicity_matrix(tup("[2,1]"))) == "(1,1)");
}

TEST_CASE("tau_m is level-major and injective") {
  CHECK(render_partition_tuple(tau_m(tup("[2,1];[1]"), 2)) == "[1];[1];[1];[]");
  CHECK(render_partition_tuple(tau_m(tup("[2,2,1]"), 2)) == "[1];[1,1]");
  CHECK(tau_m(tup("[1,1]"), 1) == tup("[1,1]"));
  CHECK_THROWS_AS(tau_m(tup("[3]"), 2), Error);
  std::set<PartitionTuple> images;
  const auto domain = enumerate_tuples(2, 5, 3);
  for (const auto& t : domain) {
    const auto img = tau_m(t, 3);
    CHECK(img.size() == 6);
    for (const auto& p : img) CHECK(p.largest_part() <= 1);
    images.insert(img);
  }
  CHECK(images.size() == domain.size());
}

TEST_CASE("partition tuple syntax") {
  CHECK(tup("[2,1];[1]").size() == 2);
  CHECK(tup("[];[1]")[0].empty());
  CHECK(tup("[0];[1]")[0].empty());
  CHECK(tup("([2],[0])") == tup("[2];[]"));
  CHECK(render_partition_tuple(tup("[];[3,1]")) == "[];[3,1]");
  CHECK(render_tuple_table(tup("[2,1]")) == "[2,1]");
  CHECK(tup("[1,2]") == tup("[2,1]"));
  CHECK_THROWS_AS(tup("[0,1]"), Error);
  CHECK_THROWS_AS(tup("[1;[2]"), ParseError);
  CHECK_THROWS_AS(tup("[a]"), ParseError);
  CHECK_THROWS_AS(tup(""), ParseError);
}
