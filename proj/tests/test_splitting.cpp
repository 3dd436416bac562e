#include <doctest.h>

#include <random>

#include "spinlab/catalog.hpp"
#include "spinlab/splitting.hpp"
#include "support/oracles.hpp"

using namespace spinlab;

TEST_CASE("partitions are validated") {
  CHECK_THROWS_AS(make_partition(4, {{1, 2}, {2, 3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(4, {{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(4, {{1, 2}, {}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(4, {{1, 2}, {3, 5}}), std::invalid_argument);
}

TEST_CASE("canonical order sorts blocks by size and keeps ties stable") {
  const auto p = make_partition(7, {{7, 4, 1}, {5}, {2, 3, 6}});
  CHECK(p.block(1) == std::vector<int>{5});
  CHECK(p.block(2) == std::vector<int>{1, 4, 7});
  CHECK(p.block(3) == std::vector<int>{2, 3, 6});
  CHECK(p.original_labels() == std::vector<int>{2, 1, 3});
  CHECK(p.largest_block_size() == 3);
  CHECK(p.block_of(4) == 2);
  CHECK(to_string(p) == "{5|1,4,7|2,3,6}");
  CHECK_THROWS_AS(p.block(4), std::out_of_range);
}

TEST_CASE("monomial classes") {
  const auto p = make_partition(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(classify_monomial(p, {1, 3, 5}).kind == MonomialKind::mixed);
  const auto c = classify_monomial(p, {1, 2, 5});
  CHECK(c.kind == MonomialKind::two_one);
  CHECK(c.blocks == std::vector<int>{1, 3});
  const auto q = make_partition(4, {{1, 2, 3}, {4}});
  CHECK(classify_monomial(q, {1, 2, 3}).kind == MonomialKind::pure);
  CHECK_THROWS(classify_monomial(p, {1, 1, 2}));
}

TEST_CASE("split type of the catalog geometries") {
  for (const auto* name : {"nk_F12", "nk_CP3", "stiefel_v2r4", "stiefel_v2r5"}) {
    const auto e = catalog_entry(name);
    CHECK_MESSAGE(is_split_type(e.torsion, e.partition), name);
  }
  const auto bad = catalog_entry("nonsplit_example");
  CHECK_FALSE(is_split_type(bad.torsion, bad.partition));
  CHECK(is_split_type(*catalog_entry("nk_F12").exact_torsion, catalog_entry("nk_F12").partition));
}

TEST_CASE("the decomposition is a direct sum") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 5;
    std::vector<std::vector<int>> blocks(1 + trial % 3);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; ++i) blocks[i % blocks.size()].push_back(order[i]);
    const auto p = make_partition(n, blocks);
    const auto t = oracle::random_form(rng, n, 3, 8);
    const auto d = decompose_3form(t, p);
    CHECK(d.sum() == t);
    // No monomial appears in two components.
    std::size_t total = d.two_one.size() + d.mixed.size();
    for (const auto& f : d.pure) total += f.size();
    CHECK(total == t.size());
    CHECK(is_split_type(t, p) == (d.mixed == t));
  }
}

TEST_CASE("dimension mismatch is reported") {
  const auto p = make_partition(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(decompose_3form(Form::monomial(5, {1, 2, 3}), p), DimensionMismatch);
}
