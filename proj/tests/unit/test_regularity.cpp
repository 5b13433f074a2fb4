#include <map>
#include <numeric>
#include <random>

#include "creg/classify.hpp"
#include "creg/designs.hpp"
#include "creg/regularity.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace creg;

namespace {

Code without(const Code& c, Mask word) {
  std::vector<Mask> words;
  for (const Mask w : c.words()) {
    if (w != word) words.push_back(w);
  }
  return Code(c.length(), words);
}

/// Complete regularity straight from the definition: every pair of vertices
/// in one cell has identical outer rows.
bool regular_by_definition(const Code& c) {
  const int m = c.length();
  const std::vector<oracle::Word> words(c.words().begin(), c.words().end());
  std::map<int, std::vector<std::int64_t>> rows;
  for (Mask v = 0; v < (Mask{1} << m); ++v) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(m) + 1, 0);
    for (const Mask w : words) ++row[static_cast<std::size_t>(oracle::distance(v, w))];
    const int cell = oracle::distance_to_code(v, words);
    const auto [it, fresh] = rows.emplace(cell, row);
    if (!fresh && it->second != row) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("regularity") {
  TEST_CASE("outer rows") {
    const Code c = reference_code(12);
    for (const Mask w : c.words()) {
      const auto row = outer_row(c, w);
      CHECK(row[0] == 1);
      CHECK(row[6] == 22);
      CHECK(row[12] == 1);
    }
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
      const auto row = outer_row(c, oracle::random_word(12, rng));
      CHECK(std::accumulate(row.begin(), row.end(), std::int64_t{0}) == 24);
    }
  }

  TEST_CASE("both codes are completely regular") {
    for (const auto& [m, rho] : {std::pair{12, 4}, std::pair{11, 3}}) {
      const Code c = reference_code(m);
      const auto r = certify_completely_regular(c);
      CHECK(r.completely_regular);
      CHECK(r.covering_radius == rho);
      REQUIRE(r.intersection_table.size() == static_cast<std::size_t>(rho) + 1);
      const auto part = distance_partition(c);
      for (int i = 0; i <= rho; ++i) {
        for (const Mask v : part.cells[static_cast<std::size_t>(i)]) {
          CHECK(outer_row(c, v) == r.intersection_table[static_cast<std::size_t>(i)]);
        }
      }
      CHECK(r.to_certificate().passed());
    }
  }

  TEST_CASE("deleting any weight-6 codeword breaks complete regularity") {
    const Code c = reference_code(12);
    for (const Mask w : weight_class(c, 6)) {
      const Code broken = without(c, w);
      const auto r = certify_completely_regular(broken);
      CHECK_FALSE(r.completely_regular);
      REQUIRE(r.counterexample);
      const auto& x = *r.counterexample;
      CHECK(outer_row(broken, x.reference)[static_cast<std::size_t>(x.radius)] == x.reference_count);
      CHECK(outer_row(broken, x.vertex)[static_cast<std::size_t>(x.radius)] == x.vertex_count);
      CHECK(x.reference_count != x.vertex_count);
      CHECK(broken.distance_table()[x.reference] == x.cell);
      CHECK(broken.distance_table()[x.vertex] == x.cell);
      CHECK_FALSE(r.to_certificate().passed());
    }
  }

  TEST_CASE("verdict agrees with the definition on random codes") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<Mask> words;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) words.push_back(oracle::random_word(6, rng));
      const Code c(6, words);
      CHECK(certify_completely_regular(c).completely_regular == regular_by_definition(c));
    }
  }

  TEST_CASE("threaded scans report the same counterexample") {
    const Code broken = without(reference_code(12), weight_class(reference_code(12), 6)[5]);
    const auto one = certify_completely_regular(broken, 1);
    for (int threads : {2, 3, 8}) {
      const auto many = certify_completely_regular(broken, threads);
      REQUIRE(many.counterexample);
      CHECK(many.counterexample->vertex == one.counterexample->vertex);
      CHECK(many.counterexample->reference == one.counterexample->reference);
      CHECK(many.counterexample->radius == one.counterexample->radius);
    }
  }

  TEST_CASE("weight classes of a completely regular code form designs") {
    const Code c = reference_code(12);
    REQUIRE(certify_completely_regular(c).completely_regular);
    CHECK(is_t_design(12, weight_class(c, 6), 3).lambda == 2);
    const Code p = reference_code(11);
    REQUIRE(certify_completely_regular(p).completely_regular);
    CHECK(is_t_design(11, weight_class(p, 5), 2).lambda == 2);
    CHECK(is_t_design(11, weight_class(p, 6), 2).lambda == 3);
  }

  TEST_CASE("complete transitivity") {
    for (const auto& [m, cells] : {std::pair{12, 5}, std::pair{11, 4}}) {
      const Code c = reference_code(m);
      const auto group = closure(code_automorphism_group(c));
      const auto t = certify_completely_transitive(c, group);
      CHECK(t.completely_transitive);
      CHECK(t.completely_regular);
      CHECK(t.orbit_sizes.size() == static_cast<std::size_t>(cells));
      CHECK(t.cell_sizes == distance_partition(c).cell_sizes());
      for (const int n : t.orbits_per_cell) CHECK(n == 1);
    }
    const auto trivial = certify_completely_transitive(reference_code(12), GroupHandle(12, {}));
    CHECK_FALSE(trivial.completely_transitive);
    CHECK(trivial.orbits_per_cell[1] == 288);
  }

  TEST_CASE("a generator moving the code is a precondition violation") {
    const GroupHandle g(12, {GraphAutomorphism::translation_by(1, 12)});
    CHECK_THROWS_AS(certify_completely_transitive(reference_code(12), g), PreconditionError);
  }

  TEST_CASE("transitivity by stabilizer orbits agrees with direct orbits") {
    for (const int m : {12, 11}) {
      const Code c = reference_code(m);
      const auto group = closure(code_automorphism_group(c));
      const auto direct = certify_completely_transitive(c, group);
      for (int i = 0; i <= covering_radius(c); ++i) {
        const auto s = transitivity_by_stabilizer(c, group, i, Mask{0});
        CHECK(s.transitive_on_cell == (direct.orbits_per_cell[static_cast<std::size_t>(i)] == 1));
        CHECK(s.transitive_on_cell);
      }
    }
    const auto s4 = transitivity_by_stabilizer(reference_code(12), closure(code_automorphism_group(reference_code(12))), 4);
    CHECK(s4.stabilizer_order == 7920);
    CHECK(s4.orbit_sizes.size() == 1);
  }

  TEST_CASE("stabilizer method needs a group transitive on the code") {
    CHECK_THROWS_AS(transitivity_by_stabilizer(reference_code(12), GroupHandle(12, {}), 2), PreconditionError);
  }
}
