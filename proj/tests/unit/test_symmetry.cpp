#include <map>
#include <random>
#include <sstream>

#include "creg/classify.hpp"
#include "creg/designs.hpp"
#include "creg/symmetry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace creg;

namespace {

GraphAutomorphism random_automorphism(int m, std::mt19937_64& rng) {
  return GraphAutomorphism(oracle::random_word(m, rng), Permutation::from_images(oracle::random_permutation(m, rng)));
}

std::vector<std::vector<int>> permutation_parts(const GroupHandle& g) {
  std::vector<std::vector<int>> out;
  for (const auto& x : g.generators()) {
    std::vector<int> images;
    for (int i = 0; i < g.degree(); ++i) images.push_back(x.permutation()[i]);
    out.push_back(images);
  }
  return out;
}

std::vector<oracle::Word> raw(std::span<const Mask> words) { return {words.begin(), words.end()}; }

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("action matches the coordinate formula") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_automorphism(12, rng);
      const Mask a = oracle::random_word(12, rng);
      Mask expected = 0;
      for (int j = 0; j < 12; ++j) {
        // Coordinate sigma(j) of the image is coordinate j of a, flipped by g_j.
        const bool bit = ((a >> j) & 1U) != ((x.translation() >> j) & 1U);
        if (bit) expected |= Mask{1} << x.permutation()[j];
      }
      CHECK(x.apply(a) == expected);
    }
  }

  TEST_CASE("composition, inverse and isometry on random samples") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_automorphism(12, rng);
      const auto y = random_automorphism(12, rng);
      const auto z = random_automorphism(12, rng);
      const Mask a = oracle::random_word(12, rng);
      const Mask b = oracle::random_word(12, rng);
      CHECK((x * y).apply(a) == y.apply(x.apply(a)));
      CHECK((x * x.inverse()).is_identity());
      CHECK((x.inverse() * x).is_identity());
      CHECK(((x * y) * z) == (x * (y * z)));
      CHECK(oracle::distance(x.apply(a), x.apply(b)) == oracle::distance(a, b));
      CHECK(GraphAutomorphism::parse(x.to_string()) == x);
    }
  }

  TEST_CASE("identity, translations and permutations") {
    const auto id = GraphAutomorphism::identity(6);
    for (Mask a = 0; a < 64; ++a) CHECK(id.apply(a) == a);
    const auto t = GraphAutomorphism::translation_by(0b101100, 6);
    for (Mask a = 0; a < 64; ++a) CHECK(t.apply(a) == (a ^ 0b101100));
    const std::vector<int> cycle{1, 2, 0, 3, 4, 5};
    const auto p = GraphAutomorphism::permuting(Permutation::from_images(cycle));
    const Vertex a = Vertex::parse("110010");
    std::vector<int> expected;
    for (const int i : support(a)) expected.push_back(cycle[static_cast<std::size_t>(i - 1)] + 1);
    std::sort(expected.begin(), expected.end());
    CHECK(support(apply(p, a)) == expected);
    CHECK_THROWS_AS(apply(p, Vertex::zero(7)), ParameterError);
  }

  TEST_CASE("closure") {
    CHECK(*closure(GroupHandle(5, {})).order() == 1);
    const std::vector<int> swap{1, 0, 2, 3};
    CHECK(*closure(GroupHandle(4, {GraphAutomorphism::permuting(Permutation::from_images(swap))})).order() == 2);
    const auto aut = code_automorphism_group(reference_code(12));
    CHECK_THROWS_AS(closure(aut, 1000), ResourceError);
  }

  TEST_CASE("setwise stabilizers against brute-force orders") {
    const Code c = reference_code(12);
    const auto m11 = setwise_stabilizer_perms(12, weight_class(c, 6));
    CHECK(*m11.order() == 7920);
    CHECK(oracle::permutation_group_order(permutation_parts(m11), 12) == 7920);
    const auto psl = setwise_stabilizer_perms(11, weight_class(reference_code(11), 5));
    CHECK(*psl.order() == 660);
    CHECK(oracle::permutation_group_order(permutation_parts(psl), 11) == 660);
    std::vector<Mask> singletons;
    for (int i = 0; i < 6; ++i) singletons.push_back(Mask{1} << i);
    const auto s6 = setwise_stabilizer_perms(6, singletons);
    CHECK(*s6.order() == 720);
    CHECK(oracle::permutation_group_order(permutation_parts(s6), 6) == 720);
  }

  TEST_CASE("setwise stabilizers of random families match brute force") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Mask> family;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) family.push_back(oracle::random_word(6, rng));
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
      std::vector<int> perm{0, 1, 2, 3, 4, 5};
      std::size_t count = 0;
      do {
        count += oracle::sorted_image(raw(family), perm) == raw(family);
      } while (std::next_permutation(perm.begin(), perm.end()));
      const auto g = setwise_stabilizer_perms(6, family);
      CHECK(*g.order() == count);
      CHECK(*closure(g).order() == count);
    }
  }

  TEST_CASE("set system maps") {
    std::mt19937_64 rng(53);
    const auto blocks = weight_class(reference_code(11), 5);
    const auto perm = oracle::random_permutation(11, rng);
    const auto moved = oracle::sorted_image(raw(blocks), perm);
    const auto found = find_set_system_map(11, blocks, std::vector<Mask>(moved.begin(), moved.end()));
    REQUIRE(found);
    std::vector<int> images;
    for (int i = 0; i < 11; ++i) images.push_back((*found)[i]);
    CHECK(oracle::sorted_image(raw(blocks), images) == moved);
    std::vector<Mask> other = moved;
    other.back() ^= 0b11;
    CHECK_FALSE(find_set_system_map(11, blocks, other));
  }

  TEST_CASE("automorphism group of the Hadamard 12 code") {
    const Code c = reference_code(12);
    const auto g = code_automorphism_group(c);
    CHECK(*g.order() == 190080);
    for (const auto& x : g.generators()) CHECK(stabilizes(x, c));
    const auto closed = closure(g);
    CHECK(*closed.order() == 190080);
    const auto stab = stabilizer_of_vertex(closed, 0);
    CHECK(*stab.order() == 7920);
    CHECK(*closed.order() / *stab.order() == 24);
    CHECK(orbit_of(closed, 0).size() == 24);
    for (int k = 1; k <= 3; ++k) CHECK(orbits_on_ksubsets(stab, k).size() == 1);
    CHECK(orbits_on_ksubsets(stab, 4).size() == 2);
    CHECK(transitivity_degree(stab) == 3);
  }

  TEST_CASE("small code automorphism groups match brute force") {
    const std::vector<oracle::Word> rep{0b000, 0b111};
    const auto g = code_automorphism_group(Code(3, std::vector<Mask>{0b000, 0b111}));
    CHECK(*g.order() == oracle::brute_force_code_automorphisms(rep, 3));
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Mask> words;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) words.push_back(oracle::random_word(5, rng));
      const Code code(5, words);
      const auto h = code_automorphism_group(code);
      const auto expected = oracle::brute_force_code_automorphisms(raw(code.words()), 5);
      CHECK(*h.order() == expected);
      CHECK(*closure(h).order() == expected);
    }
  }

  TEST_CASE("orbits") {
    const Code c = reference_code(12);
    const auto closed = closure(code_automorphism_group(c));
    const auto all = orbits(closed);
    const auto part = distance_partition(c);
    REQUIRE(all.size() == 5);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(*closed.order() % all[i].size() == 0);
      CHECK(std::find(part.cells.begin(), part.cells.end(), all[i]) != part.cells.end());
    }
    const auto trivial = orbits(GroupHandle(4, {}));
    CHECK(trivial.size() == 16);
    const auto on_code = orbits(closed, c.words());
    CHECK(on_code.size() == 1);
    CHECK(on_code.front() == std::vector<Mask>(c.words().begin(), c.words().end()));
    CHECK_THROWS_AS(orbits(closed, std::vector<Mask>{0, 1}), ParameterError);
    const std::vector<int> t{1, 0, 2, 3, 4};
    const std::vector<int> r{1, 2, 3, 4, 0};
    const GroupHandle s5(5, {GraphAutomorphism::permuting(Permutation::from_images(t)),
                             GraphAutomorphism::permuting(Permutation::from_images(r))});
    for (int k = 0; k <= 5; ++k) CHECK(orbits_on_ksubsets(s5, k).size() == 1);
    CHECK_THROWS_AS(orbits_on_ksubsets(closed, 2), ParameterError);
  }

  TEST_CASE("PSL(2,11) on 3-subsets") {
    const auto psl = setwise_stabilizer_perms(11, weight_class(reference_code(11), 5));
    CHECK(orbits_on_ksubsets(psl, 3).size() == 2);
    CHECK(transitivity_degree(psl) == 2);
  }

  TEST_CASE("projection onto coordinates 2..12") {
    const Code c = reference_code(12);
    const auto closed = closure(code_automorphism_group(c));
    const auto fix1 = stabilizer_of_coordinate(closed, 1);
    std::vector<int> j;
    for (int i = 2; i <= 12; ++i) j.push_back(i);
    const auto chi = project_group(fix1, j);
    const Code p = reference_code(11);
    for (const auto& x : chi.generators()) CHECK(stabilizes(x, p));
    CHECK(orbits(chi, p.words()).size() == 1);
    CHECK(projection_is_injective(fix1, j));
    CHECK(project_group(GroupHandle(12, {}), j).generators().empty());
    CHECK_THROWS_AS(project_group(closed, j), ParameterError);
  }

  TEST_CASE("equivalence search") {
    std::mt19937_64 rng(61);
    const Code c = reference_code(12);
    const auto self = find_equivalence(c, c);
    REQUIRE(self);
    CHECK(image(c, *self) == c);
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_automorphism(12, rng);
      const Code moved = image(c, x);
      const auto found = find_equivalence(c, moved);
      REQUIRE(found);
      CHECK(image(c, *found) == moved);
      const auto p = GraphAutomorphism::permuting(Permutation::from_images(oracle::random_permutation(12, rng)));
      const auto perm = find_permutation_equivalence(c, image(c, p));
      REQUIRE(perm);
      CHECK(image(c, GraphAutomorphism::permuting(*perm)) == image(c, p));
    }
    std::vector<Mask> even;
    for (Mask v = 0; v < 4096 && even.size() < 24; ++v) {
      if (std::popcount(v) % 2 == 0) even.push_back(v);
    }
    CHECK_FALSE(find_equivalence(c, Code(12, even)));
  }

  TEST_CASE("generator file round trip") {
    const auto g = code_automorphism_group(reference_code(11));
    std::stringstream buffer;
    write_generators(buffer, g.generators());
    const auto back = read_generators(buffer);
    CHECK(std::equal(back.begin(), back.end(), g.generators().begin(), g.generators().end()));
    std::istringstream bad("000|1 2 3\n0000|1 2 3 4\n");
    CHECK_THROWS_AS(read_generators(bad), FormatError);
  }
}
