// Runs the eleven acceptance criteria and prints one line per criterion.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "creg/classify.hpp"
#include "creg/designs.hpp"
#include "creg/hadamard.hpp"
#include "creg/regularity.hpp"
#include "creg/replay.hpp"
#include "creg/spectral.hpp"
#include "creg/symmetry.hpp"
#include "oracles.hpp"

using namespace creg;

namespace {

/// Accumulates failed sub-checks so a criterion line can say what broke.
struct Tally {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

std::vector<oracle::Word> raw(std::span<const Mask> words) { return {words.begin(), words.end()}; }

std::vector<int> dense_product(const std::vector<int>& a, const std::vector<int>& b, int m) {
  std::vector<int> c(static_cast<std::size_t>(m * m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        c[static_cast<std::size_t>(i * m + j)] +=
            a[static_cast<std::size_t>(i * m + k)] * b[static_cast<std::size_t>(k * m + j)];
      }
    }
  }
  return c;
}

const GroupHandle& aut12() {
  static const GroupHandle g = closure(code_automorphism_group(reference_code(12)));
  return g;
}

const GroupHandle& aut11() {
  static const GroupHandle g = closure(code_automorphism_group(reference_code(11)));
  return g;
}

void construction(Tally& t) {
  const auto h = paley_hadamard_12();
  const std::vector<int> e(h.entries().begin(), h.entries().end());
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      int dot = 0;
      for (int k = 0; k < 12; ++k) dot += e[static_cast<std::size_t>(i * 12 + k)] * e[static_cast<std::size_t>(j * 12 + k)];
      t.expect(dot == (i == j ? 12 : 0), "H H^T entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  const Code c = code_of(h);
  t.expect(c.length() == 12 && c.size() == 24 && oracle::min_distance(raw(c.words())) == 6, "code_of is (12,24,6)");
  const Code p = puncture(c, 1);
  t.expect(p.length() == 11 && p.size() == 24 && oracle::min_distance(raw(p.words())) == 5, "puncture is (11,24,5)");
}

void covering_radii(Tally& t) {
  t.expect(covering_radius(reference_code(12)) == 4, "rho(C) = 4");
  t.expect(covering_radius(reference_code(11)) == 3, "rho(C1) = 3");
  t.expect(oracle::covering_radius(raw(reference_code(12).words()), 12) == 4, "oracle rho(C) = 4");
  t.expect(oracle::covering_radius(raw(reference_code(11).words()), 11) == 3, "oracle rho(C1) = 3");
}

void complete_regularity(Tally& t) {
  t.expect(certify_completely_regular(reference_code(12)).completely_regular, "C completely regular");
  t.expect(certify_completely_regular(reference_code(11)).completely_regular, "C1 completely regular");
  const Code c = reference_code(12);
  for (const Mask w : weight_class(c, 6)) {
    std::vector<Mask> words;
    for (const Mask x : c.words()) {
      if (x != w) words.push_back(x);
    }
    const Code broken(12, words);
    const auto r = certify_completely_regular(broken);
    bool witnessed = false;
    if (!r.completely_regular && r.counterexample) {
      const auto& x = *r.counterexample;
      const auto words_raw = raw(broken.words());
      auto count_at = [&](Mask v) {
        std::int64_t n = 0;
        for (const auto u : words_raw) n += oracle::distance(v, u) == x.radius;
        return n;
      };
      witnessed = oracle::distance_to_code(x.vertex, words_raw) == oracle::distance_to_code(x.reference, words_raw) &&
                  count_at(x.vertex) == x.vertex_count && count_at(x.reference) == x.reference_count &&
                  x.vertex_count != x.reference_count;
    }
    t.expect(witnessed, "deleting " + std::to_string(w) + " gives a checked counterexample");
  }
}

void macwilliams(Tally& t) {
  const auto c = reject_size_23();
  t.expect(c.passed() && c.witness.at("a2") == "-55", "library a'_2 = -55");
  const std::int64_t a2 = oracle::krawtchouk(11, 2, 0) + 11 * oracle::krawtchouk(11, 2, 5) + 11 * oracle::krawtchouk(11, 2, 6);
  t.expect(a2 == -55, "oracle a'_2 = -55");
  for (const auto& [m, s] : {std::pair{12, 4}, std::pair{11, 3}}) {
    const auto transform = macwilliams_transform(distance_distribution(reference_code(m)));
    t.expect(transform.nonnegative(), "transform nonnegative at m = " + std::to_string(m));
    t.expect(transform.external_distance() == s, "external distance at m = " + std::to_string(m));
  }
}

void designs(Tally& t) {
  const auto c6 = weight_class(reference_code(12), 6);
  t.expect(c6.size() == 22 && oracle::design_lambda(raw(c6), 12, 3) == 2 && is_t_design(12, c6, 3).lambda == 2,
           "C(6) is 3-(12,6,2) with 22 blocks");
  const auto p5 = weight_class(reference_code(11), 5);
  t.expect(p5.size() == 11 && oracle::design_lambda(raw(p5), 11, 2) == 2 && is_t_design(11, p5, 2).lambda == 2,
           "C1(5) is 2-(11,5,2) with 11 blocks");
  const auto p6 = weight_class(reference_code(11), 6);
  t.expect(oracle::design_lambda(raw(p6), 11, 2) == 3 && is_t_design(11, p6, 2).lambda == 3, "C1(6) is 2-(11,6,3)");
}

void uniqueness(Tally& t) {
  t.expect(enumerate_designs(2, 11, 5, 2).classes.size() == 1, "2-(11,5,2) has one class");
  t.expect(enumerate_designs(3, 12, 6, 2).classes.size() == 1, "3-(12,6,2) has one class");
  t.expect(enumerate_designs(2, 7, 3, 1).classes.size() == 1, "2-(7,3,1) has one class");
  std::set<std::vector<oracle::Word>> classes;
  for (const auto& d : oracle::brute_labeled_designs(2, 7, 3, 1)) classes.insert(oracle::brute_canonical(d, 7));
  t.expect(classes.size() == 1, "unpruned search finds one Fano class");
}

void groups(Tally& t) {
  t.expect(*aut12().order() == 190080, "|Aut(C)| = 190080");
  const auto stab = stabilizer_of_vertex(aut12(), 0);
  t.expect(*stab.order() == 7920 && *aut12().order() / *stab.order() == 24, "zero stabilizer 7920, index 24");
  const auto d12 = Design::verified(12, weight_class(reference_code(12), 6), 3);
  t.expect(*closure(design_automorphisms(d12)).order() == 7920, "Aut 3-(12,6,2) = 7920");
  const auto d11 = Design::verified(11, weight_class(reference_code(11), 5), 2);
  t.expect(*closure(design_automorphisms(d11)).order() == 660, "Aut 2-(11,5,2) = 660");
}

void orbit_counts(Tally& t) {
  const auto stab = stabilizer_of_vertex(aut12(), 0);
  t.expect(orbits_on_ksubsets(stab, 4).size() == 2, "7920 group: 2 orbits on 4-subsets");
  const auto d11 = Design::verified(11, weight_class(reference_code(11), 5), 2);
  const auto psl = closure(design_automorphisms(d11));
  t.expect(*psl.order() == 660 && orbits_on_ksubsets(psl, 3).size() == 2, "660 group: 2 orbits on 3-subsets");
}

void complete_transitivity(Tally& t) {
  for (const auto& [m, cells] : {std::pair{12, 5}, std::pair{11, 4}}) {
    const Code c = reference_code(m);
    const auto& g = m == 12 ? aut12() : aut11();
    const auto all = orbits(g);
    const auto part = distance_partition(c);
    bool equal = all.size() == static_cast<std::size_t>(cells) && part.cells.size() == static_cast<std::size_t>(cells);
    for (const auto& o : all) equal = equal && std::find(part.cells.begin(), part.cells.end(), o) != part.cells.end();
    t.expect(equal, "orbits equal cells at m = " + std::to_string(m));
    t.expect(certify_completely_transitive(c, g).completely_transitive, "completely transitive at m = " + std::to_string(m));
    if (m == 12) {
      std::size_t total = 0;
      for (const auto& cell : part.cells) total += cell.size();
      // Independent census of distances to the code.
      std::vector<std::size_t> census(5, 0);
      for (oracle::Word v = 0; v < 4096; ++v) ++census[static_cast<std::size_t>(oracle::distance_to_code(v, raw(c.words())))];
      t.expect(total == 4096 && census[0] == 24 && census[1] == 288 && census[2] == 1584, "cell sizes 24, 288, 1584");
      t.expect(part.cell_sizes() == census, "cell sizes match the census");
    }
  }
}

void classification_replay(Tally& t) {
  for (const auto& [m, delta, failing] : {std::tuple{12, 6, "classification.step3.size-forcing"},
                                          std::tuple{11, 5, "classification.step3.mu"}}) {
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(delta) + ")";
    const auto run = classify_and_certify(m, delta, 24);
    t.expect(run.passed(), tag + " chain passes");
    const auto replay = replay_report(report_json(run));
    t.expect(replay.schema_ok && replay.all_reproduced() && replay.all_pass(), tag + " report replays");
    const auto bad = classify(m, delta, 22);
    t.expect(!bad.passed() && bad.steps.back().anchor == failing && !bad.steps.back().passed(),
             tag + " bound 22 fails at " + failing);
    const auto bad_replay = replay_report(report_json(bad));
    t.expect(bad_replay.all_reproduced() && !bad_replay.all_pass(), tag + " failing report replays as FAIL");
  }
}

void property_suites(Tally& t) {
  for (const int m : {11, 12}) {
    const KrawtchoukTable k(m);
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; b <= m; ++b) {
        std::int64_t sum = 0;
        for (int x = 0; x <= m; ++x) sum += oracle::binom(m, x) * k(a, x) * k(b, x);
        const std::int64_t expected = a == b ? (std::int64_t{1} << m) * oracle::binom(m, a) : 0;
        t.expect(sum == expected, "orthogonality m=" + std::to_string(m));
        t.expect(oracle::binom(m, b) * k(a, b) == oracle::binom(m, a) * k(b, a), "reflection m=" + std::to_string(m));
        t.expect(k(a, b) == oracle::krawtchouk(m, a, b), "K matches oracle m=" + std::to_string(m));
      }
    }
  }
  std::mt19937_64 rng(20261018);
  for (int i = 0; i < 1000; ++i) {
    const GraphAutomorphism x(oracle::random_word(12, rng), Permutation::from_images(oracle::random_permutation(12, rng)));
    const GraphAutomorphism y(oracle::random_word(12, rng), Permutation::from_images(oracle::random_permutation(12, rng)));
    const Mask a = oracle::random_word(12, rng);
    const Mask b = oracle::random_word(12, rng);
    t.expect(oracle::distance(x.apply(a), x.apply(b)) == oracle::distance(a, b), "isometry");
    t.expect((x * y).apply(a) == y.apply(x.apply(a)), "composition");
    t.expect((x * x.inverse()).is_identity(), "inverse");
  }
  const auto h = paley_hadamard_12();
  const std::vector<int> dense_h(h.entries().begin(), h.entries().end());
  const auto group = code_automorphism_group(code_of(h));
  for (const auto& x : group.generators()) {
    const auto m = transfer_from_code_automorphism(x, h);
    t.expect(dense_product(dense_product(m.p.dense(), dense_h, 12), m.u.dense(), 12) == dense_h, "P H U = H");
    t.expect(theta(m.u) == x, "theta(U) = x");
  }
}

struct Criterion {
  const char* description;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"construction: H H^T = 12 I, (12,24,6) code, (11,24,5) puncture", construction},
      {"covering radii 4 and 3", covering_radii},
      {"complete regularity and single-deletion counterexamples", complete_regularity},
      {"MacWilliams: a'_2 = -55, nonnegative transforms, external distances 4 and 3", macwilliams},
      {"weight-class designs 3-(12,6,2), 2-(11,5,2), 2-(11,6,3)", designs},
      {"design uniqueness and Fano calibration", uniqueness},
      {"group orders 190080, 7920, 660", groups},
      {"orbits on 4-subsets and 3-subsets", orbit_counts},
      {"complete transitivity: orbits equal distance cells", complete_transitivity},
      {"classification reports replay, bound 22 fails", classification_replay},
      {"Krawtchouk identities, action laws, matrix transfer", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(tally);
    } catch (const std::exception& e) {
      tally.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu. %s (%.2fs)\n", tally.ok() ? "PASS" : "FAIL", i + 1, criteria[i].description, s);
    for (std::size_t j = 0; j < tally.failures.size() && j < 5; ++j) std::printf("       %s\n", tally.failures[j].c_str());
    failed += !tally.ok();
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
