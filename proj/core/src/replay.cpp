#include "creg/replay.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "creg/rational.hpp"

namespace creg {

namespace {

using Bits = std::uint32_t;

struct Checked {
  Verdict verdict;
  std::string message;
};

class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw WitnessError(what);
}

std::int64_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto text = j.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

std::string show(const Rational& r) {
  const auto n = numerator(r);
  const auto d = denominator(r);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Bits block_bits(const Json& labels, int points) {
  Bits b = 0;
  for (const auto& l : labels) {
    const int p = l.get<int>();
    require(p >= 1 && p <= points, "point label out of range");
    require(!((b >> (p - 1)) & 1U), "repeated point label");
    b |= Bits{1} << (p - 1);
  }
  return b;
}

std::vector<Bits> blocks_of(const Json& list, int points) {
  std::vector<Bits> out;
  for (const auto& b : list) out.push_back(block_bits(b, points));
  return out;
}

Bits word_bits(const std::string& word) {
  Bits b = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    require(word[i] == '0' || word[i] == '1', "word has a symbol other than 0/1");
    if (word[i] == '1') b |= Bits{1} << i;
  }
  return b;
}

std::vector<Bits> words_of(const Json& list) {
  std::vector<Bits> out;
  for (const auto& w : list) out.push_back(word_bits(w.get<std::string>()));
  std::sort(out.begin(), out.end());
  return out;
}

Bits all_ones(int m) { return m >= 32 ? ~Bits{0} : (Bits{1} << m) - 1; }

/// Blocks through each t-subset; the common count, or -1 when it varies.
std::int64_t design_lambda(const std::vector<Bits>& blocks, int points, int t) {
  std::int64_t lambda = -1;
  for (Bits s = 0; s <= all_ones(points); ++s) {
    if (std::popcount(s) != t) continue;
    std::int64_t count = 0;
    for (const Bits b : blocks) count += (b & s) == s ? 1 : 0;
    if (lambda < 0) lambda = count;
    if (count != lambda) return -1;
  }
  return lambda;
}

/// The order-12 Paley matrix, normalized, and its code.
std::vector<Bits> hadamard_code(int m) {
  constexpr int q = 11;
  std::array<int, q> chi{};
  chi.fill(-1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;
  int h[12][12];
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      int v = 0;
      if (i == 0 && j > 0) v = 1;
      else if (j == 0 && i > 0) v = -1;
      else if (i > 0 && j > 0) v = chi[static_cast<std::size_t>(((j - i) % q + q) % q)];
      h[i][j] = v + (i == j ? 1 : 0);
    }
  }
  for (int i = 0; i < 12; ++i) {
    if (h[i][0] == -1) for (int j = 0; j < 12; ++j) h[i][j] = -h[i][j];
  }
  for (int j = 0; j < 12; ++j) {
    if (h[0][j] == -1) for (int i = 0; i < 12; ++i) h[i][j] = -h[i][j];
  }
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      int dot = 0;
      for (int k = 0; k < 12; ++k) dot += h[i][k] * h[j][k];
      require(dot == (i == j ? 12 : 0), "local Paley construction is not Hadamard");
    }
  }
  std::set<Bits> words;
  for (int i = 0; i < 12; ++i) {
    Bits w = 0;
    for (int j = 0; j < 12; ++j) {
      if (h[i][j] == -1) w |= Bits{1} << j;
    }
    for (const Bits v : {w, w ^ all_ones(12)}) {
      words.insert(m == 12 ? v : v >> 1);
    }
  }
  return {words.begin(), words.end()};
}

// Automorphisms of H(m,2) as (flip mask, 0-based images); a -> sigma(a ^ flip).
struct Element {
  Bits flip = 0;
  std::vector<int> images;

  bool operator==(const Element&) const = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = e.flip;
    for (const int i : e.images) h = h * 31 + static_cast<std::size_t>(i);
    return h;
  }
};

Element parse_element(const std::string& text, int m) {
  const auto bar = text.find('|');
  require(bar != std::string::npos && static_cast<int>(bar) == m, "malformed automorphism");
  Element e;
  e.flip = word_bits(text.substr(0, bar));
  std::size_t pos = bar + 1;
  while (pos < text.size()) {
    std::size_t used = 0;
    e.images.push_back(std::stoi(text.substr(pos), &used) - 1);
    pos += used;
  }
  require(static_cast<int>(e.images.size()) == m, "permutation has the wrong degree");
  auto sorted = e.images;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i) require(sorted[static_cast<std::size_t>(i)] == i, "images are not a permutation");
  return e;
}

Bits act(const Element& e, Bits a) {
  const Bits x = a ^ e.flip;
  Bits out = 0;
  for (std::size_t i = 0; i < e.images.size(); ++i) {
    if ((x >> i) & 1U) out |= Bits{1} << e.images[i];
  }
  return out;
}

/// x then y.
Element compose(const Element& x, const Element& y) {
  Element out;
  const std::size_t m = x.images.size();
  out.images.resize(m);
  Bits pulled = 0;
  for (std::size_t i = 0; i < m; ++i) {
    out.images[i] = y.images[static_cast<std::size_t>(x.images[i])];
    if ((y.flip >> x.images[i]) & 1U) pulled |= Bits{1} << i;
  }
  out.flip = x.flip ^ pulled;
  return out;
}

Element invert(const Element& x) {
  Element out;
  out.images.resize(x.images.size());
  for (std::size_t i = 0; i < x.images.size(); ++i) out.images[static_cast<std::size_t>(x.images[i])] = static_cast<int>(i);
  out.flip = act(Element{0, x.images}, x.flip);
  return out;
}

std::size_t closure_size(const std::vector<Element>& generators, int m, std::size_t limit) {
  Element identity;
  for (int i = 0; i < m; ++i) identity.images.push_back(i);
  std::unordered_set<Element, ElementHash> seen{identity};
  std::vector<Element> queue{identity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      auto next = compose(queue[i], g);
      if (seen.insert(next).second) {
        require(seen.size() <= limit, "closure exceeds the replay limit");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<int> distances_to(const std::vector<Bits>& code, int m) {
  std::vector<int> d(std::size_t{1} << m, m + 1);
  for (Bits v = 0; v <= all_ones(m); ++v) {
    for (const Bits w : code) d[v] = std::min(d[v], std::popcount(v ^ w));
  }
  return d;
}

struct OrbitCheck {
  bool matches_cells = true;
  std::vector<std::size_t> orbit_sizes;
};

OrbitCheck orbits_against_cells(const std::vector<Element>& generators, const std::vector<int>& cell, int m) {
  OrbitCheck out;
  const int rho = *std::max_element(cell.begin(), cell.end());
  std::vector<int> orbits_in_cell(static_cast<std::size_t>(rho) + 1, 0);
  std::vector<char> seen(cell.size(), 0);
  for (Bits start = 0; start <= all_ones(m); ++start) {
    if (seen[start]) continue;
    std::vector<Bits> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : generators) {
        const Bits next = act(g, orbit[i]);
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    }
    out.orbit_sizes.push_back(orbit.size());
    ++orbits_in_cell[static_cast<std::size_t>(cell[start])];
    for (const Bits v : orbit) out.matches_cells = out.matches_cells && cell[v] == cell[start];
  }
  for (const int n : orbits_in_cell) out.matches_cells = out.matches_cells && n == 1;
  return out;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

// ---------------------------------------------------------------------------
// Per-step checks

Checked check_lambda(const Json& w) {
  const int m = w.at("m");
  const int delta = w.at("delta");
  const int t = w.at("t");
  require(t == delta / 2, "t is not floor(delta/2)");
  const int bound = (m - t) / (delta - t);
  require(w.at("counting_bound").get<int>() == bound, "counting bound differs");
  std::vector<std::int64_t> survivors;
  for (int lambda = 1; lambda <= bound; ++lambda) {
    bool integral = true;
    for (int i = 0; i <= t; ++i) {
      const Rational v = Rational(lambda) * choose(m - i, t - i) / choose(delta - i, t - i);
      integral = integral && denominator(v) == 1;
    }
    if (integral) survivors.push_back(lambda);
  }
  require(w.at("survivors").get<std::vector<std::int64_t>>() == survivors, "surviving lambda values differ");
  const auto code = hadamard_code(m);
  std::vector<Bits> blocks;
  for (const Bits c : code) {
    if (std::popcount(c) == delta) blocks.push_back(c);
  }
  const auto reference = design_lambda(blocks, m, t);
  const bool ok = survivors.size() == 1 && reference == survivors.front();
  return {verdict_of(ok), ok ? "lambda = " + std::to_string(survivors.front()) : "lambda not determined"};
}

Checked check_block_count(const Json& w) {
  const int t = w.at("t");
  const int m = w.at("m");
  const int k = w.at("k");
  const std::int64_t lambda = w.at("lambda");
  const Rational b = Rational(lambda) * choose(m, t) / choose(k, t);
  require(parse_rational(w.at("blocks")) == b, "block count differs");
  return {verdict_of(denominator(b) == 1), "b = " + show(b)};
}

Checked check_complement_closure(const Json& w) {
  if (!w.contains("blocks")) return {Verdict::fail, "no unique design recorded"};
  const int points = w.at("points");
  auto blocks = blocks_of(w.at("blocks"), points);
  std::sort(blocks.begin(), blocks.end());
  require(design_lambda(blocks, points, 3) == 2, "blocks do not form a 3-design with lambda 2");
  bool closed = true;
  for (const Bits b : blocks) closed = closed && std::binary_search(blocks.begin(), blocks.end(), b ^ all_ones(points));
  return {verdict_of(closed), closed ? "closed under complement" : "a complement is missing"};
}

Checked check_size_forcing(const Json& w) {
  const std::int64_t lower = w.at("zero").get<std::int64_t>() + w.at("weight_delta").get<std::int64_t>() +
                             w.at("all_ones").get<std::int64_t>();
  require(lower == w.at("lower_bound").get<std::int64_t>(), "lower bound differs");
  const std::int64_t bound = w.at("size_bound");
  return {verdict_of(lower == bound),
          "lower bound " + std::to_string(lower) + " vs size bound " + std::to_string(bound)};
}

Checked check_mu(const Json& w) {
  const std::int64_t blocks5 = w.at("weight5_blocks");
  const std::int64_t bound = w.at("size_bound");
  std::vector<std::int64_t> feasible;
  for (std::int64_t mu = 1;; ++mu) {
    bool integral = true;
    for (int i = 0; i <= 2; ++i) {
      integral = integral && denominator(Rational(mu) * choose(11 - i, 2 - i) / choose(6 - i, 2 - i)) == 1;
    }
    const Rational size = Rational(1 + blocks5) + Rational(mu) * choose(11, 2) / choose(6, 2);
    if (size > bound) break;
    if (integral) feasible.push_back(mu);
  }
  require(w.at("feasible").get<std::vector<std::int64_t>>() == feasible, "feasible mu values differ");
  return {verdict_of(feasible.size() == 1),
          feasible.size() == 1 ? "mu = " + std::to_string(feasible.front()) : "mu not determined"};
}

Checked check_reject_23(const Json& w) {
  const int m = w.at("m");
  std::vector<Rational> a;
  for (const auto& v : w.at("distribution")) a.push_back(parse_rational(v));
  require(static_cast<int>(a.size()) == m + 1, "distribution length differs");
  std::vector<Rational> transform;
  for (int k = 0; k <= m; ++k) {
    Rational sum = 0;
    for (int x = 0; x <= m; ++x) {
      std::int64_t kr = 0;
      for (int j = 0; j <= k; ++j) kr += (j % 2 ? -1 : 1) * choose(x, j) * choose(m - x, k - j);
      sum += a[static_cast<std::size_t>(x)] * kr;
    }
    transform.push_back(sum);
  }
  std::vector<Rational> recorded;
  for (const auto& v : w.at("transform")) recorded.push_back(parse_rational(v));
  require(recorded == transform, "transform differs");
  return {verdict_of(transform[2] < 0), "a'_2 = " + show(transform[2])};
}

Checked check_fisher(const Json& w) {
  const std::int64_t remaining = w.at("size_bound").get<std::int64_t>() - w.at("accounted").get<std::int64_t>();
  bool all_rejected = true;
  for (const auto& e : w.at("weights")) {
    const int points = e.at("points");
    const int weight = e.at("weight");
    require(weight < points, "Fisher's inequality needs k < m");
    const bool holds = e.at("blocks").get<std::int64_t>() >= points;
    require(holds == e.at("fisher_holds").get<bool>(), "Fisher verdict differs");
    all_rejected = all_rejected && !holds;
  }
  return {verdict_of(all_rejected && remaining == 1 && w.at("weights").size() == 4),
          "weights 7..10 rejected with " + std::to_string(remaining) + " word remaining"};
}

Checked check_antipodal(const Json& w) {
  if (!w.contains("weight5_blocks")) return {Verdict::fail, "no unique design recorded"};
  auto blocks = blocks_of(w.at("weight5_blocks"), 11);
  auto complements = blocks_of(w.at("complement_blocks"), 11);
  std::sort(complements.begin(), complements.end());
  std::vector<Bits> expected;
  for (const Bits b : blocks) expected.push_back(b ^ all_ones(11));
  std::sort(expected.begin(), expected.end());
  require(expected == complements, "complement blocks differ");
  require(design_lambda(blocks, 11, 2) == 2, "weight-5 blocks are not a 2-(11,5,2) design");
  const auto mu = w.at("mu").get<std::int64_t>();
  const bool ok = design_lambda(complements, 11, 2) == mu && w.at("extra_weight").get<int>() == 11;
  return {verdict_of(ok), "complements form a 2-(11,6," + std::to_string(mu) + ") design"};
}

Checked check_uniqueness(const Json& w) {
  const int t = w.at("t");
  const int points = w.at("points");
  const int k = w.at("k");
  const std::int64_t lambda = w.at("lambda");
  const auto classes = w.at("classes").get<std::size_t>();
  require(w.at("representatives").size() == classes, "representative count differs");
  for (const auto& rep : w.at("representatives")) {
    const auto blocks = blocks_of(rep, points);
    for (const Bits b : blocks) require(std::popcount(b) == k, "block size differs");
    require(design_lambda(blocks, points, t) == lambda, "representative is not a design with these parameters");
  }
  return {verdict_of(classes == 1),
          "representative verified; class count taken from the search (" + std::to_string(classes) + ")"};
}

Checked check_equivalence(const Json& w) {
  const int m = w.at("m");
  if (w.at("sigma").is_null()) return {Verdict::fail, "no permutation recorded"};
  const auto candidate = words_of(w.at("candidate"));
  const auto reference = hadamard_code(m);
  require(words_of(w.at("reference")) == reference, "recorded reference differs from the local construction");
  const int delta = m == 12 ? 6 : 5;
  std::vector<Bits> blocks;
  for (const Bits c : candidate) {
    if (std::popcount(c) == delta) blocks.push_back(c);
  }
  require(design_lambda(blocks, m, delta / 2) == 2, "candidate weight class is not the design");
  Element sigma;
  sigma.images = w.at("sigma").get<std::vector<int>>();
  for (auto& i : sigma.images) --i;
  std::vector<Bits> mapped;
  for (const Bits c : candidate) mapped.push_back(act(sigma, c));
  std::sort(mapped.begin(), mapped.end());
  return {verdict_of(mapped == reference), mapped == reference ? "sigma maps candidate onto reference"
                                                               : "sigma does not map candidate onto reference"};
}

Checked check_theorem(const Json& w) {
  const int m = w.at("m");
  const auto code = words_of(w.at("code"));
  require(code == hadamard_code(m), "recorded code differs from the local construction");
  const auto cell = distances_to(code, m);
  const int rho = *std::max_element(cell.begin(), cell.end());
  require(w.at("covering_radius").get<int>() == rho, "covering radius differs");

  const auto table = w.at("intersection_table").get<std::vector<std::vector<std::int64_t>>>();
  bool regular = static_cast<int>(table.size()) == rho + 1;
  for (Bits v = 0; regular && v <= all_ones(m); ++v) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(m) + 1, 0);
    for (const Bits c : code) ++row[static_cast<std::size_t>(std::popcount(v ^ c))];
    regular = row == table[static_cast<std::size_t>(cell[v])];
  }

  std::vector<Element> generators;
  for (const auto& g : w.at("generators")) generators.push_back(parse_element(g.get<std::string>(), m));
  for (const auto& g : generators) {
    for (const Bits c : code) require(std::binary_search(code.begin(), code.end(), act(g, c)), "generator moves the code");
  }
  const std::size_t order = closure_size(generators, m, 2'000'000);
  require(order == w.at("group_order").get<std::size_t>(), "group order differs from the closure");
  const auto orbits = orbits_against_cells(generators, cell, m);
  require(orbits.orbit_sizes == w.at("orbit_sizes").get<std::vector<std::size_t>>(), "orbit sizes differ");

  const auto& conj = w.at("conjugation");
  const Element x = parse_element(conj.at("element").get<std::string>(), m);
  std::vector<Element> moved;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    moved.push_back(compose(compose(invert(x), generators[i]), x));
    require(parse_element(conj.at("generators").at(i).get<std::string>(), m) == moved.back(),
            "conjugated generator differs");
  }
  std::vector<Bits> image;
  for (const Bits c : code) image.push_back(act(x, c));
  std::sort(image.begin(), image.end());
  const auto moved_orbits = orbits_against_cells(moved, distances_to(image, m), m);

  const bool ok = regular && orbits.matches_cells && moved_orbits.matches_cells;
  return {verdict_of(ok), "order " + std::to_string(order) + ", " + std::to_string(orbits.orbit_sizes.size()) +
                              " orbits on " + std::to_string(std::size_t{1} << m) + " vertices"};
}

const std::map<std::string, std::function<Checked(const Json&)>>& checkers() {
  static const std::map<std::string, std::function<Checked(const Json&)>> table{
      {"classification.step1.lambda", check_lambda},
      {"classification.step2.block-count", check_block_count},
      {"classification.step3.complement-closure", check_complement_closure},
      {"classification.step3.size-forcing", check_size_forcing},
      {"classification.step3.mu", check_mu},
      {"classification.step3.reject-size-23", check_reject_23},
      {"classification.step3.fisher", check_fisher},
      {"classification.step3.antipodal", check_antipodal},
      {"classification.step4.uniqueness", check_uniqueness},
      {"classification.step5.equivalence", check_equivalence},
      {"theorem.complete-transitivity", check_theorem},
  };
  return table;
}

}  // namespace

bool ReplayReport::all_reproduced() const {
  return schema_ok && std::all_of(steps.begin(), steps.end(), [](const ReplayOutcome& s) { return s.reproduced; });
}

bool ReplayReport::all_pass() const {
  return all_reproduced() && !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const ReplayOutcome& s) { return s.recorded == Verdict::pass; });
}

ReplayOutcome replay_certificate(const Json& certificate) {
  ReplayOutcome out;
  try {
    out.anchor = certificate.at("anchor").get<std::string>();
    out.recorded = verdict_from_string(certificate.at("verdict").get<std::string>());
    const auto it = checkers().find(out.anchor);
    if (it == checkers().end()) {
      out.message = "unknown anchor";
      return out;
    }
    const auto checked = it->second(certificate.at("witness"));
    out.reproduced = checked.verdict == out.recorded;
    out.message = checked.message;
  } catch (const std::exception& e) {
    out.reproduced = false;
    out.message = std::string("witness rejected: ") + e.what();
  }
  return out;
}

ReplayReport replay_report(const Json& report) {
  ReplayReport out;
  out.schema_ok = report.contains("schema") && report.at("schema") == "creg-cert/1" && report.contains("steps");
  if (!out.schema_ok) return out;
  for (const auto& step : report.at("steps")) out.steps.push_back(replay_certificate(step));
  return out;
}

}  // namespace creg
