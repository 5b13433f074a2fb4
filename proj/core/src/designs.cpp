#include "creg/designs.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <map>

namespace creg {

// ---------------------------------------------------------------------------
// Verification and parameters

namespace {

int common_block_size(int points, std::span<const Mask> blocks) {
  check_length(points);
  if (blocks.empty()) throw ParameterError("a design needs at least one block");
  const int k = popcount(blocks.front());
  for (const Mask b : blocks) {
    if ((b & ~full_mask(points)) != 0) throw ParameterError("block uses a point outside the point set");
    if (popcount(b) != k) throw ParameterError("blocks have unequal sizes");
  }
  std::vector<Mask> sorted(blocks.begin(), blocks.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("repeated block");
  }
  return k;
}

std::string labels(Mask b) {
  std::string out = "{";
  bool first = true;
  for (const int p : support(b)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace

TDesignCheck is_t_design(int points, std::span<const Mask> blocks, int t) {
  const int k = common_block_size(points, blocks);
  if (t < 0 || t > k) throw ParameterError("design strength outside [0, k]");
  TDesignCheck out;
  bool have_first = false;
  TSubsetCounterexample witness;
  for (const Mask subset : ksubsets(points, t)) {
    std::int64_t count = 0;
    for (const Mask b : blocks) count += (b & subset) == subset ? 1 : 0;
    if (!have_first) {
      witness.first = subset;
      witness.first_count = count;
      have_first = true;
    } else if (count != witness.first_count) {
      witness.other = subset;
      witness.other_count = count;
      out.counterexample = witness;
      return out;
    }
  }
  out.lambda = witness.first_count;
  return out;
}

bool covers(const Vertex& b, const Vertex& a) {
  if (a.length() != b.length()) throw ParameterError("cover relation needs equal lengths");
  for (int i = 0; i < a.length(); ++i) {
    if (a.at(i + 1) != 0 && b.at(i + 1) == 0) return false;
  }
  return true;
}

TDesignCheck is_t_design_by_cover(std::span<const Vertex> vertices, int t) {
  if (vertices.empty()) throw ParameterError("a design needs at least one block");
  const int m = vertices.front().length();
  std::vector<Mask> masks;
  for (const auto& v : vertices) {
    if (v.length() != m) throw ParameterError("vertices of unequal length");
    masks.push_back(v.bits());
  }
  const int k = common_block_size(m, masks);
  if (t < 0 || t > k) throw ParameterError("design strength outside [0, k]");
  TDesignCheck out;
  bool have_first = false;
  TSubsetCounterexample witness;
  for (const Mask subset : ksubsets(m, t)) {
    const Vertex alpha(subset, m);
    std::int64_t count = 0;
    for (const auto& beta : vertices) count += covers(beta, alpha) ? 1 : 0;
    if (!have_first) {
      witness.first = subset;
      witness.first_count = count;
      have_first = true;
    } else if (count != witness.first_count) {
      witness.other = subset;
      witness.other_count = count;
      out.counterexample = witness;
      return out;
    }
  }
  out.lambda = witness.first_count;
  return out;
}

Rational lambda_i(int t, int m, int k, const Rational& lambda, int i) {
  if (i < 0 || i > t || t > k || k > m) throw ParameterError("need 0 <= i <= t <= k <= m");
  return lambda * Rational(binomial(m - i, t - i)) / Rational(binomial(k - i, t - i));
}

Rational block_count(int t, int m, int k, const Rational& lambda) { return lambda_i(t, m, k, lambda, 0); }

bool parameters_admissible(int t, int m, int k, std::int64_t lambda) {
  if (t < 0 || t > k || k > m || lambda < 1) return false;
  for (int i = 0; i <= t; ++i) {
    if (!is_integral(lambda_i(t, m, k, Rational(lambda), i))) return false;
  }
  return true;
}

Rational intersection_number(int t, int m, int k, const Rational& lambda, int i, int j) {
  if (i < 0 || j < 0 || i + j > t || t > k || k > m) throw ParameterError("need i + j <= t <= k <= m");
  return lambda * Rational(binomial(m - i - j, k - i)) / Rational(binomial(m - t, k - t));
}

Design Design::verified(int points, std::vector<Mask> blocks, int t) {
  const auto check = is_t_design(points, blocks, t);
  if (!check) {
    const auto& x = *check.counterexample;
    throw ParameterError("not a " + std::to_string(t) + "-design: " + labels(x.first) + " lies in " +
                         std::to_string(x.first_count) + " blocks but " + labels(x.other) + " in " +
                         std::to_string(x.other_count));
  }
  Design d;
  d.points = points;
  d.block_size = popcount(blocks.front());
  d.t = t;
  d.lambda = *check.lambda;
  std::sort(blocks.begin(), blocks.end());
  d.blocks = std::move(blocks);
  return d;
}

Certificate fisher_check(int points, int block_size, std::int64_t block_total) {
  Certificate c;
  c.claim = "a 2-design on " + std::to_string(points) + " points with block size " + std::to_string(block_size) +
            " has at least as many blocks as points";
  c.anchor = "designs.fisher";
  c.witness = {{"points", points}, {"block_size", block_size}, {"blocks", block_total}};
  c.verdict = block_total >= points ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate fisher_check(const Design& design) {
  if (design.t < 2) throw ParameterError("Fisher's inequality needs a 2-design");
  if (design.block_size >= design.points) throw ParameterError("Fisher's inequality needs k < m");
  return fisher_check(design.points, design.block_size, static_cast<std::int64_t>(design.block_count()));
}

Design extend_design(const Design& design) {
  const int m = design.points;
  if (design.t < 2) throw ParameterError("extension needs a 2-design");
  check_length(m + 1);
  const Mask old_points = full_mask(m);
  const Mask new_point = Mask{1} << m;
  std::vector<Mask> blocks;
  for (const Mask b : design.blocks) {
    blocks.push_back(b | new_point);
    blocks.push_back(old_points & ~b);
  }
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end() ||
      popcount(blocks.front()) != popcount(blocks.back())) {
    throw ContradictionError("extension does not give equal-size distinct blocks", Json{{"points", m + 1}});
  }
  const auto check = is_t_design(m + 1, blocks, 3);
  if (!check) {
    const auto& x = *check.counterexample;
    throw ContradictionError("extension is not a 3-design",
                             Json{{"first", labels(x.first)},
                                  {"first_count", x.first_count},
                                  {"other", labels(x.other)},
                                  {"other_count", x.other_count}});
  }
  Design out;
  out.points = m + 1;
  out.block_size = popcount(blocks.front());
  out.t = 3;
  out.lambda = *check.lambda;
  out.blocks = std::move(blocks);
  return out;
}

GroupHandle design_automorphisms(const Design& design) {
  return setwise_stabilizer_perms(design.points, design.blocks);
}

// ---------------------------------------------------------------------------
// Canonical form
//
// A search state fixes sigma(source_j) = target_j for the first levels. Such
// sigma are exactly the bijections preserving the per-point membership
// signature, so the least image of a further source block is obtained by
// taking, within each signature class, the lowest target points.

namespace {

struct TargetClasses {
  std::vector<std::uint64_t> signatures;
  std::vector<std::vector<int>> points;

  TargetClasses(int m, std::span<const Mask> targets) {
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(m), 0);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      for (int p = 0; p < m; ++p) {
        if ((targets[j] >> p) & 1U) sig[static_cast<std::size_t>(p)] |= std::uint64_t{1} << j;
      }
    }
    for (int p = 0; p < m; ++p) {
      const auto s = sig[static_cast<std::size_t>(p)];
      const auto it = std::find(signatures.begin(), signatures.end(), s);
      if (it == signatures.end()) {
        signatures.push_back(s);
        points.push_back({p});
      } else {
        points[static_cast<std::size_t>(it - signatures.begin())].push_back(p);
      }
    }
  }

  int class_of(std::uint64_t signature) const {
    const auto it = std::find(signatures.begin(), signatures.end(), signature);
    return it == signatures.end() ? -1 : static_cast<int>(it - signatures.begin());
  }
};

struct State {
  std::vector<std::uint64_t> signature;  // per source point
  std::uint64_t used = 0;                // source block indices already matched
};

class ImageBound {
 public:
  ImageBound(const TargetClasses& classes, const State& state, int m) : classes_(classes) {
    cls_.resize(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) cls_[static_cast<std::size_t>(p)] = classes.class_of(state.signature[static_cast<std::size_t>(p)]);
  }

  Mask least_image(Mask block) const {
    std::array<int, kMaxLength> counts{};
    while (block != 0) {
      const int p = std::countr_zero(block);
      block &= block - 1;
      ++counts[static_cast<std::size_t>(cls_[static_cast<std::size_t>(p)])];
    }
    Mask image = 0;
    for (std::size_t c = 0; c < classes_.points.size(); ++c) {
      for (int i = 0; i < counts[c]; ++i) image |= Mask{1} << classes_.points[c][static_cast<std::size_t>(i)];
    }
    return image;
  }

 private:
  const TargetClasses& classes_;
  std::vector<int> cls_;
};

State refine(const State& state, Mask block, std::size_t index, std::size_t level, int m) {
  State next = state;
  next.used |= std::uint64_t{1} << index;
  for (int p = 0; p < m; ++p) {
    if ((block >> p) & 1U) next.signature[static_cast<std::size_t>(p)] |= std::uint64_t{1} << level;
  }
  return next;
}

std::vector<Mask> sorted_blocks(int points, std::span<const Mask> blocks) {
  check_length(points);
  std::vector<Mask> out(blocks.begin(), blocks.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > 64) throw ResourceError("canonical form supports at most 64 blocks");
  for (const Mask b : out) {
    if ((b & ~full_mask(points)) != 0) throw ParameterError("block uses a point outside the point set");
  }
  return out;
}

/// Depth-first search for sigma with sorted(sigma F) < F.
class SmallerImageSearch {
 public:
  SmallerImageSearch(int m, std::vector<Mask> family) : m_(m), family_(std::move(family)) {
    for (std::size_t i = 0; i < family_.size(); ++i) {
      classes_.emplace_back(m_, std::span<const Mask>(family_).first(i));
    }
  }

  bool exists() {
    State root{std::vector<std::uint64_t>(static_cast<std::size_t>(m_), 0), 0};
    return search(root, 0);
  }

 private:
  bool search(const State& state, std::size_t level) {
    if (level == family_.size()) return false;
    const ImageBound bound(classes_[level], state, m_);
    const Mask target = family_[level];
    std::vector<std::size_t> children;
    for (std::size_t d = 0; d < family_.size(); ++d) {
      if ((state.used >> d) & 1U) continue;
      const Mask image = bound.least_image(family_[d]);
      if (image < target) return true;
      if (image == target) children.push_back(d);
    }
    for (const auto d : children) {
      if (search(refine(state, family_[d], d, level, m_), level + 1)) return true;
    }
    return false;
  }

  int m_;
  std::vector<Mask> family_;
  std::vector<TargetClasses> classes_;
};

}  // namespace

bool is_canonical(int points, std::span<const Mask> blocks) {
  auto family = sorted_blocks(points, blocks);
  return !SmallerImageSearch(points, std::move(family)).exists();
}

std::vector<Mask> canonical_form(int points, std::span<const Mask> blocks) {
  const auto family = sorted_blocks(points, blocks);
  const int m = points;
  std::vector<Mask> target;
  std::vector<State> frontier{State{std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0), 0}};
  for (std::size_t level = 0; level < family.size(); ++level) {
    const TargetClasses classes(m, target);
    Mask best = ~Mask{0};
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t s = 0; s < frontier.size(); ++s) {
      const ImageBound bound(classes, frontier[s], m);
      for (std::size_t d = 0; d < family.size(); ++d) {
        if ((frontier[s].used >> d) & 1U) continue;
        const Mask image = bound.least_image(family[d]);
        if (image < best) {
          best = image;
          chosen.clear();
        }
        if (image == best) chosen.emplace_back(s, d);
      }
    }
    target.push_back(best);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<State> next;
    for (const auto& [s, d] : chosen) {
      auto refined = refine(frontier[s], family[d], d, level, m);
      if (seen.insert(refined.signature).second) next.push_back(std::move(refined));
    }
    frontier = std::move(next);
  }
  return target;
}

// ---------------------------------------------------------------------------
// Orderly generation

namespace {

/// Places the bits of `pattern` (over `width` positions) onto the set bits of
/// `positions`, lowest first.
Mask spread_over(Mask pattern, Mask positions, int width) {
  Mask out = 0;
  for (int i = 0; i < width; ++i) {
    const int p = std::countr_zero(positions);
    positions &= positions - 1;
    if ((pattern >> i) & 1U) out |= Mask{1} << p;
  }
  return out;
}

/// The largest k-set containing `inside` and avoiding `outside`; 0 if none.
Mask largest_block(Mask inside, Mask outside, int k, int m) {
  Mask block = inside;
  int missing = k - popcount(inside);
  for (int p = m - 1; p >= 0 && missing > 0; --p) {
    if (!(((block | outside) >> p) & 1U)) {
      block |= Mask{1} << p;
      --missing;
    }
  }
  return missing > 0 ? 0 : block;
}

class OrderlyGenerator {
 public:
  OrderlyGenerator(int t, int m, int k, std::int64_t lambda, std::size_t blocks, std::uint64_t budget,
                   std::atomic<std::uint64_t>& nodes)
      : t_(t), m_(m), target_blocks_(blocks), budget_(budget), nodes_(nodes) {
    candidates_ = ksubsets(m, k);
    // One counter per disjoint pair (S, U) with |S| + |U| <= t: blocks
    // containing S and avoiding U.
    std::map<std::pair<Mask, Mask>, int> index;
    for (int i = 0; i <= t; ++i) {
      for (const Mask inside : ksubsets(m, i)) {
        for (int j = 0; i + j <= t; ++j) {
          for (const Mask spread : ksubsets(m - i, j)) {
            const Mask outside = spread_over(spread, full_mask(m) & ~inside, m - i);
            index.emplace(std::make_pair(inside, outside), static_cast<int>(targets_.size()));
            targets_.push_back(static_cast<std::int64_t>(intersection_number(t, m, k, Rational(lambda), i, j)));
            deadlines_.emplace_back(largest_block(inside, outside, k, m), static_cast<int>(targets_.size()) - 1);
          }
        }
      }
    }
    std::sort(deadlines_.begin(), deadlines_.end());
    counts_.assign(targets_.size(), 0);

    touched_.resize(candidates_.size());
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      const Mask block = candidates_[c];
      const Mask rest = full_mask(m) & ~block;
      for (int i = 0; i <= t; ++i) {
        for (const Mask a : ksubsets(k, i)) {
          const Mask inside = spread_over(a, block, k);
          for (int j = 0; i + j <= t; ++j) {
            for (const Mask b : ksubsets(m - k, j)) {
              touched_[c].push_back(index.at({inside, spread_over(b, rest, m - k)}));
            }
          }
        }
      }
    }
  }

  /// Extensions of the current family by candidates after `last`, or the
  /// family itself when complete. Used to split the search tree.
  bool try_push(std::size_t candidate) {
    const Mask block = candidates_[candidate];
    for (const int s : touched_[candidate]) {
      if (counts_[static_cast<std::size_t>(s)] >= targets_[static_cast<std::size_t>(s)]) return false;
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw ResourceError("design enumeration exceeded the node budget of " + std::to_string(budget_));
    }
    ++stats_.nodes;
    const Mask previous = family_.empty() ? Mask{0} : family_.back();
    apply(candidate, +1);
    family_.push_back(block);
    chosen_.push_back(candidate);
    // Every counter whose last possible block has passed must be complete.
    auto lo = std::upper_bound(deadlines_.begin(), deadlines_.end(), std::make_pair(previous, std::numeric_limits<int>::max()));
    if (family_.size() == 1) lo = deadlines_.begin();
    const auto hi = std::upper_bound(deadlines_.begin(), deadlines_.end(), std::make_pair(block, std::numeric_limits<int>::max()));
    for (auto it = lo; it != hi; ++it) {
      if (counts_[static_cast<std::size_t>(it->second)] != targets_[static_cast<std::size_t>(it->second)]) {
        pop();
        return false;
      }
    }
    if (!is_canonical(m_, family_)) {
      pop();
      return false;
    }
    ++stats_.canonical_nodes;
    return true;
  }

  void pop() {
    apply(chosen_.back(), -1);
    family_.pop_back();
    chosen_.pop_back();
  }

  void run(std::vector<Design>& found) {
    if (family_.size() == target_blocks_) {
      found.push_back(Design::verified(m_, family_, t_));
      return;
    }
    const std::size_t start = chosen_.empty() ? 0 : chosen_.back() + 1;
    const std::size_t needed = target_blocks_ - family_.size();
    for (std::size_t c = start; c + needed <= candidates_.size(); ++c) {
      if (!try_push(c)) continue;
      run(found);
      pop();
    }
  }

  /// Canonical partial families of the given size, as candidate index lists.
  void collect(std::size_t depth, std::vector<std::vector<std::size_t>>& out) {
    if (family_.size() == depth || family_.size() == target_blocks_) {
      out.push_back(chosen_);
      return;
    }
    const std::size_t start = chosen_.empty() ? 0 : chosen_.back() + 1;
    const std::size_t needed = target_blocks_ - family_.size();
    for (std::size_t c = start; c + needed <= candidates_.size(); ++c) {
      if (!try_push(c)) continue;
      collect(depth, out);
      pop();
    }
  }

  /// Replays a prefix found by collect() without re-counting its nodes.
  void load(const std::vector<std::size_t>& prefix) {
    for (const auto c : prefix) {
      apply(c, +1);
      family_.push_back(candidates_[c]);
      chosen_.push_back(c);
    }
  }

  const EnumerationStats& stats() const { return stats_; }

 private:
  void apply(std::size_t candidate, int delta) {
    for (const int s : touched_[candidate]) counts_[static_cast<std::size_t>(s)] += delta;
  }

  int t_;
  int m_;
  std::size_t target_blocks_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;

  std::vector<Mask> candidates_;
  std::vector<std::int64_t> targets_;
  std::vector<std::pair<Mask, int>> deadlines_;
  std::vector<std::vector<int>> touched_;
  std::vector<std::int64_t> counts_;
  std::vector<Mask> family_;
  std::vector<std::size_t> chosen_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationResult enumerate_designs(int t, int m, int k, std::int64_t lambda, const EnumerationOptions& options) {
  check_length(m);
  if (t < 1 || t > k || k > m || lambda < 1) throw ParameterError("need 1 <= t <= k <= m and lambda >= 1");
  EnumerationResult result;
  if (!parameters_admissible(t, m, k, lambda)) return result;
  for (int i = 0; i <= t; ++i) {
    for (int j = 0; i + j <= t; ++j) {
      if (!is_integral(intersection_number(t, m, k, Rational(lambda), i, j))) return result;
    }
  }
  const auto b = block_count(t, m, k, Rational(lambda));
  if (b > 64) throw ResourceError("design enumeration supports at most 64 blocks");
  if (b > Rational(binomial(m, k))) return result;
  const auto blocks = static_cast<std::size_t>(static_cast<std::int64_t>(b));

  std::atomic<std::uint64_t> nodes{0};
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    OrderlyGenerator gen(t, m, k, lambda, blocks, options.node_budget, nodes);
    gen.run(result.classes);
    result.stats = gen.stats();
  } else {
    OrderlyGenerator splitter(t, m, k, lambda, blocks, options.node_budget, nodes);
    std::vector<std::vector<std::size_t>> prefixes;
    splitter.collect(std::min<std::size_t>(4, blocks), prefixes);
    result.stats = splitter.stats();

    std::atomic<std::size_t> next{0};
    std::mutex merge;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            OrderlyGenerator gen(t, m, k, lambda, blocks, options.node_budget, nodes);
            gen.load(prefixes[i]);
            std::vector<Design> found;
            gen.run(found);
            const std::lock_guard lock(merge);
            result.classes.insert(result.classes.end(), found.begin(), found.end());
            result.stats.nodes += gen.stats().nodes;
            result.stats.canonical_nodes += gen.stats().canonical_nodes;
          }
        } catch (...) {
          const std::lock_guard lock(merge);
          if (!failure) failure = std::current_exception();
          next = prefixes.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const Design& a, const Design& b2) { return a.blocks < b2.blocks; });
  return result;
}

// ---------------------------------------------------------------------------
// Files

void write_design(std::ostream& out, const Design& design) {
  out << "points=" << design.points << " k=" << design.block_size << " t=" << design.t
      << " lambda=" << design.lambda << '\n';
  for (const Mask b : design.blocks) {
    const auto pts = support(b);
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i];
    out << '\n';
  }
}

Design read_design(std::istream& in) {
  std::string line;
  int line_number = 0;
  int points = -1;
  int k = -1;
  int t = -1;
  std::int64_t lambda = -1;
  std::vector<Mask> blocks;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (points < 0) {
      std::istringstream header(line);
      std::string field;
      while (header >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw FormatError("malformed header field '" + field + "'", line_number);
        const std::string key = field.substr(0, eq);
        long long value = 0;
        try {
          std::size_t used = 0;
          value = std::stoll(field.substr(eq + 1), &used);
          if (used != field.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw FormatError("non-integer value in '" + field + "'", line_number);
        }
        if (key == "points") points = static_cast<int>(value);
        else if (key == "k") k = static_cast<int>(value);
        else if (key == "t") t = static_cast<int>(value);
        else if (key == "lambda") lambda = value;
        else throw FormatError("unknown header field '" + key + "'", line_number);
      }
      if (points < 1 || points > kMaxLength || k < 0 || t < 0 || lambda < 0) {
        throw FormatError("header needs points=<m> k=<k> t=<t> lambda=<l>", line_number);
      }
      continue;
    }
    std::istringstream row(line);
    Mask block = 0;
    int label = 0;
    while (row >> label) {
      if (label < 1 || label > points) throw FormatError("point label out of range", line_number);
      if ((block >> (label - 1)) & 1U) throw FormatError("repeated point label", line_number);
      block |= Mask{1} << (label - 1);
    }
    if (!row.eof()) throw FormatError("non-numeric point label", line_number);
    if (popcount(block) != k) throw FormatError("block size differs from k", line_number);
    blocks.push_back(block);
  }
  if (points < 0) throw FormatError("missing design header", line_number + 1);
  Design d;
  try {
    d = Design::verified(points, std::move(blocks), t);
  } catch (const ParameterError& e) {
    throw FormatError(e.what(), line_number);
  }
  if (d.lambda != lambda) {
    throw FormatError("header lambda " + std::to_string(lambda) + " but blocks give " + std::to_string(d.lambda),
                      line_number);
  }
  return d;
}

}  // namespace creg
