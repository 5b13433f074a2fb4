#pragma once

// Brute-force reference computations for the unit tests. Nothing here calls
// into creg; every quantity is recomputed from its definition on plain
// integers and vectors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::uint32_t;

inline std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  }
  return row[static_cast<std::size_t>(k)];
}

/// Coefficient of z^k in (1 - z)^x (1 + z)^(m - x), by polynomial products.
inline std::int64_t krawtchouk(int m, int k, int x) {
  std::vector<std::int64_t> poly{1};
  auto times = [&poly](int sign) {
    std::vector<std::int64_t> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += sign * poly[i];
    }
    poly = std::move(next);
  };
  for (int i = 0; i < x; ++i) times(-1);
  for (int i = x; i < m; ++i) times(+1);
  return poly[static_cast<std::size_t>(k)];
}

inline int distance(Word a, Word b) { return std::popcount(a ^ b); }

inline int distance_to_code(Word v, const std::vector<Word>& code) {
  int best = 64;
  for (const Word c : code) best = std::min(best, distance(v, c));
  return best;
}

inline int covering_radius(const std::vector<Word>& code, int m) {
  int rho = 0;
  for (Word v = 0; v < (Word{1} << m); ++v) rho = std::max(rho, distance_to_code(v, code));
  return rho;
}

inline int min_distance(const std::vector<Word>& code) {
  int best = 64;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, distance(code[i], code[j]));
  }
  return best;
}

/// Number of blocks through each t-subset, in ascending subset order.
inline std::vector<std::int64_t> t_subset_counts(const std::vector<Word>& blocks, int points, int t) {
  std::vector<std::int64_t> counts;
  for (Word s = 0; s < (Word{1} << points); ++s) {
    if (std::popcount(s) != t) continue;
    std::int64_t n = 0;
    for (const Word b : blocks) n += (b & s) == s;
    counts.push_back(n);
  }
  return counts;
}

/// lambda when every t-subset lies in the same number of blocks, else -1.
inline std::int64_t design_lambda(const std::vector<Word>& blocks, int points, int t) {
  const auto counts = t_subset_counts(blocks, points, t);
  if (counts.empty()) return -1;
  for (const auto c : counts) {
    if (c != counts.front()) return -1;
  }
  return counts.front();
}

/// Moves bit i to bit perm[i].
inline Word permute(Word w, const std::vector<int>& perm) {
  Word out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((w >> i) & 1U) out |= Word{1} << perm[i];
  }
  return out;
}

inline std::vector<Word> sorted_image(const std::vector<Word>& family, const std::vector<int>& perm) {
  std::vector<Word> out;
  for (const Word w : family) out.push_back(permute(w, perm));
  std::sort(out.begin(), out.end());
  return out;
}

/// Order of the group generated by permutations, by breadth-first closure on
/// image arrays.
inline std::size_t permutation_group_order(const std::vector<std::vector<int>>& generators, int degree) {
  std::vector<int> identity(static_cast<std::size_t>(degree));
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> queue{identity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<int> next(static_cast<std::size_t>(degree));
      for (int p = 0; p < degree; ++p) {
        next[static_cast<std::size_t>(p)] = g[static_cast<std::size_t>(queue[i][static_cast<std::size_t>(p)])];
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

/// Number of (flip, permutation) pairs of H(m,2) mapping the word set onto
/// itself, over all 2^m m! elements.
inline std::size_t brute_force_code_automorphisms(const std::vector<Word>& code, int m) {
  std::vector<Word> target = code;
  std::sort(target.begin(), target.end());
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    for (Word flip = 0; flip < (Word{1} << m); ++flip) {
      std::vector<Word> img;
      for (const Word c : code) img.push_back(permute(c ^ flip, perm));
      std::sort(img.begin(), img.end());
      count += img == target;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// H H^T = m I on a dense row-major +-1 matrix.
inline bool rows_orthogonal(const std::vector<int>& h, int m) {
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      long dot = 0;
      for (int k = 0; k < m; ++k) dot += h[static_cast<std::size_t>(i * m + k)] * h[static_cast<std::size_t>(j * m + k)];
      if (dot != (i == j ? m : 0)) return false;
    }
  }
  return true;
}

/// Rank of an integer matrix by fraction-free elimination.
inline int rank(std::vector<std::vector<std::int64_t>> a) {
  int r = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(r)]);
    const auto& p = a[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < a.size(); ++i) {
      const std::int64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] * p[c] - f * p[j];
      const std::int64_t g = std::accumulate(a[i].begin(), a[i].end(), std::int64_t{0},
                                             [](std::int64_t x, std::int64_t y) { return std::gcd(x, y); });
      if (g > 1) {
        for (auto& v : a[i]) v /= g;
      }
    }
    ++r;
  }
  return r;
}

/// Whether sum_{k<=rho} lambda_k f_k(v) = 1 is solvable over all vertices v:
/// the rank test rank[A] == rank[A | 1].
inline bool packing_solvable(const std::vector<Word>& code, int m, int rho) {
  std::vector<std::vector<std::int64_t>> a, augmented;
  for (Word v = 0; v < (Word{1} << m); ++v) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(rho) + 1, 0);
    for (const Word c : code) {
      const int d = distance(v, c);
      if (d <= rho) ++row[static_cast<std::size_t>(d)];
    }
    a.push_back(row);
    row.push_back(1);
    augmented.push_back(row);
  }
  return rank(a) == rank(augmented);
}

inline std::vector<int> random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(degree));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Word random_word(int m, std::mt19937_64& rng) {
  return static_cast<Word>(rng()) & ((Word{1} << m) - 1);
}

/// Least sorted image over all of S_m.
inline std::vector<Word> brute_canonical(const std::vector<Word>& blocks, int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  auto best = sorted_image(blocks, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, sorted_image(blocks, perm));
  return best;
}

/// Every labeled simple design with the given parameters, by testing each
/// b-subset of the k-subsets of the point set.
inline std::vector<std::vector<Word>> brute_labeled_designs(int t, int m, int k, std::int64_t lambda) {
  std::vector<Word> ksets;
  for (Word s = 0; s < (Word{1} << m); ++s) {
    if (std::popcount(s) == k) ksets.push_back(s);
  }
  const auto b = static_cast<std::size_t>(lambda * binom(m, t) / binom(k, t));
  std::vector<std::vector<Word>> out;
  std::vector<std::size_t> pick(b);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t n = ksets.size();
  while (true) {
    std::vector<Word> blocks;
    for (const auto i : pick) blocks.push_back(ksets[i]);
    if (design_lambda(blocks, m, t) == lambda) out.push_back(blocks);
    std::size_t i = b;
    while (i > 0 && pick[i - 1] == n - b + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < b; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace oracle
