#pragma once

// t-designs on points {1..m} with blocks stored as bitmasks: verification,
// parameter arithmetic, Fisher's inequality, extension of symmetric designs,
// automorphism groups, and isomorph-free enumeration by orderly generation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "creg/certificate.hpp"
#include "creg/rational.hpp"
#include "creg/symmetry.hpp"
#include "creg/vertex.hpp"

namespace creg {

/// Two t-subsets lying in different numbers of blocks: `first` is the least
/// t-subset, `other` the least one whose count differs from it.
struct TSubsetCounterexample {
  Mask first = 0;
  std::int64_t first_count = 0;
  Mask other = 0;
  std::int64_t other_count = 0;
};

struct TDesignCheck {
  std::optional<std::int64_t> lambda;
  std::optional<TSubsetCounterexample> counterexample;

  explicit operator bool() const { return lambda.has_value(); }
};

/// Counts blocks through every t-subset of the m points. Blocks must be
/// nonempty, distinct and of equal size k >= t; otherwise ParameterError.
TDesignCheck is_t_design(int points, std::span<const Mask> blocks, int t);

/// a is covered by b when every nonzero coordinate of a is nonzero in b.
bool covers(const Vertex& b, const Vertex& a);

/// Weight-k vertices forming a 2-ary t-design: every weight-t vertex is
/// covered by the same number of them.
TDesignCheck is_t_design_by_cover(std::span<const Vertex> vertices, int t);

/// lambda * binom(m - i, t - i) / binom(k - i, t - i). ParameterError unless 0 <= i <= t <= k <= m.
Rational lambda_i(int t, int m, int k, const Rational& lambda, int i);
/// lambda_0, the number of blocks.
Rational block_count(int t, int m, int k, const Rational& lambda);
bool parameters_admissible(int t, int m, int k, std::int64_t lambda);

/// Blocks of a t-(m,k,lambda) design containing a fixed i-set and missing a
/// disjoint j-set, for i + j <= t: lambda * binom(m-i-j, k-i) / binom(m-t, k-t).
Rational intersection_number(int t, int m, int k, const Rational& lambda, int i, int j);

struct Design {
  int points = 0;
  int block_size = 0;
  int t = 0;
  std::int64_t lambda = 0;
  /// Ascending, distinct.
  std::vector<Mask> blocks;

  std::size_t block_count() const { return blocks.size(); }

  /// Sorts the blocks and checks the t-design property; ParameterError with
  /// the offending t-subsets otherwise.
  static Design verified(int points, std::vector<Mask> blocks, int t);

  friend bool operator==(const Design&, const Design&) = default;
};

/// b >= m for a 2-design with k < m. ParameterError when t < 2 or k == m.
Certificate fisher_check(const Design& design);
/// Fisher's inequality for parameters alone: a 2-(m, k, mu) design with b blocks.
Certificate fisher_check(int points, int block_size, std::int64_t block_total);

/// New point m+1 added to every block, plus the complements of the blocks
/// within the old point set. The result must verify as a 3-design, else
/// ContradictionError.
Design extend_design(const Design& design);

GroupHandle design_automorphisms(const Design& design);

/// Blocks in ascending mask order form the sequence compared
/// lexicographically; the canonical form is the least image under S_m.
std::vector<Mask> canonical_form(int points, std::span<const Mask> blocks);
bool is_canonical(int points, std::span<const Mask> blocks);

struct EnumerationOptions {
  std::uint64_t node_budget = 200'000'000;
  int threads = 1;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t canonical_nodes = 0;
};

struct EnumerationResult {
  std::vector<Design> classes;
  EnumerationStats stats;
};

/// Orderly generation: blocks are added in strictly increasing mask order and
/// every partial family must be canonical. For each disjoint S, U with
/// |S| + |U| <= t the number of blocks containing S and missing U is bounded
/// by its intersection number, and must reach it once no later block can
/// contain S while missing U. Returns one representative per isomorphism
/// class, in canonical form, sorted. ResourceError when more than 64 blocks
/// are needed or the node budget runs out.
EnumerationResult enumerate_designs(int t, int m, int k, std::int64_t lambda,
                                    const EnumerationOptions& options = {});

/// "points=<m> k=<k> t=<t> lambda=<l>" then one block per line as sorted
/// 1-based labels.
void write_design(std::ostream& out, const Design& design);
Design read_design(std::istream& in);

}  // namespace creg
