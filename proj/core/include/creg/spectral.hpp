#pragma once

// Krawtchouk polynomials, the MacWilliams transform, external distance and
// the wide-sense uniformly packed test, all in exact arithmetic.

#include <cstdint>
#include <optional>
#include <vector>

#include "creg/code.hpp"
#include "creg/rational.hpp"

namespace creg {

/// K_k(x) = sum_j (-1)^j binom(x, j) binom(m - x, k - j), evaluated directly.
std::int64_t krawtchouk(int m, int k, int x);

/// Full (m+1) x (m+1) table of K_k(x) for one length.
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int m);

  int length() const { return m_; }
  std::int64_t operator()(int k, int x) const {
    return values_[static_cast<std::size_t>(k) * static_cast<std::size_t>(m_ + 1) +
                   static_cast<std::size_t>(x)];
  }

 private:
  int m_;
  std::vector<std::int64_t> values_;
};

struct MacWilliamsVector {
  std::vector<Rational> values;

  /// Number of nonzero entries minus one.
  int external_distance() const;
  bool nonnegative() const;
};

/// a'_k = sum_i a_i K_k(i).
MacWilliamsVector macwilliams_transform(const DistanceDistribution& distribution);

int external_distance(const Code& code);

struct PackingSolution {
  /// lambda_0..lambda_rho when satisfied; empty otherwise.
  std::vector<Rational> lambdas;
  bool satisfied = false;
  /// Distinct (f_0(v), ..., f_rho(v)) profiles over all vertices v.
  std::vector<std::vector<int>> profiles;
  /// Number of vertices the returned solution was re-checked against.
  std::size_t vertices_checked = 0;
};

/// Solves sum_{k=0}^{rho} lambda_k f_k(v) = 1 over every vertex v, where
/// f_k(v) counts codewords at distance k from v. One summation index binds both
/// the weight and the radius. An unsatisfiable system is a verdict, not an error.
PackingSolution certify_uniformly_packed(const Code& code);

/// Reduced row-echelon solve of A x = b over the rationals. Free variables are
/// set to zero. Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b);

}  // namespace creg
