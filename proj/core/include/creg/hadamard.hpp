#pragma once

// Hadamard matrices, monomial matrices, the kappa map between +-1 vectors and
// vertices, Hadamard codes, and the transfer of code automorphisms to matrix
// automorphisms.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "creg/code.hpp"
#include "creg/symmetry.hpp"

namespace creg {

/// Square +-1 matrix with H H^T = m I, checked on construction.
class HadamardMatrix {
 public:
  /// Row-major entries; throws ParameterError naming the first non-orthogonal
  /// row pair or the first entry outside {+1, -1}.
  HadamardMatrix(int order, std::vector<int> entries);

  int order() const { return order_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j)];
  }
  std::span<const int> row(int i) const {
    return std::span<const int>(entries_).subspan(static_cast<std::size_t>(i) * static_cast<std::size_t>(order_),
                                                  static_cast<std::size_t>(order_));
  }
  std::span<const int> entries() const { return entries_; }

  /// Negate each row whose first entry is -1, then each column whose top entry is -1.
  HadamardMatrix normalized() const;
  bool is_normalized() const;

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  int order_;
  std::vector<int> entries_;
};

/// Paley type I matrix for a prime q = 3 (mod 4) with q + 1 <= 24, before
/// normalization: I + [[0, 1^T], [-1, Q]] with Q the Jacobsthal matrix of the
/// quadratic character.
HadamardMatrix paley_hadamard(int q);

/// The normalized Paley matrix of order 12.
HadamardMatrix paley_hadamard_12();

/// U = U_D U_sigma: dense entry (i, sigma(i)) equals signs[i].
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<int> signs, Permutation permutation);
  static MonomialMatrix identity(int order);
  static MonomialMatrix negated_identity(int order);

  int order() const { return static_cast<int>(signs_.size()); }
  std::span<const int> signs() const { return signs_; }
  const Permutation& permutation() const { return permutation_; }

  MonomialMatrix operator*(const MonomialMatrix& right) const;
  MonomialMatrix inverse() const;
  std::vector<int> dense() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<int> signs_;
  Permutation permutation_;
};

struct MatrixAutomorphism {
  MonomialMatrix p;
  MonomialMatrix u;
};

/// Entrywise -1 -> 1, +1 -> 0.
Vertex kappa(std::span<const int> v);
std::vector<int> kappa_inverse(const Vertex& a);

/// Row vector times monomial matrix.
std::vector<int> multiply(std::span<const int> v, const MonomialMatrix& u);
/// P H U as a dense row-major matrix (not necessarily Hadamard-checked).
std::vector<int> multiply(const MonomialMatrix& p, const HadamardMatrix& h, const MonomialMatrix& u);

/// {kappa(r) : r a row of H or -H}.
Code code_of(const HadamardMatrix& h);

/// Flip coordinate i iff u_i = -1, permutation part sigma.
GraphAutomorphism theta(const MonomialMatrix& u);
MonomialMatrix theta_inverse(const GraphAutomorphism& x);

bool is_matrix_automorphism(const MonomialMatrix& p, const MonomialMatrix& u, const HadamardMatrix& h);

/// U = theta^{-1}(x), P = H U^{-1} H^T / m. Throws ParameterError when x does
/// not stabilize code_of(H) and ContradictionError when P is not monomial or
/// P H U != H.
MatrixAutomorphism transfer_from_code_automorphism(const GraphAutomorphism& x, const HadamardMatrix& h);

/// "order=<m>" then m lines over '+' and '-'.
void write_matrix(std::ostream& out, const HadamardMatrix& h);
void write_matrix_file(const std::string& path, const HadamardMatrix& h);
HadamardMatrix read_matrix(std::istream& in);
HadamardMatrix read_matrix_file(const std::string& path);

}  // namespace creg
