#pragma once

// Complete regularity via the outer distribution, complete transitivity via
// group orbits, and transitivity on a cell via orbits of a codeword
// stabilizer.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "creg/certificate.hpp"
#include "creg/code.hpp"
#include "creg/symmetry.hpp"

namespace creg {

/// f_k(v) = |Gamma_k(v) ∩ C| for k = 0..m.
std::vector<std::int64_t> outer_row(const Code& code, Mask v);

/// Two vertices of one cell whose rows first differ at `radius`. `reference`
/// is the least vertex of the cell; `vertex` is the least vertex disagreeing
/// with it.
struct RegularityCounterexample {
  int cell = 0;
  Mask reference = 0;
  Mask vertex = 0;
  int radius = 0;
  std::int64_t reference_count = 0;
  std::int64_t vertex_count = 0;
};

struct OuterDistribution {
  int length = 0;
  int covering_radius = 0;
  /// Least vertex of each cell and its row.
  std::vector<Mask> representatives;
  std::vector<std::vector<std::int64_t>> rows;
  std::optional<RegularityCounterexample> counterexample;

  bool constant_on_cells() const { return !counterexample.has_value(); }
};

/// Scans every vertex against its cell representative. Vertex ranges are split
/// across `threads` workers; the reported counterexample is the least failing
/// vertex regardless of the split.
OuterDistribution outer_distribution(const Code& code, int threads = 1);

struct RegularityCertificate {
  bool completely_regular = false;
  int covering_radius = 0;
  /// (rho+1) x (m+1); empty unless completely regular.
  std::vector<std::vector<std::int64_t>> intersection_table;
  std::optional<RegularityCounterexample> counterexample;

  Certificate to_certificate() const;
};

RegularityCertificate certify_completely_regular(const Code& code, int threads = 1);

struct TransitivityReport {
  bool completely_transitive = false;
  /// Always computed alongside; transitive without regular throws.
  bool completely_regular = false;
  std::vector<std::size_t> cell_sizes;
  /// Orbits ordered by least element.
  std::vector<std::size_t> orbit_sizes;
  std::vector<Mask> orbit_representatives;
  /// Number of orbits meeting each cell.
  std::vector<int> orbits_per_cell;
  std::optional<std::uint64_t> group_order;

  Certificate to_certificate() const;
};

/// Every generator must stabilize the code; otherwise PreconditionError with
/// the generator and a codeword it moves off the code.
TransitivityReport certify_completely_transitive(const Code& code, const GroupHandle& group,
                                                 int threads = 1);

struct StabilizerTransitivity {
  int cell = 0;
  Mask alpha = 0;
  std::uint64_t stabilizer_order = 0;
  /// |Gamma_i(alpha) ∩ C_i| and the orbit sizes of the stabilizer on it.
  std::size_t target_size = 0;
  std::vector<std::size_t> orbit_sizes;
  bool transitive_on_cell = false;

  Certificate to_certificate() const;
};

/// Checks that G_alpha is transitive on Gamma_i(alpha) ∩ C_i, which, with G
/// transitive on C, makes G transitive on C_i. Throws PreconditionError with
/// the orbits on C when G is not transitive on C.
StabilizerTransitivity transitivity_by_stabilizer(const Code& code, const GroupHandle& group, int cell,
                                                  std::optional<Mask> alpha = std::nullopt,
                                                  std::size_t budget = kDefaultElementBudget);

}  // namespace creg
