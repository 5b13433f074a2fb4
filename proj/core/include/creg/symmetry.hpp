#pragma once

// Aut(H(m,2)) = B x| L as (flip mask, coordinate permutation) pairs, group
// closure, orbits, setwise stabilizers of set systems by backtracking, code
// automorphism groups and code equivalence.
//
// Composition convention: x * y applies x first, then y (right action), so
// apply(x * y, a) == apply(y, apply(x, a)).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "creg/code.hpp"
#include "creg/vertex.hpp"

namespace creg {

/// A permutation of {0, ..., degree-1}; point i maps to (*this)[i].
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  /// 0-based images; throws ParameterError unless they form a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_one_based(std::span<const int> images);

  int degree() const { return degree_; }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }

  Permutation inverse() const;
  /// this first, then `next`.
  Permutation then(const Permutation& next) const;

  /// Moves bit i to bit (*this)[i].
  Mask apply(Mask bits) const;

  bool is_identity() const;
  std::vector<int> one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kMaxLength> images_{};
  std::uint8_t degree_ = 0;
};

/// Element (g, sigma) of B x| L acting by a -> sigma(a XOR g).
class GraphAutomorphism {
 public:
  GraphAutomorphism() = default;
  GraphAutomorphism(Mask translation, Permutation permutation);

  static GraphAutomorphism identity(int length);
  static GraphAutomorphism translation_by(Mask translation, int length);
  static GraphAutomorphism permuting(Permutation permutation);

  int length() const { return permutation_.degree(); }
  Mask translation() const { return translation_; }
  const Permutation& permutation() const { return permutation_; }

  Mask apply(Mask a) const { return permutation_.apply(a ^ translation_); }

  GraphAutomorphism operator*(const GraphAutomorphism& next) const;
  GraphAutomorphism inverse() const;

  bool is_identity() const { return translation_ == 0 && permutation_.is_identity(); }
  bool is_pure_permutation() const { return translation_ == 0; }

  /// "<flip mask as 0/1 string>|<images of 1..m, space separated>"
  std::string to_string() const;
  static GraphAutomorphism parse(std::string_view line);

  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
  friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;

 private:
  Mask translation_ = 0;
  Permutation permutation_;
};

struct GraphAutomorphismHash {
  std::size_t operator()(const GraphAutomorphism& x) const noexcept;
};

Vertex apply(const GraphAutomorphism& x, const Vertex& a);

/// True when the image of every word of `code` is again a codeword.
bool stabilizes(const GraphAutomorphism& x, const Code& code);

inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

/// A subgroup of Aut(H(m,2)) given by generators, optionally with its full
/// element list (after closure) and a known order.
class GroupHandle {
 public:
  GroupHandle(int degree, std::vector<GraphAutomorphism> generators,
              std::optional<std::uint64_t> order = std::nullopt);

  int degree() const { return degree_; }
  std::span<const GraphAutomorphism> generators() const { return generators_; }
  std::optional<std::uint64_t> order() const { return order_; }

  bool is_enumerated() const { return elements_ != nullptr; }
  /// Requires is_enumerated(). Identity first, then breadth-first order.
  std::span<const GraphAutomorphism> elements() const;
  bool contains(const GraphAutomorphism& x) const;

 private:
  friend GroupHandle closure(const GroupHandle& group, std::size_t budget);
  struct Elements;

  int degree_;
  std::vector<GraphAutomorphism> generators_;
  std::optional<std::uint64_t> order_;
  std::shared_ptr<const Elements> elements_;
};

/// Enumerates every element generated by the group's generators. Throws
/// ResourceError naming the budget when the group is larger than `budget`.
GroupHandle closure(const GroupHandle& group, std::size_t budget = kDefaultElementBudget);

/// Picks a generating set for the subgroup formed by `elements` (which must be
/// closed under composition), scanning in order and keeping each element not
/// yet generated.
GroupHandle subgroup_from_elements(int degree, std::span<const GraphAutomorphism> elements,
                                   std::size_t budget = kDefaultElementBudget);

GroupHandle stabilizer_of_vertex(const GroupHandle& group, Mask vertex,
                                 std::size_t budget = kDefaultElementBudget);
/// Elements whose permutation part fixes the 1-based coordinate.
GroupHandle stabilizer_of_coordinate(const GroupHandle& group, int coordinate,
                                     std::size_t budget = kDefaultElementBudget);

/// {sigma in S_m : sigma(family) = family}, by individualization-refinement
/// backtracking along the base 1, ..., m. The order is the product of basic
/// orbit lengths.
GroupHandle setwise_stabilizer_perms(int m, std::span<const Mask> family);

/// Some sigma in S_m with sigma(from) = to as set systems, or nullopt after an
/// exhaustive search.
std::optional<Permutation> find_set_system_map(int m, std::span<const Mask> from,
                                               std::span<const Mask> to);

/// Aut(C): the zero-stabilizer from the support family, plus one element per
/// orbit of the zero word found by translation and permutation repair.
GroupHandle code_automorphism_group(const Code& code);

/// Orbits with each orbit ascending and orbits ordered by least element.
using Orbits = std::vector<std::vector<Mask>>;

std::vector<Mask> orbit_of(const GroupHandle& group, Mask start);
Orbits orbits(const GroupHandle& group);
/// Orbits on a vertex set that the generators must leave invariant.
Orbits orbits(const GroupHandle& group, std::span<const Mask> domain);
/// Induced action on k-subsets of coordinates; generators must be pure
/// permutations.
Orbits orbits_on_ksubsets(const GroupHandle& group, int k);

/// Largest k for which the permutation parts act k-transitively on the
/// coordinates (0 when intransitive).
int transitivity_degree(const GroupHandle& group);

/// The induced action chi on H(J,2) for a group stabilizing the 1-based
/// coordinate set J. Generators that act trivially on J are dropped.
GroupHandle project_group(const GroupHandle& group, std::span<const int> coordinates);

/// Image of a single element under chi.
GraphAutomorphism project_element(const GraphAutomorphism& x, std::span<const int> coordinates);

/// True when chi restricted to the (enumerated) group has trivial kernel.
bool projection_is_injective(const GroupHandle& group, std::span<const int> coordinates);

/// Some x in Aut(H(m,2)) with x(a) = b, or nullopt once the search is
/// exhausted. Distance distributions are compared first.
std::optional<GraphAutomorphism> find_equivalence(const Code& a, const Code& b);

/// As find_equivalence, restricted to coordinate permutations.
std::optional<Permutation> find_permutation_equivalence(const Code& a, const Code& b);

Code image(const Code& code, const GraphAutomorphism& x);

void write_generators(std::ostream& out, std::span<const GraphAutomorphism> generators);
/// Reads one automorphism per line; blank and '#' lines are skipped.
std::vector<GraphAutomorphism> read_generators(std::istream& in);

}  // namespace creg
