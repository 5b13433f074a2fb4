#pragma once

// Codes as vertex sets in H(m,2): parameters, distance partition, distance
// distribution, puncturing, projection, parity extension, antipodality.

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "creg/rational.hpp"
#include "creg/vertex.hpp"

namespace creg {

/// Malformed code/matrix/design/generator file. Carries the 1-based line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An immutable, sorted, duplicate-free set of words of a common length.
///
/// Minimum distance and the per-vertex distance table (which gives the
/// covering radius and the distance partition) are computed lazily, at most
/// once, and shared between copies.
class Code {
 public:
  Code(int length, std::vector<Mask> words);
  Code(int length, std::span<const Vertex> words);

  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  std::span<const Mask> words() const { return words_; }
  std::vector<Vertex> vertices() const;
  bool contains(Mask word) const;

  /// Minimum distance; throws UndefinedParameterError when |C| < 2.
  int min_distance() const;
  bool has_min_distance() const { return words_.size() >= 2; }

  int covering_radius() const;

  /// d(v, C) for every vertex v of H(m,2), indexed by v's mask.
  std::span<const std::uint8_t> distance_table() const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  struct Cache;

  int length_;
  std::vector<Mask> words_;
  std::shared_ptr<Cache> cache_;
};

int min_distance(const Code& code);
int covering_radius(const Code& code);

struct DistancePartition {
  int length = 0;
  /// cells[i] holds every vertex at distance i from the code, ascending.
  std::vector<std::vector<Mask>> cells;

  int covering_radius() const { return static_cast<int>(cells.size()) - 1; }
  std::vector<std::size_t> cell_sizes() const;
};

DistancePartition distance_partition(const Code& code);

struct DistanceDistribution {
  /// a[i] = |{(x, y) in C^2 : d(x, y) = i}| / |C|, for i = 0..m.
  std::vector<Rational> a;

  int length() const { return static_cast<int>(a.size()) - 1; }
};

DistanceDistribution distance_distribution(const Code& code);

struct PunctureResult {
  Code code;
  /// True when two words of the input became equal after deletion.
  bool collisions;
};

/// Deletes 1-based coordinate p from every word.
Code puncture(const Code& code, int p);
PunctureResult puncture_with_report(const Code& code, int p);

/// pi_J: keeps the 1-based coordinates of J in ascending order.
Code project(const Code& code, std::span<const int> coordinates);

enum class ParityPosition { front, back };

Code extend_parity(const Code& code, ParityPosition position = ParityPosition::back);

bool is_antipodal(const Code& code);

/// Codewords of weight exactly k, ascending.
std::vector<Mask> weight_class(const Code& code, int k);

/// Reads the code file format: "m=<int>" header, one word per line, '#'
/// comments. Throws FormatError with the offending line.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);

void write_code(std::ostream& out, const Code& code, std::span<const std::string> comments = {});
void write_code_file(const std::string& path, const Code& code,
                     std::span<const std::string> comments = {});

}  // namespace creg
