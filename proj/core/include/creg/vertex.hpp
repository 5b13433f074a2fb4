#pragma once

// Binary Hamming graph H(m,2): vertices as bitmasks, the Hamming metric,
// spheres, supports and complements.
//
// Coordinate i (1-based) of an m-tuple lives in bit i-1 of the mask. The text
// form writes coordinate 1 leftmost.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace creg {

using Mask = std::uint32_t;

inline constexpr int kMaxLength = 24;

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a derived quantity is undefined for the input (e.g. the minimum
/// distance of a one-word code).
class UndefinedParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr Mask full_mask(int length) {
  return length >= 32 ? ~Mask{0} : (Mask{1} << length) - 1;
}

constexpr int popcount(Mask bits) { return std::popcount(bits); }

void check_length(int length);

class Vertex {
 public:
  Vertex() = default;
  Vertex(Mask bits, int length);

  static Vertex zero(int length) { return Vertex(0, length); }
  static Vertex ones(int length) { return Vertex(full_mask(length), length); }

  /// Parses the text form: exactly `length` characters over {0,1}.
  static Vertex parse(std::string_view text);

  Mask bits() const { return bits_; }
  int length() const { return length_; }
  int weight() const { return popcount(bits_); }

  /// Value of 1-based coordinate `i`.
  bool at(int i) const;

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
  int length_ = 0;
};

std::string to_string(Mask bits, int length);
Mask parse_mask(std::string_view text, int length);

int dist(const Vertex& a, const Vertex& b);

/// 1-based coordinates of the nonzero entries, ascending.
std::vector<int> support(const Vertex& a);
std::vector<int> support(Mask bits);

Vertex complement(const Vertex& a);

/// Vertices at distance exactly `radius` from `center`, visited in ascending
/// order of the XOR offset (Gosper's hack over masks of fixed weight).
class Sphere {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    iterator() = default;
    Vertex operator*() const { return Vertex(center_ ^ offset_, length_); }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.offset_ == b.offset_ && a.done_ == b.done_;
    }

   private:
    friend class Sphere;
    iterator(Mask center, Mask offset, int length, bool done)
        : center_(center), offset_(offset), length_(length), done_(done) {}

    Mask center_ = 0;
    Mask offset_ = 0;
    int length_ = 0;
    bool done_ = true;
  };

  Sphere(const Vertex& center, int radius);

  iterator begin() const;
  iterator end() const { return iterator(center_.bits(), 0, center_.length(), true); }

  const Vertex& center() const { return center_; }
  int radius() const { return radius_; }
  std::size_t size() const;

 private:
  Vertex center_;
  int radius_;
};

Sphere sphere(const Vertex& center, int radius);

/// binom(n, k) as an exact integer; zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// All masks of weight `k` on `length` bits, ascending.
std::vector<Mask> ksubsets(int length, int k);

}  // namespace creg
