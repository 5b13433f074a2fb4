#include "creg/vertex.hpp"

#include <algorithm>

namespace creg {

void check_length(int length) {
  if (length < 1 || length > kMaxLength) {
    throw ParameterError("vertex length " + std::to_string(length) + " outside [1, " +
                         std::to_string(kMaxLength) + "]");
  }
}

Vertex::Vertex(Mask bits, int length) : bits_(bits), length_(length) {
  check_length(length);
  if ((bits & ~full_mask(length)) != 0) {
    throw ParameterError("vertex has bits set beyond length " + std::to_string(length));
  }
}

Vertex Vertex::parse(std::string_view text) {
  const int length = static_cast<int>(text.size());
  return Vertex(parse_mask(text, length), length);
}

bool Vertex::at(int i) const {
  if (i < 1 || i > length_) throw ParameterError("coordinate out of range");
  return (bits_ >> (i - 1)) & 1U;
}

std::string Vertex::to_string() const { return creg::to_string(bits_, length_); }

std::string to_string(Mask bits, int length) {
  std::string out(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i) {
    if ((bits >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Mask parse_mask(std::string_view text, int length) {
  check_length(length);
  if (static_cast<int>(text.size()) != length) {
    throw ParameterError("expected " + std::to_string(length) + " characters, got " +
                         std::to_string(text.size()));
  }
  Mask bits = 0;
  for (int i = 0; i < length; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      bits |= Mask{1} << i;
    } else if (c != '0') {
      throw ParameterError(std::string("invalid vertex character '") + c + "'");
    }
  }
  return bits;
}

int dist(const Vertex& a, const Vertex& b) {
  if (a.length() != b.length()) {
    throw ParameterError("dist: length mismatch (" + std::to_string(a.length()) + " vs " +
                         std::to_string(b.length()) + ")");
  }
  return popcount(a.bits() ^ b.bits());
}

std::vector<int> support(Mask bits) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(bits)));
  for (int i = 0; bits != 0; ++i, bits >>= 1) {
    if (bits & 1U) out.push_back(i + 1);
  }
  return out;
}

std::vector<int> support(const Vertex& a) { return support(a.bits()); }

Vertex complement(const Vertex& a) { return Vertex(a.bits() ^ full_mask(a.length()), a.length()); }

Sphere::Sphere(const Vertex& center, int radius) : center_(center), radius_(radius) {
  if (radius < 0 || radius > center.length()) {
    throw ParameterError("sphere radius " + std::to_string(radius) + " outside [0, " +
                         std::to_string(center.length()) + "]");
  }
}

Sphere::iterator Sphere::begin() const {
  return iterator(center_.bits(), full_mask(radius_), center_.length(), false);
}

Sphere::iterator& Sphere::iterator::operator++() {
  if (done_) return *this;
  if (offset_ == 0) {
    done_ = true;
    return *this;
  }
  // Gosper's hack: next larger mask with the same popcount.
  const std::uint64_t x = offset_;
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (next > full_mask(length_)) {
    done_ = true;
    offset_ = 0;
  } else {
    offset_ = static_cast<Mask>(next);
  }
  if (done_) offset_ = 0;
  return *this;
}

std::size_t Sphere::size() const {
  return static_cast<std::size_t>(binomial(center_.length(), radius_));
}

Sphere sphere(const Vertex& center, int radius) { return Sphere(center, radius); }

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<Mask> ksubsets(int length, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > length) return out;
  out.reserve(static_cast<std::size_t>(binomial(length, k)));
  for (const Vertex v : sphere(Vertex::zero(length), k)) out.push_back(v.bits());
  return out;
}

}  // namespace creg
