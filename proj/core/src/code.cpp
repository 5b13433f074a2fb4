#include "creg/code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>

namespace creg {

struct Code::Cache {
  std::once_flag min_once;
  int min_distance = 0;

  std::once_flag table_once;
  std::vector<std::uint8_t> table;
  int covering_radius = 0;
};

namespace {

std::vector<Mask> normalize_words(int length, std::vector<Mask> words) {
  check_length(length);
  if (words.empty()) throw ParameterError("a code needs at least one word");
  const Mask limit = full_mask(length);
  for (const Mask w : words) {
    if ((w & ~limit) != 0) {
      throw ParameterError("codeword has bits set beyond length " + std::to_string(length));
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<Mask> masks_of(int length, std::span<const Vertex> words) {
  std::vector<Mask> out;
  out.reserve(words.size());
  for (const auto& v : words) {
    if (v.length() != length) throw ParameterError("codeword length mismatch");
    out.push_back(v.bits());
  }
  return out;
}

Mask delete_bit(Mask w, int bit) {
  const Mask low = (Mask{1} << bit) - 1;
  return (w & low) | ((w >> 1) & ~low);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Code::Code(int length, std::vector<Mask> words)
    : length_(length),
      words_(normalize_words(length, std::move(words))),
      cache_(std::make_shared<Cache>()) {}

Code::Code(int length, std::span<const Vertex> words) : Code(length, masks_of(length, words)) {}

std::vector<Vertex> Code::vertices() const {
  std::vector<Vertex> out;
  out.reserve(words_.size());
  for (const Mask w : words_) out.emplace_back(w, length_);
  return out;
}

bool Code::contains(Mask word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

int Code::min_distance() const {
  if (words_.size() < 2) {
    throw UndefinedParameterError("minimum distance is undefined for a code with fewer than 2 words");
  }
  std::call_once(cache_->min_once, [this] {
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::size_t j = i + 1; j < words_.size(); ++j) {
        best = std::min(best, popcount(words_[i] ^ words_[j]));
      }
    }
    cache_->min_distance = best;
  });
  return cache_->min_distance;
}

std::span<const std::uint8_t> Code::distance_table() const {
  std::call_once(cache_->table_once, [this] {
    const std::size_t vertices = std::size_t{1} << length_;
    cache_->table.assign(vertices, 0);
    int radius = 0;
    for (std::size_t v = 0; v < vertices; ++v) {
      int best = length_;
      for (const Mask w : words_) {
        best = std::min(best, popcount(static_cast<Mask>(v) ^ w));
        if (best == 0) break;
      }
      cache_->table[v] = static_cast<std::uint8_t>(best);
      radius = std::max(radius, best);
    }
    cache_->covering_radius = radius;
  });
  return cache_->table;
}

int Code::covering_radius() const {
  distance_table();
  return cache_->covering_radius;
}

int min_distance(const Code& code) { return code.min_distance(); }
int covering_radius(const Code& code) { return code.covering_radius(); }

std::vector<std::size_t> DistancePartition::cell_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) out.push_back(cell.size());
  return out;
}

DistancePartition distance_partition(const Code& code) {
  const auto table = code.distance_table();
  DistancePartition partition;
  partition.length = code.length();
  partition.cells.resize(static_cast<std::size_t>(code.covering_radius()) + 1);
  for (std::size_t v = 0; v < table.size(); ++v) {
    partition.cells[table[v]].push_back(static_cast<Mask>(v));
  }
  return partition;
}

DistanceDistribution distance_distribution(const Code& code) {
  const int m = code.length();
  std::vector<std::int64_t> pairs(static_cast<std::size_t>(m) + 1, 0);
  for (const Mask x : code.words()) {
    for (const Mask y : code.words()) ++pairs[static_cast<std::size_t>(popcount(x ^ y))];
  }
  DistanceDistribution out;
  out.a.reserve(pairs.size());
  const auto n = static_cast<std::int64_t>(code.size());
  for (const auto count : pairs) out.a.emplace_back(Rational(count, n));
  return out;
}

PunctureResult puncture_with_report(const Code& code, int p) {
  const int m = code.length();
  if (p < 1 || p > m) {
    throw ParameterError("puncture coordinate " + std::to_string(p) + " outside [1, " +
                         std::to_string(m) + "]");
  }
  if (m == 1) throw ParameterError("cannot puncture a length-1 code");
  std::vector<Mask> words;
  words.reserve(code.size());
  for (const Mask w : code.words()) words.push_back(delete_bit(w, p - 1));
  Code punctured(m - 1, std::move(words));
  const bool collisions = punctured.size() != code.size();
  return {std::move(punctured), collisions};
}

Code puncture(const Code& code, int p) { return puncture_with_report(code, p).code; }

Code project(const Code& code, std::span<const int> coordinates) {
  if (coordinates.empty()) throw ParameterError("projection onto an empty coordinate set");
  std::vector<int> j(coordinates.begin(), coordinates.end());
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (const int c : j) {
    if (c < 1 || c > code.length()) {
      throw ParameterError("projection coordinate " + std::to_string(c) + " out of range");
    }
  }
  std::vector<Mask> words;
  words.reserve(code.size());
  for (const Mask w : code.words()) {
    Mask out = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if ((w >> (j[i] - 1)) & 1U) out |= Mask{1} << i;
    }
    words.push_back(out);
  }
  return Code(static_cast<int>(j.size()), std::move(words));
}

Code extend_parity(const Code& code, ParityPosition position) {
  const int m = code.length();
  if (m + 1 > kMaxLength) throw ParameterError("extended length exceeds the supported maximum");
  std::vector<Mask> words;
  words.reserve(code.size());
  for (const Mask w : code.words()) {
    const Mask parity = static_cast<Mask>(popcount(w) & 1);
    words.push_back(position == ParityPosition::back ? (w | (parity << m)) : ((w << 1) | parity));
  }
  return Code(m + 1, std::move(words));
}

bool is_antipodal(const Code& code) {
  const Mask all = full_mask(code.length());
  return std::all_of(code.words().begin(), code.words().end(),
                     [&](Mask w) { return code.contains(w ^ all); });
}

std::vector<Mask> weight_class(const Code& code, int k) {
  if (k < 0 || k > code.length()) throw ParameterError("weight outside [0, m]");
  std::vector<Mask> out;
  for (const Mask w : code.words()) {
    if (popcount(w) == k) out.push_back(w);
  }
  return out;
}

Code read_code(std::istream& in) {
  std::string line;
  int line_number = 0;
  int length = -1;
  std::vector<Mask> words;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (length < 0) {
      if (text.rfind("m=", 0) != 0) throw FormatError("expected header \"m=<int>\"", line_number);
      try {
        std::size_t used = 0;
        length = std::stoi(text.substr(2), &used);
        if (used != text.size() - 2) throw std::invalid_argument("trailing");
        check_length(length);
      } catch (const std::exception&) {
        throw FormatError("invalid length in header \"" + text + "\"", line_number);
      }
      continue;
    }
    try {
      words.push_back(parse_mask(text, length));
    } catch (const ParameterError& e) {
      throw FormatError(e.what(), line_number);
    }
  }
  if (length < 0) throw FormatError("missing \"m=<int>\" header", line_number + 1);
  if (words.empty()) throw FormatError("code file contains no codewords", line_number + 1);
  return Code(length, std::move(words));
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file '" + path + "'");
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code, std::span<const std::string> comments) {
  out << "m=" << code.length() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const Mask w : code.words()) out << to_string(w, code.length()) << '\n';
}

void write_code_file(const std::string& path, const Code& code,
                     std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code file '" + path + "'");
  write_code(out, code, comments);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace creg
