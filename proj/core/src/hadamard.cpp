#include "creg/hadamard.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "creg/certificate.hpp"

namespace creg {

namespace {

std::size_t at(int i, int j, int m) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

HadamardMatrix::HadamardMatrix(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
  check_length(order);
  if (entries_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw ParameterError("Hadamard matrix needs order^2 entries");
  }
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    if (entries_[e] != 1 && entries_[e] != -1) {
      throw ParameterError("entry (" + std::to_string(e / static_cast<std::size_t>(order) + 1) + ", " +
                           std::to_string(e % static_cast<std::size_t>(order) + 1) + ") is not +-1");
    }
  }
  for (int i = 0; i < order; ++i) {
    for (int j = i; j < order; ++j) {
      int dot = 0;
      for (int k = 0; k < order; ++k) dot += entries_[at(i, k, order)] * entries_[at(j, k, order)];
      if (dot != (i == j ? order : 0)) {
        throw ParameterError("rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " have inner product " + std::to_string(dot));
      }
    }
  }
}

HadamardMatrix HadamardMatrix::normalized() const {
  auto e = entries_;
  const int m = order_;
  for (int i = 0; i < m; ++i) {
    if (e[at(i, 0, m)] == -1) {
      for (int j = 0; j < m; ++j) e[at(i, j, m)] = -e[at(i, j, m)];
    }
  }
  for (int j = 0; j < m; ++j) {
    if (e[at(0, j, m)] == -1) {
      for (int i = 0; i < m; ++i) e[at(i, j, m)] = -e[at(i, j, m)];
    }
  }
  return HadamardMatrix(m, std::move(e));
}

bool HadamardMatrix::is_normalized() const {
  for (int i = 0; i < order_; ++i) {
    if ((*this)(0, i) != 1 || (*this)(i, 0) != 1) return false;
  }
  return true;
}

HadamardMatrix paley_hadamard(int q) {
  if (!is_prime(q) || q % 4 != 3 || q + 1 > kMaxLength) {
    throw ParameterError("Paley type I needs a prime q = 3 mod 4 with q + 1 <= 24");
  }
  std::vector<int> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;

  const int m = q + 1;
  std::vector<int> e(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int j = 1; j < m; ++j) {
    e[at(0, j, m)] = 1;
    e[at(j, 0, m)] = -1;
  }
  for (int i = 1; i < m; ++i) {
    for (int j = 1; j < m; ++j) e[at(i, j, m)] = chi[static_cast<std::size_t>(((j - i) % q + q) % q)];
  }
  for (int i = 0; i < m; ++i) e[at(i, i, m)] += 1;
  return HadamardMatrix(m, std::move(e));
}

HadamardMatrix paley_hadamard_12() { return paley_hadamard(11).normalized(); }

MonomialMatrix::MonomialMatrix(std::vector<int> signs, Permutation permutation)
    : signs_(std::move(signs)), permutation_(permutation) {
  if (static_cast<int>(signs_.size()) != permutation_.degree()) {
    throw ParameterError("monomial signs and permutation differ in size");
  }
  for (const int s : signs_) {
    if (s != 1 && s != -1) throw ParameterError("monomial diagonal entries must be +-1");
  }
}

MonomialMatrix MonomialMatrix::identity(int order) {
  return MonomialMatrix(std::vector<int>(static_cast<std::size_t>(order), 1), Permutation::identity(order));
}

MonomialMatrix MonomialMatrix::negated_identity(int order) {
  return MonomialMatrix(std::vector<int>(static_cast<std::size_t>(order), -1), Permutation::identity(order));
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& right) const {
  if (right.order() != order()) throw ParameterError("monomial order mismatch");
  std::vector<int> signs(signs_.size());
  for (int i = 0; i < order(); ++i) {
    signs[static_cast<std::size_t>(i)] =
        signs_[static_cast<std::size_t>(i)] * right.signs_[static_cast<std::size_t>(permutation_[i])];
  }
  return MonomialMatrix(std::move(signs), permutation_.then(right.permutation_));
}

MonomialMatrix MonomialMatrix::inverse() const {
  const auto inv = permutation_.inverse();
  std::vector<int> signs(signs_.size());
  for (int i = 0; i < order(); ++i) signs[static_cast<std::size_t>(i)] = signs_[static_cast<std::size_t>(inv[i])];
  return MonomialMatrix(std::move(signs), inv);
}

std::vector<int> MonomialMatrix::dense() const {
  const int m = order();
  std::vector<int> out(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) out[at(i, permutation_[i], m)] = signs_[static_cast<std::size_t>(i)];
  return out;
}

Vertex kappa(std::span<const int> v) {
  const int m = static_cast<int>(v.size());
  Mask bits = 0;
  for (int i = 0; i < m; ++i) {
    const int s = v[static_cast<std::size_t>(i)];
    if (s != 1 && s != -1) throw ParameterError("kappa needs a +-1 vector");
    if (s == -1) bits |= Mask{1} << i;
  }
  return Vertex(bits, m);
}

std::vector<int> kappa_inverse(const Vertex& a) {
  std::vector<int> out(static_cast<std::size_t>(a.length()));
  for (int i = 0; i < a.length(); ++i) out[static_cast<std::size_t>(i)] = ((a.bits() >> i) & 1U) ? -1 : 1;
  return out;
}

std::vector<int> multiply(std::span<const int> v, const MonomialMatrix& u) {
  if (static_cast<int>(v.size()) != u.order()) throw ParameterError("vector and monomial sizes differ");
  std::vector<int> out(v.size());
  for (int i = 0; i < u.order(); ++i) {
    out[static_cast<std::size_t>(u.permutation()[i])] = v[static_cast<std::size_t>(i)] * u.signs()[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<int> multiply(const MonomialMatrix& p, const HadamardMatrix& h, const MonomialMatrix& u) {
  const int m = h.order();
  if (p.order() != m || u.order() != m) throw ParameterError("monomial and matrix orders differ");
  std::vector<int> out(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<int> row(h.row(p.permutation()[i]).begin(), h.row(p.permutation()[i]).end());
    for (auto& x : row) x *= p.signs()[static_cast<std::size_t>(i)];
    const auto image = multiply(row, u);
    std::copy(image.begin(), image.end(), out.begin() + static_cast<std::ptrdiff_t>(at(i, 0, m)));
  }
  return out;
}

Code code_of(const HadamardMatrix& h) {
  std::vector<Mask> words;
  const Mask all = full_mask(h.order());
  for (int i = 0; i < h.order(); ++i) {
    const Mask w = kappa(h.row(i)).bits();
    words.push_back(w);
    words.push_back(w ^ all);
  }
  return Code(h.order(), std::move(words));
}

GraphAutomorphism theta(const MonomialMatrix& u) {
  Mask flips = 0;
  for (int i = 0; i < u.order(); ++i) {
    if (u.signs()[static_cast<std::size_t>(i)] == -1) flips |= Mask{1} << i;
  }
  return GraphAutomorphism(flips, u.permutation());
}

MonomialMatrix theta_inverse(const GraphAutomorphism& x) {
  std::vector<int> signs(static_cast<std::size_t>(x.length()));
  for (int i = 0; i < x.length(); ++i) signs[static_cast<std::size_t>(i)] = ((x.translation() >> i) & 1U) ? -1 : 1;
  return MonomialMatrix(std::move(signs), x.permutation());
}

bool is_matrix_automorphism(const MonomialMatrix& p, const MonomialMatrix& u, const HadamardMatrix& h) {
  const auto product = multiply(p, h, u);
  return std::equal(product.begin(), product.end(), h.entries().begin(), h.entries().end());
}

MatrixAutomorphism transfer_from_code_automorphism(const GraphAutomorphism& x, const HadamardMatrix& h) {
  const int m = h.order();
  if (x.length() != m) throw ParameterError("automorphism length differs from matrix order");
  if (!stabilizes(x, code_of(h))) {
    throw ParameterError("automorphism " + x.to_string() + " does not stabilize the Hadamard code");
  }
  const MonomialMatrix u = theta_inverse(x);
  const MonomialMatrix u_inv = u.inverse();

  // Q = H U^{-1} H^T; P = Q / m must be monomial.
  std::vector<std::vector<int>> a;
  for (int i = 0; i < m; ++i) a.push_back(multiply(h.row(i), u_inv));
  std::vector<int> signs(static_cast<std::size_t>(m), 0);
  std::vector<int> images(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int q = 0;
      for (int k = 0; k < m; ++k) q += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * h(j, k);
      if (q == 0) continue;
      if (std::abs(q) != m || images[static_cast<std::size_t>(i)] >= 0) {
        throw ContradictionError("H U^{-1} H^T / m is not monomial",
                                 Json{{"automorphism", x.to_string()}, {"row", i + 1}, {"column", j + 1}, {"value", q}});
      }
      images[static_cast<std::size_t>(i)] = j;
      signs[static_cast<std::size_t>(i)] = q / m;
    }
    if (images[static_cast<std::size_t>(i)] < 0) {
      throw ContradictionError("H U^{-1} H^T has a zero row", Json{{"automorphism", x.to_string()}, {"row", i + 1}});
    }
  }
  Permutation pi;
  try {
    pi = Permutation::from_images(images);
  } catch (const ParameterError&) {
    throw ContradictionError("H U^{-1} H^T repeats a column", Json{{"automorphism", x.to_string()}});
  }
  MonomialMatrix p(std::move(signs), pi);
  if (!is_matrix_automorphism(p, u, h)) {
    throw ContradictionError("P H U differs from H", Json{{"automorphism", x.to_string()}});
  }
  return {std::move(p), u};
}

void write_matrix(std::ostream& out, const HadamardMatrix& h) {
  out << "order=" << h.order() << '\n';
  for (int i = 0; i < h.order(); ++i) {
    for (const int s : h.row(i)) out << (s == 1 ? '+' : '-');
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const HadamardMatrix& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file '" + path + "'");
  write_matrix(out, h);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

HadamardMatrix read_matrix(std::istream& in) {
  std::string line;
  int line_number = 0;
  int order = -1;
  std::vector<int> entries;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (order < 0) {
      if (text.rfind("order=", 0) != 0) throw FormatError("expected header \"order=<int>\"", line_number);
      try {
        std::size_t used = 0;
        order = std::stoi(text.substr(6), &used);
        if (used != text.size() - 6) throw std::invalid_argument("trailing");
        check_length(order);
      } catch (const std::exception&) {
        throw FormatError("invalid order in header \"" + text + "\"", line_number);
      }
      continue;
    }
    if (static_cast<int>(text.size()) != order) {
      throw FormatError("row has " + std::to_string(text.size()) + " entries, expected " + std::to_string(order),
                        line_number);
    }
    for (const char c : text) {
      if (c == '+') {
        entries.push_back(1);
      } else if (c == '-') {
        entries.push_back(-1);
      } else {
        throw FormatError(std::string("unexpected character '") + c + "'", line_number);
      }
    }
  }
  if (order < 0) throw FormatError("missing \"order=<int>\" header", line_number + 1);
  if (entries.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw FormatError("expected " + std::to_string(order) + " rows", line_number + 1);
  }
  try {
    return HadamardMatrix(order, std::move(entries));
  } catch (const ParameterError& e) {
    throw FormatError(e.what(), line_number);
  }
}

HadamardMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

}  // namespace creg
