#include "creg/spectral.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace creg {

std::int64_t krawtchouk(int m, int k, int x) {
  if (m < 0 || k < 0 || k > m || x < 0 || x > m) {
    throw ParameterError("krawtchouk: need 0 <= k, x <= m");
  }
  std::int64_t sum = 0;
  for (int j = 0; j <= k; ++j) {
    const std::int64_t term = binomial(x, j) * binomial(m - x, k - j);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(int m) : m_(m) {
  if (m < 0 || m > kMaxLength) throw ParameterError("krawtchouk table length out of range");
  values_.resize(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) {
    for (int x = 0; x <= m; ++x) {
      values_[static_cast<std::size_t>(k) * static_cast<std::size_t>(m + 1) +
              static_cast<std::size_t>(x)] = krawtchouk(m, k, x);
    }
  }
}

int MacWilliamsVector::external_distance() const {
  const auto nonzero = std::count_if(values.begin(), values.end(),
                                     [](const Rational& v) { return v != 0; });
  return static_cast<int>(nonzero) - 1;
}

bool MacWilliamsVector::nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v >= 0; });
}

MacWilliamsVector macwilliams_transform(const DistanceDistribution& distribution) {
  const int m = distribution.length();
  if (m < 0) throw ParameterError("empty distance distribution");
  const KrawtchoukTable table(m);
  MacWilliamsVector out;
  out.values.assign(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int k = 0; k <= m; ++k) {
    Rational sum = 0;
    for (int i = 0; i <= m; ++i) sum += distribution.a[static_cast<std::size_t>(i)] * table(k, i);
    out.values[static_cast<std::size_t>(k)] = sum;
  }
  return out;
}

int external_distance(const Code& code) {
  return macwilliams_transform(distance_distribution(code)).external_distance();
}

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

PackingSolution certify_uniformly_packed(const Code& code) {
  const int m = code.length();
  const int rho = code.covering_radius();
  const std::size_t vertices = std::size_t{1} << m;

  std::vector<std::vector<int>> profile_of(vertices, std::vector<int>(static_cast<std::size_t>(rho) + 1, 0));
  for (std::size_t v = 0; v < vertices; ++v) {
    for (const Mask w : code.words()) {
      const int d = popcount(static_cast<Mask>(v) ^ w);
      if (d <= rho) ++profile_of[v][static_cast<std::size_t>(d)];
    }
  }
  const std::set<std::vector<int>> distinct(profile_of.begin(), profile_of.end());

  PackingSolution out;
  out.profiles.assign(distinct.begin(), distinct.end());

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& profile : out.profiles) {
    a.emplace_back(profile.begin(), profile.end());
    b.emplace_back(1);
  }
  auto solution = solve_exact(std::move(a), std::move(b));
  if (!solution) return out;

  for (const auto& profile : profile_of) {
    Rational sum = 0;
    for (std::size_t k = 0; k < profile.size(); ++k) sum += (*solution)[k] * profile[k];
    if (sum != 1) return out;
    ++out.vertices_checked;
  }
  out.lambdas = std::move(*solution);
  out.satisfied = true;
  return out;
}

}  // namespace creg
