#include "creg/regularity.hpp"

#include <algorithm>
#include <thread>

namespace creg {

std::vector<std::int64_t> outer_row(const Code& code, Mask v) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(code.length()) + 1, 0);
  for (const Mask w : code.words()) ++row[static_cast<std::size_t>(popcount(v ^ w))];
  return row;
}

namespace {

std::optional<RegularityCounterexample> scan_range(const Code& code, std::span<const std::uint8_t> table,
                                                   const OuterDistribution& reference, std::size_t lo,
                                                   std::size_t hi) {
  for (std::size_t v = lo; v < hi; ++v) {
    const int cell = table[v];
    const auto row = outer_row(code, static_cast<Mask>(v));
    const auto& expected = reference.rows[static_cast<std::size_t>(cell)];
    if (row == expected) continue;
    const auto diff = std::mismatch(row.begin(), row.end(), expected.begin());
    RegularityCounterexample out;
    out.cell = cell;
    out.reference = reference.representatives[static_cast<std::size_t>(cell)];
    out.vertex = static_cast<Mask>(v);
    out.radius = static_cast<int>(diff.first - row.begin());
    out.reference_count = *diff.second;
    out.vertex_count = *diff.first;
    return out;
  }
  return std::nullopt;
}

Json vertex_json(Mask v, int m) { return to_string(v, m); }

}  // namespace

OuterDistribution outer_distribution(const Code& code, int threads) {
  const auto partition = distance_partition(code);
  const auto table = code.distance_table();
  OuterDistribution out;
  out.length = code.length();
  out.covering_radius = partition.covering_radius();
  for (const auto& cell : partition.cells) {
    out.representatives.push_back(cell.front());
    out.rows.push_back(outer_row(code, cell.front()));
  }

  const std::size_t n = table.size();
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::optional<RegularityCounterexample>> found(workers);
  if (workers == 1) {
    found[0] = scan_range(code, table, out, 0, n);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(n, w * chunk);
      const std::size_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { found[w] = scan_range(code, table, out, lo, hi); });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& f : found) {
    if (f) {
      out.counterexample = f;
      break;
    }
  }
  return out;
}

RegularityCertificate certify_completely_regular(const Code& code, int threads) {
  auto outer = outer_distribution(code, threads);
  RegularityCertificate out;
  out.covering_radius = outer.covering_radius;
  out.completely_regular = outer.constant_on_cells();
  if (out.completely_regular) {
    out.intersection_table = std::move(outer.rows);
  } else {
    out.counterexample = outer.counterexample;
  }
  return out;
}

Certificate RegularityCertificate::to_certificate() const {
  Certificate c;
  c.claim = "the outer distribution is constant on every cell of the distance partition";
  c.anchor = "regularity.complete";
  c.witness["covering_radius"] = covering_radius;
  if (completely_regular) {
    c.witness["intersection_table"] = intersection_table;
  } else {
    const auto& x = *counterexample;
    c.witness["counterexample"] = {{"cell", x.cell},
                                   {"reference", x.reference},
                                   {"vertex", x.vertex},
                                   {"radius", x.radius},
                                   {"reference_count", x.reference_count},
                                   {"vertex_count", x.vertex_count}};
  }
  c.verdict = completely_regular ? Verdict::pass : Verdict::fail;
  return c;
}

namespace {

void require_stabilizes(const Code& code, const GroupHandle& group) {
  if (group.degree() != code.length()) throw ParameterError("group degree differs from code length");
  for (const auto& g : group.generators()) {
    for (const Mask w : code.words()) {
      if (!code.contains(g.apply(w))) {
        throw PreconditionError("generator " + g.to_string() + " moves codeword " +
                                    to_string(w, code.length()) + " off the code",
                                Json{{"generator", g.to_string()},
                                     {"codeword", vertex_json(w, code.length())},
                                     {"image", vertex_json(g.apply(w), code.length())}});
      }
    }
  }
}

}  // namespace

TransitivityReport certify_completely_transitive(const Code& code, const GroupHandle& group,
                                                 int threads) {
  require_stabilizes(code, group);
  TransitivityReport out;
  out.group_order = group.order();
  out.completely_regular = certify_completely_regular(code, threads).completely_regular;

  const auto table = code.distance_table();
  const int rho = code.covering_radius();
  out.cell_sizes.assign(static_cast<std::size_t>(rho) + 1, 0);
  for (const auto d : table) ++out.cell_sizes[d];
  out.orbits_per_cell.assign(static_cast<std::size_t>(rho) + 1, 0);

  bool orbits_inside_cells = true;
  for (const auto& orbit : orbits(group)) {
    out.orbit_sizes.push_back(orbit.size());
    out.orbit_representatives.push_back(orbit.front());
    const auto cell = table[orbit.front()];
    ++out.orbits_per_cell[cell];
    orbits_inside_cells = orbits_inside_cells &&
                          std::all_of(orbit.begin(), orbit.end(), [&](Mask v) { return table[v] == cell; });
  }
  out.completely_transitive =
      orbits_inside_cells &&
      std::all_of(out.orbits_per_cell.begin(), out.orbits_per_cell.end(), [](int n) { return n == 1; });

  if (out.completely_transitive && !out.completely_regular) {
    throw ContradictionError("orbits equal the distance partition but the outer distribution is not constant",
                             Json{{"orbit_sizes", out.orbit_sizes}});
  }
  return out;
}

Certificate TransitivityReport::to_certificate() const {
  Certificate c;
  c.claim = "each cell of the distance partition is a single orbit of the group";
  c.anchor = "regularity.transitive";
  if (group_order) c.witness["group_order"] = *group_order;
  c.witness["cell_sizes"] = cell_sizes;
  c.witness["orbit_sizes"] = orbit_sizes;
  c.witness["orbits_per_cell"] = orbits_per_cell;
  c.witness["completely_regular"] = completely_regular;
  c.verdict = completely_transitive ? Verdict::pass : Verdict::fail;
  return c;
}

StabilizerTransitivity transitivity_by_stabilizer(const Code& code, const GroupHandle& group, int cell,
                                                  std::optional<Mask> alpha, std::size_t budget) {
  require_stabilizes(code, group);
  const int m = code.length();
  const int rho = code.covering_radius();
  if (cell < 0 || cell > rho) throw ParameterError("cell index outside [0, rho]");
  const Mask a = alpha.value_or(code.contains(0) ? Mask{0} : code.words().front());
  if (!code.contains(a)) throw ParameterError("designated vertex is not a codeword");

  const auto orbit = orbit_of(group, a);
  if (orbit.size() != code.size()) {
    Json witness = Json::array();
    for (const auto& o : orbits(group, code.words())) {
      Json words = Json::array();
      for (const Mask w : o) words.push_back(vertex_json(w, m));
      witness.push_back(words);
    }
    throw PreconditionError("group is not transitive on the code", Json{{"orbits_on_code", witness}});
  }

  const auto stabilizer = stabilizer_of_vertex(group, a, budget);
  const auto table = code.distance_table();
  std::vector<Mask> target;
  for (const Mask offset : ksubsets(m, cell)) {
    const Mask v = a ^ offset;
    if (table[v] == cell) target.push_back(v);
  }

  StabilizerTransitivity out;
  out.cell = cell;
  out.alpha = a;
  out.stabilizer_order = *stabilizer.order();
  out.target_size = target.size();
  if (!target.empty()) {
    for (const auto& o : orbits(stabilizer, target)) out.orbit_sizes.push_back(o.size());
  }
  out.transitive_on_cell = out.orbit_sizes.size() == 1;
  return out;
}

Certificate StabilizerTransitivity::to_certificate() const {
  Certificate c;
  c.claim = "the codeword stabilizer is transitive on the cell vertices at distance " + std::to_string(cell) +
            " from the codeword, so the group is transitive on the cell";
  c.anchor = "regularity.stabilizer-orbits";
  c.witness["cell"] = cell;
  c.witness["alpha"] = alpha;
  c.witness["stabilizer_order"] = stabilizer_order;
  c.witness["target_size"] = target_size;
  c.witness["orbit_sizes"] = orbit_sizes;
  c.verdict = transitive_on_cell ? Verdict::pass : Verdict::fail;
  return c;
}

}  // namespace creg
