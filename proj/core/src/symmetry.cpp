#include "creg/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace creg {

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int degree) {
  check_length(degree);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int degree = static_cast<int>(images.size());
  check_length(degree);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  Mask seen = 0;
  for (int i = 0; i < degree; ++i) {
    const int image = images[static_cast<std::size_t>(i)];
    if (image < 0 || image >= degree || ((seen >> image) & 1U)) {
      throw ParameterError("permutation images do not form a bijection");
    }
    seen |= Mask{1} << image;
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(image);
  }
  return p;
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based(images.begin(), images.end());
  for (auto& v : zero_based) --v;
  return from_images(zero_based);
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) {
    p.images_[images_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  }
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree_ != degree_) throw ParameterError("permutation degree mismatch");
  Permutation p;
  p.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) {
    p.images_[static_cast<std::size_t>(i)] = next.images_[images_[static_cast<std::size_t>(i)]];
  }
  return p;
}

Mask Permutation::apply(Mask bits) const {
  Mask out = 0;
  while (bits != 0) {
    const int i = std::countr_zero(bits);
    bits &= bits - 1;
    out |= Mask{1} << images_[static_cast<std::size_t>(i)];
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) out[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(i)] + 1;
  return out;
}

// ---------------------------------------------------------------------------
// GraphAutomorphism

GraphAutomorphism::GraphAutomorphism(Mask translation, Permutation permutation)
    : translation_(translation), permutation_(permutation) {
  if ((translation & ~full_mask(permutation.degree())) != 0) {
    throw ParameterError("translation mask exceeds the permutation degree");
  }
}

GraphAutomorphism GraphAutomorphism::identity(int length) {
  return GraphAutomorphism(0, Permutation::identity(length));
}

GraphAutomorphism GraphAutomorphism::translation_by(Mask translation, int length) {
  return GraphAutomorphism(translation, Permutation::identity(length));
}

GraphAutomorphism GraphAutomorphism::permuting(Permutation permutation) {
  return GraphAutomorphism(0, permutation);
}

GraphAutomorphism GraphAutomorphism::operator*(const GraphAutomorphism& next) const {
  if (next.length() != length()) throw ParameterError("automorphism length mismatch");
  // a -> s2(s1(a ^ t1) ^ t2) = s2 s1(a ^ t1 ^ s1^{-1}(t2))
  const Mask pulled_back = permutation_.inverse().apply(next.translation_);
  return GraphAutomorphism(translation_ ^ pulled_back, permutation_.then(next.permutation_));
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  return GraphAutomorphism(permutation_.apply(translation_), permutation_.inverse());
}

std::string GraphAutomorphism::to_string() const {
  std::string out = creg::to_string(translation_, length());
  out += '|';
  const auto images = permutation_.one_based();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images[i]);
  }
  return out;
}

GraphAutomorphism GraphAutomorphism::parse(std::string_view line) {
  const auto bar = line.find('|');
  if (bar == std::string_view::npos) throw ParameterError("automorphism line lacks '|'");
  const std::string_view mask_text = line.substr(0, bar);
  std::istringstream images_text{std::string(line.substr(bar + 1))};
  std::vector<int> images;
  int value = 0;
  while (images_text >> value) images.push_back(value);
  if (!images_text.eof()) throw ParameterError("non-numeric permutation image");
  if (images.size() != mask_text.size()) {
    throw ParameterError("flip mask and permutation have different lengths");
  }
  const int m = static_cast<int>(images.size());
  return GraphAutomorphism(parse_mask(mask_text, m), Permutation::from_one_based(images));
}

std::size_t GraphAutomorphismHash::operator()(const GraphAutomorphism& x) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ x.translation();
  const auto& p = x.permutation();
  for (int i = 0; i < p.degree(); ++i) {
    h ^= static_cast<std::uint64_t>(p[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Vertex apply(const GraphAutomorphism& x, const Vertex& a) {
  if (a.length() != x.length()) throw ParameterError("apply: length mismatch");
  return Vertex(x.apply(a.bits()), a.length());
}

bool stabilizes(const GraphAutomorphism& x, const Code& code) {
  if (x.length() != code.length()) return false;
  return std::all_of(code.words().begin(), code.words().end(),
                     [&](Mask w) { return code.contains(x.apply(w)); });
}

Code image(const Code& code, const GraphAutomorphism& x) {
  if (x.length() != code.length()) throw ParameterError("image: length mismatch");
  std::vector<Mask> words;
  words.reserve(code.size());
  for (const Mask w : code.words()) words.push_back(x.apply(w));
  return Code(code.length(), std::move(words));
}

// ---------------------------------------------------------------------------
// GroupHandle and closure

struct GroupHandle::Elements {
  std::vector<GraphAutomorphism> list;
  std::unordered_set<GraphAutomorphism, GraphAutomorphismHash> set;
};

GroupHandle::GroupHandle(int degree, std::vector<GraphAutomorphism> generators,
                         std::optional<std::uint64_t> order)
    : degree_(degree), generators_(std::move(generators)), order_(order) {
  check_length(degree);
  for (const auto& g : generators_) {
    if (g.length() != degree) throw ParameterError("generator degree mismatch");
  }
}

std::span<const GraphAutomorphism> GroupHandle::elements() const {
  if (!elements_) throw std::logic_error("group elements requested before closure");
  return elements_->list;
}

bool GroupHandle::contains(const GraphAutomorphism& x) const {
  if (!elements_) throw std::logic_error("membership test requested before closure");
  return elements_->set.contains(x);
}

GroupHandle closure(const GroupHandle& group, std::size_t budget) {
  if (group.is_enumerated()) return group;
  auto elements = std::make_shared<GroupHandle::Elements>();
  const auto identity = GraphAutomorphism::identity(group.degree());
  elements->list.push_back(identity);
  elements->set.insert(identity);
  for (std::size_t i = 0; i < elements->list.size(); ++i) {
    for (const auto& g : group.generators()) {
      auto product = elements->list[i] * g;
      if (elements->set.insert(product).second) {
        if (elements->list.size() >= budget) {
          throw ResourceError("group closure exceeded the element budget of " +
                              std::to_string(budget));
        }
        elements->list.push_back(product);
      }
    }
  }
  GroupHandle out(group.degree(), std::vector<GraphAutomorphism>(group.generators().begin(),
                                                                   group.generators().end()),
                  elements->list.size());
  out.elements_ = std::move(elements);
  return out;
}

GroupHandle subgroup_from_elements(int degree, std::span<const GraphAutomorphism> elements,
                                   std::size_t budget) {
  GroupHandle current = closure(GroupHandle(degree, {}), budget);
  std::vector<GraphAutomorphism> generators;
  for (const auto& x : elements) {
    if (current.contains(x)) continue;
    generators.push_back(x);
    current = closure(GroupHandle(degree, generators), budget);
  }
  return current;
}

namespace {

GroupHandle enumerated(const GroupHandle& group, std::size_t budget) {
  return group.is_enumerated() ? group : closure(group, budget);
}

}  // namespace

GroupHandle stabilizer_of_vertex(const GroupHandle& group, Mask vertex, std::size_t budget) {
  const auto full = enumerated(group, budget);
  std::vector<GraphAutomorphism> kept;
  for (const auto& x : full.elements()) {
    if (x.apply(vertex) == vertex) kept.push_back(x);
  }
  return subgroup_from_elements(group.degree(), kept, budget);
}

GroupHandle stabilizer_of_coordinate(const GroupHandle& group, int coordinate, std::size_t budget) {
  if (coordinate < 1 || coordinate > group.degree()) throw ParameterError("coordinate out of range");
  const auto full = enumerated(group, budget);
  std::vector<GraphAutomorphism> kept;
  for (const auto& x : full.elements()) {
    if (x.permutation()[coordinate - 1] == coordinate - 1) kept.push_back(x);
  }
  return subgroup_from_elements(group.degree(), kept, budget);
}

// ---------------------------------------------------------------------------
// Set-system backtracking

namespace {

/// Searches sigma in S_m with sigma(from) = to, assigning images to points
/// 0, 1, ..., m-1 in order. Points are pre-coloured by iterated refinement
/// of the incidence structure; after each assignment the restriction of every
/// source block to the assigned points must map onto the multiset of target
/// blocks restricted to the used images.
class SetSystemSearch {
 public:
  SetSystemSearch(int m, std::span<const Mask> from, std::span<const Mask> to)
      : m_(m), from_(from.begin(), from.end()), to_(to.begin(), to.end()) {
    check_length(m);
    std::sort(from_.begin(), from_.end());
    from_.erase(std::unique(from_.begin(), from_.end()), from_.end());
    std::sort(to_.begin(), to_.end());
    to_.erase(std::unique(to_.begin(), to_.end()), to_.end());
    feasible_ = from_.size() == to_.size();
    if (!feasible_) return;
    refine();
    blocks_of_point_.assign(static_cast<std::size_t>(m_), {});
    for (std::size_t b = 0; b < from_.size(); ++b) {
      for (int p = 0; p < m_; ++p) {
        if ((from_[b] >> p) & 1U) blocks_of_point_[static_cast<std::size_t>(p)].push_back(b);
      }
    }
  }

  const std::vector<int>& from_colors() const { return from_color_; }
  const std::vector<int>& to_colors() const { return to_color_; }
  bool feasible() const { return feasible_; }

  std::optional<Permutation> find(std::span<const int> forced) {
    if (!feasible_) return std::nullopt;
    forced_ = forced;
    used_ = 0;
    partial_.assign(from_.size(), 0);
    if (!extend(0)) return std::nullopt;
    std::vector<int> images(image_.begin(), image_.begin() + m_);
    return Permutation::from_images(images);
  }

 private:
  void refine() {
    from_color_.assign(static_cast<std::size_t>(m_), 0);
    to_color_.assign(static_cast<std::size_t>(m_), 0);
    std::size_t classes = 1;
    for (int round = 0; round <= m_; ++round) {
      std::map<std::vector<int>, int> block_ids;
      std::map<std::vector<int>, int> point_ids;
      auto recolor = [&](const std::vector<Mask>& family, const std::vector<int>& colors) {
        std::vector<int> block_id(family.size());
        for (std::size_t b = 0; b < family.size(); ++b) {
          std::vector<int> key;
          for (int p = 0; p < m_; ++p) {
            if ((family[b] >> p) & 1U) key.push_back(colors[static_cast<std::size_t>(p)]);
          }
          std::sort(key.begin(), key.end());
          block_id[b] = block_ids.emplace(key, static_cast<int>(block_ids.size())).first->second;
        }
        std::vector<int> next(static_cast<std::size_t>(m_));
        for (int p = 0; p < m_; ++p) {
          std::vector<int> key{colors[static_cast<std::size_t>(p)], -1};
          std::vector<int> incident;
          for (std::size_t b = 0; b < family.size(); ++b) {
            if ((family[b] >> p) & 1U) incident.push_back(block_id[b]);
          }
          std::sort(incident.begin(), incident.end());
          key.insert(key.end(), incident.begin(), incident.end());
          next[static_cast<std::size_t>(p)] =
              point_ids.emplace(key, static_cast<int>(point_ids.size())).first->second;
        }
        return next;
      };
      auto next_from = recolor(from_, from_color_);
      auto next_to = recolor(to_, to_color_);
      from_color_ = std::move(next_from);
      to_color_ = std::move(next_to);
      if (point_ids.size() == classes) break;
      classes = point_ids.size();
    }
    auto a = from_color_;
    auto b = to_color_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) feasible_ = false;
  }

  bool consistent() {
    scratch_from_ = partial_;
    scratch_to_.resize(to_.size());
    for (std::size_t b = 0; b < to_.size(); ++b) scratch_to_[b] = to_[b] & used_;
    std::sort(scratch_from_.begin(), scratch_from_.end());
    std::sort(scratch_to_.begin(), scratch_to_.end());
    return scratch_from_ == scratch_to_;
  }

  bool extend(int point) {
    if (point == m_) return true;
    const auto p = static_cast<std::size_t>(point);
    auto try_image = [&](int q) {
      if ((used_ >> q) & 1U) return false;
      if (from_color_[p] != to_color_[static_cast<std::size_t>(q)]) return false;
      image_[p] = q;
      used_ |= Mask{1} << q;
      for (const auto b : blocks_of_point_[p]) partial_[b] |= Mask{1} << q;
      const bool ok = consistent() && extend(point + 1);
      if (ok) return true;
      for (const auto b : blocks_of_point_[p]) partial_[b] &= ~(Mask{1} << q);
      used_ &= ~(Mask{1} << q);
      return false;
    };
    if (p < forced_.size()) return try_image(forced_[p]);
    for (int q = 0; q < m_; ++q) {
      if (try_image(q)) return true;
    }
    return false;
  }

  int m_;
  std::vector<Mask> from_;
  std::vector<Mask> to_;
  bool feasible_ = false;
  std::vector<int> from_color_;
  std::vector<int> to_color_;
  std::vector<std::vector<std::size_t>> blocks_of_point_;

  std::span<const int> forced_;
  std::array<int, kMaxLength> image_{};
  Mask used_ = 0;
  std::vector<Mask> partial_;
  std::vector<Mask> scratch_from_;
  std::vector<Mask> scratch_to_;
};

std::vector<int> point_orbit(int m, std::span<const GraphAutomorphism> generators, int start) {
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> orbit{start};
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators) {
      const int next = g.permutation()[orbit[i]];
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        orbit.push_back(next);
      }
    }
  }
  return orbit;
}

std::uint64_t checked_multiply(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("group order overflows 64 bits");
  return out;
}

std::vector<Mask> orbit_under(int m, std::span<const GraphAutomorphism> generators, Mask start) {
  std::vector<char> seen(std::size_t{1} << m, 0);
  std::vector<Mask> orbit{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators) {
      const Mask next = g.apply(orbit[i]);
      if (!seen[next]) {
        seen[next] = 1;
        orbit.push_back(next);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

GroupHandle setwise_stabilizer_perms(int m, std::span<const Mask> family) {
  if (family.empty()) throw ParameterError("setwise stabilizer of an empty family");
  for (const Mask b : family) {
    if ((b & ~full_mask(m)) != 0) throw ParameterError("subset exceeds the point set");
  }
  SetSystemSearch search(m, family, family);
  const auto& colors = search.from_colors();

  std::vector<GraphAutomorphism> generators;
  std::uint64_t order = 1;
  std::vector<int> forced;
  for (int base = m - 1; base >= 0; --base) {
    auto orbit = point_orbit(m, generators, base);
    std::vector<char> settled(static_cast<std::size_t>(m), 0);
    for (const int p : orbit) settled[static_cast<std::size_t>(p)] = 1;
    for (int target = base + 1; target < m; ++target) {
      if (settled[static_cast<std::size_t>(target)]) continue;
      if (colors[static_cast<std::size_t>(target)] != colors[static_cast<std::size_t>(base)]) continue;
      forced.resize(static_cast<std::size_t>(base));
      std::iota(forced.begin(), forced.end(), 0);
      forced.push_back(target);
      if (auto sigma = search.find(forced)) {
        generators.push_back(GraphAutomorphism::permuting(*sigma));
        orbit = point_orbit(m, generators, base);
        for (const int p : orbit) settled[static_cast<std::size_t>(p)] = 1;
      } else {
        for (const int p : point_orbit(m, generators, target)) settled[static_cast<std::size_t>(p)] = 1;
      }
    }
    order = checked_multiply(order, orbit.size());
  }
  return GroupHandle(m, std::move(generators), order);
}

std::optional<Permutation> find_set_system_map(int m, std::span<const Mask> from,
                                               std::span<const Mask> to) {
  SetSystemSearch search(m, from, to);
  return search.find({});
}

GroupHandle code_automorphism_group(const Code& code) {
  const int m = code.length();
  const Mask shift = code.contains(0) ? 0 : code.words().front();
  std::vector<Mask> base;
  base.reserve(code.size());
  for (const Mask w : code.words()) base.push_back(w ^ shift);
  std::sort(base.begin(), base.end());

  const GroupHandle zero_stabilizer = setwise_stabilizer_perms(m, base);
  std::vector<GraphAutomorphism> generators(zero_stabilizer.generators().begin(),
                                            zero_stabilizer.generators().end());

  auto orbit = orbit_under(m, generators, 0);
  std::vector<Mask> settled = orbit;
  for (const Mask beta : base) {
    if (std::binary_search(settled.begin(), settled.end(), beta)) continue;
    std::vector<Mask> shifted;
    shifted.reserve(base.size());
    for (const Mask w : base) shifted.push_back(w ^ beta);
    if (auto sigma = find_set_system_map(m, shifted, base)) {
      generators.emplace_back(beta, *sigma);
      orbit = orbit_under(m, generators, 0);
      settled.insert(settled.end(), orbit.begin(), orbit.end());
    } else {
      const auto lost = orbit_under(m, generators, beta);
      settled.insert(settled.end(), lost.begin(), lost.end());
    }
    std::sort(settled.begin(), settled.end());
    settled.erase(std::unique(settled.begin(), settled.end()), settled.end());
  }
  const std::uint64_t order = checked_multiply(*zero_stabilizer.order(), orbit.size());

  if (shift != 0) {
    const auto tau = GraphAutomorphism::translation_by(shift, m);
    for (auto& g : generators) g = tau * g * tau;
  }
  return GroupHandle(m, std::move(generators), order);
}

// ---------------------------------------------------------------------------
// Orbits

std::vector<Mask> orbit_of(const GroupHandle& group, Mask start) {
  if ((start & ~full_mask(group.degree())) != 0) throw ParameterError("vertex exceeds group degree");
  return orbit_under(group.degree(), group.generators(), start);
}

Orbits orbits(const GroupHandle& group) {
  const std::size_t n = std::size_t{1} << group.degree();
  std::vector<Mask> all(n);
  std::iota(all.begin(), all.end(), Mask{0});
  return orbits(group, all);
}

Orbits orbits(const GroupHandle& group, std::span<const Mask> domain) {
  std::vector<Mask> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> in_domain(std::size_t{1} << group.degree(), 0);
  for (const Mask v : sorted) {
    if ((v & ~full_mask(group.degree())) != 0) throw ParameterError("vertex exceeds group degree");
    in_domain[v] = 1;
  }
  std::vector<char> seen(in_domain.size(), 0);
  Orbits out;
  for (const Mask start : sorted) {
    if (seen[start]) continue;
    std::vector<Mask> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : group.generators()) {
        const Mask next = g.apply(orbit[i]);
        if (!in_domain[next]) {
          throw ParameterError("orbit domain is not invariant: " + to_string(orbit[i], group.degree()) +
                               " maps outside it");
        }
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Orbits orbits_on_ksubsets(const GroupHandle& group, int k) {
  if (k < 0 || k > group.degree()) throw ParameterError("subset size outside [0, m]");
  for (const auto& g : group.generators()) {
    if (!g.is_pure_permutation()) {
      throw ParameterError("k-subset action needs pure permutations; generator " + g.to_string() +
                           " has a nonzero translation");
    }
  }
  return orbits(group, ksubsets(group.degree(), k));
}

int transitivity_degree(const GroupHandle& group) {
  const int m = group.degree();
  int degree = 0;
  for (int k = 1; k <= m; ++k) {
    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= static_cast<std::uint64_t>(m - i);
    if (group.order() && tuples > *group.order()) break;
    if (tuples > kDefaultElementBudget) {
      throw ResourceError("transitivity check needs more than " +
                          std::to_string(kDefaultElementBudget) + " tuples");
    }
    std::string start(static_cast<std::size_t>(k), '\0');
    for (int i = 0; i < k; ++i) start[static_cast<std::size_t>(i)] = static_cast<char>(i);
    std::unordered_set<std::string> seen{start};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
      const std::string tuple = queue.front();
      queue.pop_front();
      for (const auto& g : group.generators()) {
        std::string next = tuple;
        for (auto& c : next) c = static_cast<char>(g.permutation()[c]);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    if (seen.size() != tuples) break;
    degree = k;
  }
  return degree;
}

// ---------------------------------------------------------------------------
// Projection

namespace {

std::vector<int> normalized_coordinates(std::span<const int> coordinates, int m) {
  std::vector<int> j(coordinates.begin(), coordinates.end());
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  if (j.empty()) throw ParameterError("projection onto an empty coordinate set");
  for (const int c : j) {
    if (c < 1 || c > m) throw ParameterError("coordinate " + std::to_string(c) + " out of range");
  }
  return j;
}

GraphAutomorphism project_normalized(const GraphAutomorphism& x, const std::vector<int>& j) {
  const int m = x.length();
  std::vector<int> position(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < j.size(); ++i) position[static_cast<std::size_t>(j[i] - 1)] = static_cast<int>(i);
  std::vector<int> images(j.size());
  Mask translation = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int source = j[i] - 1;
    const int target = x.permutation()[source];
    if (position[static_cast<std::size_t>(target)] < 0) {
      throw ParameterError("automorphism " + x.to_string() + " moves coordinate " +
                           std::to_string(source + 1) + " outside J");
    }
    images[i] = position[static_cast<std::size_t>(target)];
    if ((x.translation() >> source) & 1U) translation |= Mask{1} << i;
  }
  return GraphAutomorphism(translation, Permutation::from_images(images));
}

}  // namespace

GraphAutomorphism project_element(const GraphAutomorphism& x, std::span<const int> coordinates) {
  return project_normalized(x, normalized_coordinates(coordinates, x.length()));
}

GroupHandle project_group(const GroupHandle& group, std::span<const int> coordinates) {
  const auto j = normalized_coordinates(coordinates, group.degree());
  std::vector<GraphAutomorphism> generators;
  for (const auto& g : group.generators()) {
    auto projected = project_normalized(g, j);
    if (!projected.is_identity()) generators.push_back(projected);
  }
  return GroupHandle(static_cast<int>(j.size()), std::move(generators));
}

bool projection_is_injective(const GroupHandle& group, std::span<const int> coordinates) {
  const auto j = normalized_coordinates(coordinates, group.degree());
  std::unordered_set<GraphAutomorphism, GraphAutomorphismHash> images;
  for (const auto& x : group.elements()) {
    if (!images.insert(project_normalized(x, j)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

std::vector<int> weight_profile(const Code& code) {
  std::vector<int> out(static_cast<std::size_t>(code.length()) + 1, 0);
  for (const Mask w : code.words()) ++out[static_cast<std::size_t>(popcount(w))];
  return out;
}

}  // namespace

std::optional<Permutation> find_permutation_equivalence(const Code& a, const Code& b) {
  if (a.length() != b.length()) throw ParameterError("equivalence: length mismatch");
  if (a.size() != b.size() || weight_profile(a) != weight_profile(b)) return std::nullopt;
  return find_set_system_map(a.length(), a.words(), b.words());
}

std::optional<GraphAutomorphism> find_equivalence(const Code& a, const Code& b) {
  if (a.length() != b.length()) throw ParameterError("equivalence: length mismatch");
  if (a.size() != b.size()) return std::nullopt;
  if (distance_distribution(a).a != distance_distribution(b).a) return std::nullopt;
  const int m = a.length();
  const Mask shift = a.words().front();
  std::vector<Mask> from;
  from.reserve(a.size());
  for (const Mask w : a.words()) from.push_back(w ^ shift);
  for (const Mask beta : b.words()) {
    std::vector<Mask> to;
    to.reserve(b.size());
    for (const Mask w : b.words()) to.push_back(w ^ beta);
    if (auto sigma = find_set_system_map(m, from, to)) {
      return GraphAutomorphism(shift, *sigma) * GraphAutomorphism::translation_by(beta, m);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generator files

void write_generators(std::ostream& out, std::span<const GraphAutomorphism> generators) {
  for (const auto& g : generators) out << g.to_string() << '\n';
}

std::vector<GraphAutomorphism> read_generators(std::istream& in) {
  std::vector<GraphAutomorphism> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(GraphAutomorphism::parse(std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParameterError& e) {
      throw FormatError(e.what(), line_number);
    }
    if (out.back().length() != out.front().length()) {
      throw FormatError("generator length differs from the first line", line_number);
    }
  }
  return out;
}

}  // namespace creg
