#include "creg/classify.hpp"

#include <algorithm>

#include "creg/designs.hpp"
#include "creg/hadamard.hpp"
#include "creg/regularity.hpp"
#include "creg/spectral.hpp"

namespace creg {

namespace {

Json labels_json(Mask b) { return support(b); }

Json blocks_json(std::span<const Mask> blocks) {
  Json out = Json::array();
  for (const Mask b : blocks) out.push_back(labels_json(b));
  return out;
}

Json words_json(const Code& code) {
  Json out = Json::array();
  for (const Mask w : code.words()) out.push_back(to_string(w, code.length()));
  return out;
}

Json rational_json(const Rational& r) { return to_string(r); }

std::vector<Mask> weight_supports(const Code& code, int k) { return weight_class(code, k); }

struct DesignParameters {
  int t;
  int points;
  int k;
};

/// Design formed by the weight-delta codewords of a code containing 0.
DesignParameters design_parameters(int m, int delta) { return {delta / 2, m, delta}; }

}  // namespace

bool classification_supported(int m, int delta) {
  return (m == 12 && delta == 6) || (m == 11 && delta == 5);
}

Code reference_code(int m) {
  const Code c = code_of(paley_hadamard_12());
  if (m == 12) return c;
  if (m == 11) return puncture(c, 1);
  throw ParameterError("reference code exists only for m = 11 or 12");
}

Certificate lambda_bounds(int m, int delta, int t) {
  if (!classification_supported(m, delta) || t != delta / 2) {
    throw ParameterError("lambda bounds need (m, delta) in {(12,6), (11,5)} and t = floor(delta/2)");
  }
  const int bound = (m - t) / (delta - t);
  Certificate c;
  c.claim = "the weight-" + std::to_string(delta) + " codewords form a " + std::to_string(t) + "-(" +
            std::to_string(m) + "," + std::to_string(delta) +
            ",lambda) design; weight-delta supports through a fixed t-set pairwise meet only in it, so "
            "lambda <= (m-t)/(delta-t), and integrality of every lambda_i leaves a single value";
  c.anchor = "classification.step1.lambda";
  Json candidates = Json::array();
  std::vector<std::int64_t> survivors;
  for (int lambda = 1; lambda <= bound; ++lambda) {
    Json values = Json::array();
    bool integral = true;
    for (int i = 0; i <= t; ++i) {
      const auto v = lambda_i(t, m, delta, Rational(lambda), i);
      values.push_back(rational_json(v));
      integral = integral && is_integral(v);
    }
    candidates.push_back({{"lambda", lambda}, {"lambda_i", values}, {"integral", integral}});
    if (integral) survivors.push_back(lambda);
  }
  const Code reference = reference_code(m);
  const auto check = is_t_design(m, weight_supports(reference, delta), t);

  c.witness = {{"m", m},
               {"delta", delta},
               {"t", t},
               {"counting_bound", bound},
               {"candidates", candidates},
               {"survivors", survivors},
               {"reference_lambda", check.lambda ? Json(*check.lambda) : Json(nullptr)}};
  const bool unique = survivors.size() == 1;
  if (unique) c.witness["lambda"] = survivors.front();
  c.verdict = unique && check.lambda == survivors.front() ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate reject_size_23() {
  DistanceDistribution a;
  a.a.assign(12, Rational(0));
  a.a[0] = 1;
  a.a[5] = 11;
  a.a[6] = 11;
  const auto transform = macwilliams_transform(a);
  Certificate c;
  c.claim = "a length-11 code of size 23 with distance distribution a_0 = 1, a_5 = a_6 = 11 would have a "
            "negative MacWilliams transform entry, so no such code exists";
  c.anchor = "classification.step3.reject-size-23";
  Json dist = Json::array();
  for (const auto& v : a.a) dist.push_back(rational_json(v));
  Json values = Json::array();
  for (const auto& v : transform.values) values.push_back(rational_json(v));
  c.witness = {{"m", 11}, {"distribution", dist}, {"transform", values}, {"a2", rational_json(transform.values[2])}};
  c.verdict = transform.values[2] < 0 ? Verdict::pass : Verdict::fail;
  return c;
}

bool ClassificationRun::passed() const {
  return !steps.empty() && sigma.has_value() &&
         std::all_of(steps.begin(), steps.end(), [](const Certificate& c) { return c.passed(); });
}

namespace {

Certificate block_count_step(int t, int m, int k, std::int64_t lambda) {
  const auto b = block_count(t, m, k, Rational(lambda));
  Certificate c;
  c.claim = "a " + std::to_string(t) + "-(" + std::to_string(m) + "," + std::to_string(k) + "," +
            std::to_string(lambda) + ") design has lambda * binom(m,t) / binom(k,t) blocks, which counts the "
            "codewords of weight " + std::to_string(k);
  c.anchor = "classification.step2.block-count";
  c.witness = {{"t", t}, {"m", m}, {"k", k}, {"lambda", lambda}, {"blocks", rational_json(b)}};
  c.verdict = is_integral(b) ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate complement_closure_step(const std::vector<Design>& classes) {
  Certificate c;
  c.claim = "the blocks of the 3-(12,6,2) design are closed under complement, so with complete regularity "
            "the code is antipodal and contains the all-ones word";
  c.anchor = "classification.step3.complement-closure";
  if (classes.size() != 1) {
    c.witness = {{"classes", classes.size()}};
    c.verdict = Verdict::fail;
    return c;
  }
  const auto& blocks = classes.front().blocks;
  const Mask all = full_mask(classes.front().points);
  Json pairs = Json::array();
  bool closed = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), blocks[i] ^ all);
    if (it == blocks.end() || *it != (blocks[i] ^ all)) {
      closed = false;
      pairs.push_back(nullptr);
    } else {
      pairs.push_back(it - blocks.begin());
    }
  }
  c.witness = {{"points", classes.front().points}, {"blocks", blocks_json(blocks)}, {"complement_index", pairs}};
  c.verdict = closed ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate size_forcing_step(std::int64_t blocks, std::int64_t size_bound) {
  const std::int64_t lower = 1 + blocks + 1;
  Certificate c;
  c.claim = "the zero word, the " + std::to_string(blocks) + " weight-6 codewords and the all-ones word give "
            "|C| >= " + std::to_string(lower) + "; with |C| <= A(12,6) the code consists of exactly these words";
  c.anchor = "classification.step3.size-forcing";
  c.witness = {{"zero", 1}, {"weight_delta", blocks}, {"all_ones", 1}, {"lower_bound", lower}, {"size_bound", size_bound}};
  if (lower > size_bound) {
    c.witness["contradiction"] = "the lower bound exceeds the size bound";
  } else if (lower < size_bound) {
    c.witness["contradiction"] = "the size bound does not force the code size";
  }
  c.verdict = lower == size_bound ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate mu_step(std::int64_t blocks5, std::int64_t size_bound, std::int64_t& mu_out) {
  Certificate c;
  c.claim = "two weight-5 codewords through a common pair are at distance 6, so by complete regularity the "
            "weight-6 codewords form a nonempty 2-(11,6,mu) design; integrality and |C| <= A(11,5) leave one mu";
  c.anchor = "classification.step3.mu";
  Json candidates = Json::array();
  std::vector<std::int64_t> feasible;
  for (std::int64_t mu = 1;; ++mu) {
    bool integral = true;
    Json values = Json::array();
    for (int i = 0; i <= 2; ++i) {
      const auto v = lambda_i(2, 11, 6, Rational(mu), i);
      values.push_back(rational_json(v));
      integral = integral && is_integral(v);
    }
    const auto b6 = block_count(2, 11, 6, Rational(mu));
    const Rational size = Rational(1 + blocks5) + b6;
    const bool within = size <= Rational(size_bound);
    candidates.push_back({{"mu", mu}, {"lambda_i", values}, {"integral", integral}, {"minimum_size", rational_json(size)},
                          {"within_bound", within}});
    if (!within) break;
    if (integral) feasible.push_back(mu);
  }
  c.witness = {{"weight5_blocks", blocks5}, {"size_bound", size_bound}, {"candidates", candidates}, {"feasible", feasible}};
  if (feasible.size() == 1) {
    mu_out = feasible.front();
    c.witness["mu"] = mu_out;
    c.witness["weight6_blocks"] = rational_json(block_count(2, 11, 6, Rational(mu_out)));
    c.verdict = Verdict::pass;
  } else {
    c.witness["contradiction"] = feasible.empty() ? "no admissible mu fits within the size bound"
                                                  : "more than one admissible mu";
    c.verdict = Verdict::fail;
  }
  return c;
}

Certificate fisher_step(std::int64_t size_bound, std::int64_t accounted) {
  Certificate c;
  c.claim = "the one remaining codeword cannot have weight 7..10: it would form a 2-design on the 11 points "
            "with a single block, violating Fisher's inequality";
  c.anchor = "classification.step3.fisher";
  Json rejected = Json::array();
  bool all = true;
  for (int i = 7; i <= 10; ++i) {
    const auto f = fisher_check(11, i, 1);
    rejected.push_back({{"weight", i}, {"blocks", 1}, {"points", 11}, {"fisher_holds", f.passed()}});
    all = all && !f.passed();
  }
  c.witness = {{"size_bound", size_bound},
               {"accounted", accounted},
               {"remaining", size_bound - accounted},
               {"weights", rejected},
               {"note", "the design lives on the 11 coordinates of the code"}};
  c.verdict = all && size_bound - accounted == 1 ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate antipodal_step(const std::vector<Design>& classes, std::int64_t mu) {
  Certificate c;
  c.claim = "the remaining codeword is the all-ones word, so the code is antipodal and its weight-6 words are "
            "the complements of the weight-5 words, forming a 2-(11,6,mu) design";
  c.anchor = "classification.step3.antipodal";
  if (classes.size() != 1) {
    c.witness = {{"classes", classes.size()}};
    c.verdict = Verdict::fail;
    return c;
  }
  const auto& d = classes.front();
  std::vector<Mask> complements;
  for (const Mask b : d.blocks) complements.push_back(full_mask(d.points) & ~b);
  std::sort(complements.begin(), complements.end());
  const auto check = is_t_design(d.points, complements, 2);
  c.witness = {{"extra_weight", 11},
               {"weight5_blocks", blocks_json(d.blocks)},
               {"complement_blocks", blocks_json(complements)},
               {"complement_lambda", check.lambda ? Json(*check.lambda) : Json(nullptr)},
               {"mu", mu}};
  c.verdict = check.lambda == mu ? Verdict::pass : Verdict::fail;
  return c;
}

Certificate uniqueness_step(const DesignParameters& p, std::int64_t lambda, const EnumerationResult& result) {
  Certificate c;
  c.claim = "orderly generation finds exactly one isomorphism class of " + std::to_string(p.t) + "-(" +
            std::to_string(p.points) + "," + std::to_string(p.k) + "," + std::to_string(lambda) + ") designs";
  c.anchor = "classification.step4.uniqueness";
  Json reps = Json::array();
  for (const auto& d : result.classes) reps.push_back(blocks_json(d.blocks));
  c.witness = {{"t", p.t},
               {"points", p.points},
               {"k", p.k},
               {"lambda", lambda},
               {"classes", result.classes.size()},
               {"representatives", reps},
               {"nodes", result.stats.nodes},
               {"canonical_nodes", result.stats.canonical_nodes}};
  c.verdict = result.classes.size() == 1 ? Verdict::pass : Verdict::fail;
  return c;
}

Code candidate_code(int m, const Design& d) {
  std::vector<Mask> words{0, full_mask(m)};
  for (const Mask b : d.blocks) {
    words.push_back(b);
    if (m == 11) words.push_back(full_mask(m) & ~b);
  }
  return Code(m, std::move(words));
}

Certificate equivalence_step(int m, const std::vector<Design>& classes, std::optional<std::vector<int>>& sigma) {
  Certificate c;
  c.claim = "a coordinate permutation maps the code built from the unique design onto the reference code";
  c.anchor = "classification.step5.equivalence";
  if (classes.size() != 1) {
    c.witness = {{"classes", classes.size()}};
    c.verdict = Verdict::fail;
    return c;
  }
  const Code candidate = candidate_code(m, classes.front());
  const Code reference = reference_code(m);
  const auto found = find_permutation_equivalence(candidate, reference);
  c.witness = {{"m", m}, {"candidate", words_json(candidate)}, {"reference", words_json(reference)}};
  if (found && image(candidate, GraphAutomorphism::permuting(*found)) == reference) {
    sigma = found->one_based();
    c.witness["sigma"] = *sigma;
    c.verdict = Verdict::pass;
  } else {
    c.witness["sigma"] = nullptr;
    c.verdict = Verdict::fail;
  }
  return c;
}

}  // namespace

ClassificationRun classify(int m, int delta, std::int64_t size_bound, const ClassifyOptions& options) {
  if (!classification_supported(m, delta)) {
    throw ParameterError("classification supports (m, delta) = (12, 6) or (11, 5) only");
  }
  ClassificationRun run;
  run.m = m;
  run.delta = delta;
  run.size_bound = size_bound;
  const auto p = design_parameters(m, delta);

  auto push = [&run](Certificate c) {
    run.steps.push_back(std::move(c));
    return run.steps.back().passed();
  };

  if (!push(lambda_bounds(m, delta, p.t))) return run;
  const std::int64_t lambda = run.steps.back().witness.at("lambda").get<std::int64_t>();
  if (!push(block_count_step(p.t, m, delta, lambda))) return run;
  const auto blocks = static_cast<std::int64_t>(block_count(p.t, m, delta, Rational(lambda)));

  EnumerationOptions enumeration;
  enumeration.threads = options.threads;
  enumeration.node_budget = options.node_budget;
  const auto designs = enumerate_designs(p.t, p.points, p.k, lambda, enumeration);

  if (m == 12) {
    if (!push(complement_closure_step(designs.classes))) return run;
    if (!push(size_forcing_step(blocks, size_bound))) return run;
  } else {
    std::int64_t mu = 0;
    if (!push(mu_step(blocks, size_bound, mu))) return run;
    if (!push(reject_size_23())) return run;
    const std::int64_t weight6 = static_cast<std::int64_t>(block_count(2, 11, 6, Rational(mu)));
    if (!push(fisher_step(size_bound, 1 + blocks + weight6))) return run;
    if (!push(antipodal_step(designs.classes, mu))) return run;
  }
  if (!push(uniqueness_step(p, lambda, designs))) return run;
  push(equivalence_step(m, designs.classes, run.sigma));
  return run;
}

Certificate certify_theorem(int m, int delta, const ClassifyOptions& options) {
  if (!classification_supported(m, delta)) {
    throw ParameterError("theorem certificate supports (m, delta) = (12, 6) or (11, 5) only");
  }
  const Code code = reference_code(m);
  const auto regular = certify_completely_regular(code, options.threads);
  const auto group = code_automorphism_group(code);
  const auto closed = closure(group, options.element_budget);
  const auto transitive = certify_completely_transitive(code, closed, options.threads);

  // Complete transitivity carries over to an equivalent code by conjugation.
  std::vector<int> shift(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % m;
  const GraphAutomorphism x(Mask{0b101}, Permutation::from_images(shift));
  const Code conjugate = image(code, x);
  std::vector<GraphAutomorphism> conjugated;
  Json conjugated_json = Json::array();
  for (const auto& g : group.generators()) {
    conjugated.push_back(x.inverse() * g * x);
    conjugated_json.push_back(conjugated.back().to_string());
  }
  const auto moved = certify_completely_transitive(conjugate, GroupHandle(m, conjugated));

  Json generators = Json::array();
  for (const auto& g : group.generators()) generators.push_back(g.to_string());

  Certificate c;
  c.claim = "the reference code is completely regular and completely transitive under its automorphism group, "
            "and so is every equivalent code";
  c.anchor = "theorem.complete-transitivity";
  c.witness = {{"m", m},
               {"delta", delta},
               {"code", words_json(code)},
               {"covering_radius", regular.covering_radius},
               {"intersection_table", regular.intersection_table},
               {"generators", generators},
               {"group_order", *group.order()},
               {"closure_order", *closed.order()},
               {"cell_sizes", transitive.cell_sizes},
               {"orbit_sizes", transitive.orbit_sizes},
               {"conjugation",
                {{"element", x.to_string()},
                 {"generators", conjugated_json},
                 {"cell_sizes", moved.cell_sizes},
                 {"orbit_sizes", moved.orbit_sizes},
                 {"completely_transitive", moved.completely_transitive}}}};
  const bool ok = regular.completely_regular && transitive.completely_transitive &&
                  *group.order() == *closed.order() && moved.completely_transitive;
  c.verdict = ok ? Verdict::pass : Verdict::fail;
  return c;
}

ClassificationRun classify_and_certify(int m, int delta, std::int64_t size_bound, const ClassifyOptions& options) {
  auto run = classify(m, delta, size_bound, options);
  if (run.passed()) run.steps.push_back(certify_theorem(m, delta, options));
  return run;
}

Json report_json(const ClassificationRun& run, std::optional<double> runtime_ms) {
  Json steps = Json::array();
  for (const auto& s : run.steps) steps.push_back(to_json(s));
  Json j;
  j["schema"] = kReportSchema;
  j["parameters"] = {{"m", run.m}, {"delta", run.delta}};
  j["size_bound"] = run.size_bound;
  j["steps"] = steps;
  j["sigma"] = run.sigma ? Json(*run.sigma) : Json(nullptr);
  const bool all_pass = !run.steps.empty() &&
                        std::all_of(run.steps.begin(), run.steps.end(), [](const Certificate& c) { return c.passed(); });
  j["verdict"] = to_string(all_pass && run.sigma ? Verdict::pass : Verdict::fail);
  if (runtime_ms) j["runtime_ms"] = *runtime_ms;
  return j;
}

}  // namespace creg
