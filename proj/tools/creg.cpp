// creg: construct, analyze and certify the Hadamard 12 code and its puncture,
// enumerate designs, compute automorphism groups, and run or replay the
// classification certificate chain.
//
// Exit codes: 0 every certificate passed, 1 a certificate failed, 2 usage or
// I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "creg/classify.hpp"
#include "creg/code.hpp"
#include "creg/designs.hpp"
#include "creg/hadamard.hpp"
#include "creg/regularity.hpp"
#include "creg/replay.hpp"
#include "creg/spectral.hpp"
#include "creg/symmetry.hpp"

namespace {

using namespace creg;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  int threads = 1;
  std::size_t element_budget = kDefaultElementBudget;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write report '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw UsageError("write failed for '" + path + "'");
}

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

std::vector<std::string> rationals(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

int verdict_code(bool pass) {
  std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kPass : kFail;
}

// construct ------------------------------------------------------------------

int run_construct(const std::string& target, const std::string& out) {
  if (target == "hadamard12") {
    write_matrix_file(out, paley_hadamard_12());
  } else if (target == "code12") {
    const std::vector<std::string> note{"Hadamard 12 code, (12,24,6)"};
    write_code_file(out, reference_code(12), note);
  } else {
    const std::vector<std::string> note{"Hadamard 12 code punctured at coordinate 1, (11,24,5)"};
    write_code_file(out, reference_code(11), note);
  }
  std::cout << "wrote " << target << " to " << out << '\n';
  return kPass;
}

// analyze --------------------------------------------------------------------

Json weight_designs(const Code& code) {
  Json out = Json::array();
  const int m = code.length();
  for (int k = 1; k < m; ++k) {
    const auto blocks = weight_class(code, k);
    if (blocks.empty()) continue;
    int best_t = 0;
    std::int64_t best_lambda = static_cast<std::int64_t>(blocks.size());
    for (int t = 1; t <= k; ++t) {
      const auto check = is_t_design(m, blocks, t);
      if (!check) break;
      best_t = t;
      best_lambda = *check.lambda;
    }
    Json entry{{"weight", k}, {"words", blocks.size()}, {"t", best_t}};
    entry["lambda"] = best_t > 0 ? Json(best_lambda) : Json(nullptr);
    out.push_back(entry);
  }
  return out;
}

int run_analyze(const std::string& path, const std::string& report) {
  const Code code = read_code_file(path);
  const auto dd = distance_distribution(code);
  const auto transform = macwilliams_transform(dd);
  const auto packed = certify_uniformly_packed(code);

  Json j;
  j["m"] = code.length();
  j["size"] = code.size();
  j["min_distance"] = code.has_min_distance() ? Json(code.min_distance()) : Json(nullptr);
  j["covering_radius"] = code.covering_radius();
  j["distance_distribution"] = rationals(dd.a);
  j["macwilliams_transform"] = rationals(transform.values);
  j["transform_nonnegative"] = transform.nonnegative();
  j["external_distance"] = transform.external_distance();
  j["uniformly_packed"] = packed.satisfied;
  if (packed.satisfied) j["packing_weights"] = rationals(packed.lambdas);
  j["antipodal"] = is_antipodal(code);
  j["weight_designs"] = weight_designs(code);

  std::cout << "m = " << code.length() << ", N = " << code.size() << '\n';
  std::cout << "delta = " << (code.has_min_distance() ? std::to_string(code.min_distance()) : "undefined") << '\n';
  std::cout << "rho = " << code.covering_radius() << '\n';
  std::cout << "s = " << transform.external_distance() << '\n';
  std::cout << "distance distribution: " << join(rationals(dd.a)) << '\n';
  std::cout << "MacWilliams transform: " << join(rationals(transform.values)) << '\n';
  std::cout << "uniformly packed: " << (packed.satisfied ? "yes" : "no") << '\n';
  std::cout << "antipodal: " << (is_antipodal(code) ? "yes" : "no") << '\n';
  for (const auto& d : j["weight_designs"]) {
    std::cout << "weight " << d["weight"] << ": " << d["words"] << " words";
    if (d["t"].get<int>() > 0) {
      std::cout << ", " << d["t"] << "-(" << code.length() << "," << d["weight"] << "," << d["lambda"] << ") design";
    }
    std::cout << '\n';
  }
  write_json(report, j);
  return kPass;
}

// certify --------------------------------------------------------------------

void print_table(const std::vector<std::vector<std::int64_t>>& table) {
  for (std::size_t i = 0; i < table.size(); ++i) std::cout << "  C_" << i << ": " << join(table[i]) << '\n';
}

GroupHandle group_for(const Code& code, const std::string& generators_path, const Globals& g) {
  if (generators_path.empty()) return closure(code_automorphism_group(code), g.element_budget);
  std::ifstream in(generators_path);
  if (!in) throw UsageError("cannot read generator file '" + generators_path + "'");
  auto gens = read_generators(in);
  for (const auto& x : gens) {
    if (x.length() != code.length()) throw UsageError("generator degree differs from the code length");
  }
  return closure(GroupHandle(code.length(), std::move(gens)), g.element_budget);
}

int run_certify(const std::string& path, const std::string& which, const std::string& generators_path,
                const std::string& report, const Globals& g) {
  const Code code = read_code_file(path);
  if (which == "creg") {
    const auto r = certify_completely_regular(code, g.threads);
    std::cout << "rho = " << r.covering_radius << '\n';
    if (r.completely_regular) {
      std::cout << "intersection table (f_0..f_m per cell):\n";
      print_table(r.intersection_table);
    } else {
      const auto& c = *r.counterexample;
      std::cout << "counterexample in C_" << c.cell << ": " << to_string(c.reference, code.length()) << " has "
                << c.reference_count << " codewords at distance " << c.radius << ", "
                << to_string(c.vertex, code.length()) << " has " << c.vertex_count << '\n';
    }
    write_json(report, to_json(r.to_certificate()));
    return verdict_code(r.completely_regular);
  }

  const GroupHandle group = group_for(code, generators_path, g);
  const auto t = certify_completely_transitive(code, group, g.threads);
  std::cout << "group order = " << *group.order() << '\n';
  std::cout << "cell sizes: " << join(t.cell_sizes) << '\n';
  std::cout << "orbit sizes: " << join(t.orbit_sizes) << '\n';
  if (which == "ct") {
    write_json(report, to_json(t.to_certificate()));
    return verdict_code(t.completely_transitive);
  }

  const int m = code.length();
  const int delta = code.has_min_distance() ? code.min_distance() : 0;
  if (!classification_supported(m, delta)) {
    throw UsageError("theorem applies to codes with (m, delta) = (12, 6) or (11, 5)");
  }
  const auto r = certify_completely_regular(code, g.threads);
  const auto to_reference = find_equivalence(code, reference_code(m));
  std::cout << "completely regular: " << (r.completely_regular ? "yes" : "no") << '\n';
  std::cout << "completely transitive: " << (t.completely_transitive ? "yes" : "no") << '\n';
  std::cout << "equivalent to the reference code: " << (to_reference ? to_reference->to_string() : "no") << '\n';
  const bool pass = r.completely_regular && t.completely_transitive && code.size() == 24 && to_reference;
  Certificate c;
  c.claim = "the code has the Hadamard 12 parameters, is completely regular and completely transitive, and is "
            "equivalent to the reference code";
  c.anchor = "theorem.code-file";
  c.witness = {{"m", m},
               {"delta", delta},
               {"size", code.size()},
               {"regularity", to_json(r.to_certificate())},
               {"transitivity", to_json(t.to_certificate())},
               {"equivalence", to_reference ? Json(to_reference->to_string()) : Json(nullptr)}};
  c.verdict = pass ? Verdict::pass : Verdict::fail;
  write_json(report, to_json(c));
  return verdict_code(pass);
}

// classify / replay ------------------------------------------------------------

int run_classify(int m, int delta, std::int64_t size_bound, const std::string& report, bool timing,
                 std::uint64_t node_budget, const Globals& g) {
  if (!classification_supported(m, delta)) {
    throw UsageError("classify supports (m, delta) = (12, 6) or (11, 5) only");
  }
  ClassifyOptions options;
  options.threads = g.threads;
  options.element_budget = g.element_budget;
  options.node_budget = node_budget;
  const auto start = std::chrono::steady_clock::now();
  const auto run = classify_and_certify(m, delta, size_bound, options);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  for (const auto& s : run.steps) std::cout << to_string(s.verdict) << "  " << s.anchor << '\n';
  if (run.sigma) std::cout << "sigma: " << join(*run.sigma) << '\n';
  const auto j = report_json(run, timing ? std::optional<double>(ms) : std::nullopt);
  write_json(report, j);
  return verdict_code(j["verdict"] == "PASS");
}

int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read report '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("report is not JSON: ") + e.what());
  }
  const auto r = replay_report(j);
  if (!r.schema_ok) throw UsageError("report does not carry schema creg-cert/1");
  for (const auto& s : r.steps) {
    std::cout << (s.reproduced ? "reproduced " : "MISMATCH   ") << to_string(s.recorded) << "  " << s.anchor << "  "
              << s.message << '\n';
  }
  return verdict_code(r.all_pass());
}

// enumerate-designs / aut ------------------------------------------------------

int run_enumerate(int t, int m, int k, std::int64_t lambda, const std::string& out, std::uint64_t node_budget,
                  const Globals& g) {
  EnumerationOptions options;
  options.threads = g.threads;
  options.node_budget = node_budget;
  const auto result = enumerate_designs(t, m, k, lambda, options);
  std::cout << t << "-(" << m << "," << k << "," << lambda << "): " << result.classes.size()
            << " isomorphism class(es), " << result.stats.nodes << " nodes\n";
  std::ostringstream designs;
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const auto& d = result.classes[i];
    std::cout << "class " << i + 1 << ": " << d.block_count() << " blocks, |Aut| = "
              << *design_automorphisms(d).order() << '\n';
    write_design(designs, d);
  }
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw UsageError("cannot write '" + out + "'");
    file << designs.str();
  }
  return kPass;
}

int run_aut(const std::string& path, const std::string& out, const Globals& g) {
  const Code code = read_code_file(path);
  const auto group = code_automorphism_group(code);
  const auto closed = closure(group, g.element_budget);
  std::cout << "|Aut(C)| = " << *group.order() << " (closure " << *closed.order() << ")\n";
  if (!code.words().empty()) {
    const Mask w = code.words().front();
    const auto stab = stabilizer_of_vertex(closed, w, g.element_budget);
    std::cout << "stabilizer of " << to_string(w, code.length()) << ": order " << *stab.order() << ", index "
              << *closed.order() / *stab.order() << ", " << transitivity_degree(stab)
              << "-transitive on coordinates\n";
  }
  std::cout << "generators:\n";
  write_generators(std::cout, group.generators());
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw UsageError("cannot write '" + out + "'");
    write_generators(file, group.generators());
  }
  return closed.order() == group.order() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for the Hadamard 12 code and its puncture"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--element-budget", globals.element_budget, "Largest group closure to enumerate")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "Write the Hadamard matrix or one of the codes");
  std::string target, out;
  construct->add_option("target", target)->required()->check(CLI::IsMember({"hadamard12", "code12", "code11"}));
  construct->add_option("--out", out, "Output file")->required();
  construct->callback([&] { action = [&] { return run_construct(target, out); }; });

  auto* analyze = app.add_subcommand("analyze", "Parameters, spectra and weight-class designs of a code");
  std::string code_path, report;
  analyze->add_option("code", code_path)->required()->check(CLI::ExistingFile);
  analyze->add_option("--report", report, "JSON report path");
  analyze->callback([&] { action = [&] { return run_analyze(code_path, report); }; });

  auto* certify = app.add_subcommand("certify", "Certify complete regularity, transitivity or the theorem");
  std::string which, generators_path;
  certify->add_option("code", code_path)->required()->check(CLI::ExistingFile);
  certify->add_option("which", which)->required()->check(CLI::IsMember({"creg", "ct", "theorem"}));
  certify->add_option("--generators", generators_path, "Generator file for the group")->check(CLI::ExistingFile);
  certify->add_option("--report", report, "JSON certificate path");
  certify->callback([&] { action = [&] { return run_certify(code_path, which, generators_path, report, globals); }; });

  auto* classify_cmd = app.add_subcommand("classify", "Run the uniqueness certificate chain");
  int m = 0, delta = 0;
  std::int64_t size_bound = 24;
  bool no_timing = false;
  std::uint64_t node_budget = 200'000'000;
  classify_cmd->add_option("m", m)->required();
  classify_cmd->add_option("delta", delta)->required();
  classify_cmd->add_option("--size-bound", size_bound, "A(m, delta)")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--report", report, "JSON report path");
  classify_cmd->add_flag("--no-timing", no_timing, "Omit runtime_ms for byte-identical reports");
  classify_cmd->add_option("--node-budget", node_budget, "Enumeration node budget")->check(CLI::PositiveNumber);
  classify_cmd->callback([&] {
    action = [&] { return run_classify(m, delta, size_bound, report, !no_timing, node_budget, globals); };
  });

  auto* enumerate = app.add_subcommand("enumerate-designs", "Isomorphism classes of t-(m,k,lambda) designs");
  int t = 0, k = 0;
  std::int64_t lambda = 0;
  enumerate->add_option("t", t)->required();
  enumerate->add_option("m", m)->required();
  enumerate->add_option("k", k)->required();
  enumerate->add_option("lambda", lambda)->required();
  enumerate->add_option("--out", out, "Design file for the representatives");
  enumerate->add_option("--node-budget", node_budget, "Enumeration node budget")->check(CLI::PositiveNumber);
  enumerate->callback([&] { action = [&] { return run_enumerate(t, m, k, lambda, out, node_budget, globals); }; });

  auto* aut = app.add_subcommand("aut", "Automorphism group of a code");
  aut->add_option("code", code_path)->required()->check(CLI::ExistingFile);
  aut->add_option("--out", out, "Generator file");
  aut->callback([&] { action = [&] { return run_aut(code_path, out, globals); }; });

  auto* replay = app.add_subcommand("replay", "Re-check a classification report from its witnesses");
  std::string report_path;
  replay->add_option("report", report_path)->required()->check(CLI::ExistingFile);
  replay->callback([&] { action = [&] { return run_replay(report_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n' << e.witness().dump() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
