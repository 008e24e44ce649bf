// shellforge: command-line front end over the shellforge library.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "shellforge/erasure.hpp"
#include "shellforge/errors.hpp"
#include "shellforge/graph.hpp"
#include "shellforge/harness.hpp"
#include "shellforge/io.hpp"
#include "shellforge/shelling.hpp"

namespace sf = shellforge;
namespace hx = shellforge::harness;

namespace {

// Largest graph the subset-enumeration chordality oracle is run on.
constexpr int kCycleOracleLimit = 20;

struct Options {
  std::string report_path;
  std::string input;
  std::string second_input;
  std::string partial_path;
  std::string output_path;
  std::string witness_path;
  std::string certificate_path;
  int dim = 1;
  int n = 0;
  int k = 0;
  double budget = 900.0;
  std::uint64_t seed = 1;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output_path.empty()) {
    std::cout << text;
  } else {
    sf::io::write_file(opt.output_path, text);
  }
}

void emit_report(const Options& opt, const sf::io::Report& report) {
  std::cout << report.format();
  if (!opt.report_path.empty()) sf::io::write_file(opt.report_path, report.format());
}

int cmd_chordal(const Options& opt) {
  sf::Graph g = sf::io::parse_graph(sf::io::read_file(opt.input));
  const bool by_elimination = sf::is_chordal(g);
  if (g.order() <= kCycleOracleLimit && by_elimination != sf::is_chordal_cycles(g)) {
    std::cerr << "bug: elimination and induced-cycle chordality tests disagree on\n"
              << sf::io::format_graph(g);
    return hx::kViolation;
  }
  emit(opt, by_elimination ? "chordal\n" : "not-chordal\n");
  return hx::kOk;
}

int cmd_erase(const Options& opt) {
  sf::Graph g = sf::io::parse_graph(sf::io::read_file(opt.input));
  sf::Graph h = sf::io::parse_graph(sf::io::read_file(opt.second_input));
  emit(opt, sf::io::format_erasure(sf::erasure_sequence_between(g, h)));
  return hx::kOk;
}

int cmd_shell(const Options& opt) {
  sf::Clutter c = sf::io::parse_complex(sf::io::read_file(opt.input));
  std::optional<sf::ShellingOrder> order;
  if (opt.partial_path.empty()) {
    if (c.empty()) throw sf::ArgumentError("complex has no facets");
    order = sf::find_shelling(c);
  } else {
    sf::io::ShellingFile partial = sf::io::parse_shelling(sf::io::read_file(opt.partial_path));
    if (partial.n != c.vertex_count() || partial.k != c.facet_size()) {
      throw sf::ArgumentError("partial shelling and complex have different sizes");
    }
    if (c.vertex_count() <= c.facet_size() + 2) {
      // The graph route requires a shellable target; fall back to search so
      // an unshellable input is reported rather than rejected.
      if (c.empty() || !sf::find_shelling(c)) {
        sf::ShellingState::from_order(c, partial.order);
      } else {
        order = sf::extend_shelling_theorem_route(c, partial.order);
      }
    } else {
      order = sf::extend_shelling_generic(c, partial.order);
    }
  }
  if (!order) {
    emit(opt, "unshellable\n");
    return hx::kUnshellable;
  }
  emit(opt, sf::io::format_shelling(c.vertex_count(), c.facet_size(), *order));
  return hx::kOk;
}

int cmd_extendable(const Options& opt) {
  sf::Clutter c = sf::io::parse_complex(sf::io::read_file(opt.input));
  if (c.empty() || !sf::find_shelling(c)) {
    std::cerr << "complex is not shellable\n";
    return hx::kUnshellable;
  }
  sf::ExtendabilityCertificate cert = sf::is_extendably_shellable(c);
  emit(opt, sf::io::format_certificate(c.vertex_count(), c.facet_size(), cert));
  return cert.verdict == sf::Verdict::Inconclusive ? hx::kInconclusive : hx::kOk;
}

int cmd_verify_theorem(const Options& opt) {
  hx::TheoremRun run = hx::verify_theorem(opt.dim);
  emit_report(opt, hx::report_for(run));
  if (run.violations != 0) {
    std::cerr << "violation on\n" << sf::io::format_complex(*run.offending);
    return hx::kViolation;
  }
  return hx::kOk;
}

int cmd_sharpness(const Options& opt) {
  hx::SharpnessOptions options;
  options.budget_seconds = opt.budget;
  options.seed = opt.seed;
  hx::SharpnessRun run = hx::search_sharpness(options);
  emit_report(opt, hx::report_for(run, options));
  if (!run.found) return hx::kInconclusive;
  if (!run.revalidated) {
    std::cerr << "bug: stuck certificate failed re-validation\n";
    return hx::kViolation;
  }
  const sf::Clutter& w = *run.witness;
  if (!opt.witness_path.empty()) sf::io::write_file(opt.witness_path, sf::io::format_complex(w));
  if (!opt.certificate_path.empty()) {
    sf::ExtendabilityCertificate cert{sf::Verdict::Stuck, run.stuck_order, 0};
    sf::io::write_file(opt.certificate_path,
                       sf::io::format_certificate(w.vertex_count(), w.facet_size(), cert));
  }
  return hx::kOk;
}

int cmd_simon(const Options& opt) {
  sf::SearchBudget budget;
  budget.max_seconds = opt.budget;
  hx::SimonRun run = hx::check_skeleton(opt.n, opt.k, budget);
  emit_report(opt, hx::report_for(run));
  return run.certificate.verdict == sf::Verdict::Inconclusive ? hx::kInconclusive : hx::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chordal graphs, exposed edges and extendable shellability"};
  app.set_version_flag("--version", std::string(hx::kToolVersion));
  app.require_subcommand(1);
  Options opt;

  auto* chordal = app.add_subcommand("chordal", "Decide whether a graph is chordal");
  chordal->add_option("graph", opt.input, "Graph file")->required();

  auto* erase = app.add_subcommand("erase", "Exposed-edge removals from G down to H");
  erase->add_option("larger", opt.input, "Larger chordal graph file")->required();
  erase->add_option("smaller", opt.second_input, "Chordal spanning subgraph file")->required();
  erase->add_option("-o,--output", opt.output_path, "Write the sequence here instead of stdout");

  auto* shell = app.add_subcommand("shell", "Find or complete a shelling order");
  shell->add_option("complex", opt.input, "Complex file")->required();
  shell->add_option("--partial", opt.partial_path, "Partial shelling to extend");
  shell->add_option("-o,--output", opt.output_path, "Write the shelling here instead of stdout");

  auto* extendable = app.add_subcommand("extendable", "Decide extendable shellability");
  extendable->add_option("complex", opt.input, "Complex file")->required();
  extendable->add_option("-o,--output", opt.output_path, "Write the certificate here");

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Exhaustive check on d-complexes with at most d+3 vertices");
  verify->add_option("--dim", opt.dim, "Dimension d")->required()->check(CLI::Range(1, 3));
  verify->add_option("--report", opt.report_path, "Also write the report here");

  auto* sharp = app.add_subcommand("sharpness",
                                   "Search 2-complexes on 6 vertices for a stuck shelling");
  sharp->add_option("--budget", opt.budget, "Time budget in seconds")->capture_default_str();
  sharp->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  sharp->add_option("--witness", opt.witness_path, "Write the witness complex here");
  sharp->add_option("--certificate", opt.certificate_path, "Write the stuck certificate here");
  sharp->add_option("--report", opt.report_path, "Also write the report here");

  auto* simon = app.add_subcommand("simon", "Extendability of a skeleton of a simplex");
  simon->add_option("--n", opt.n, "Vertex count")->required()->check(CLI::Range(1, 64));
  simon->add_option("--k", opt.k, "Skeleton dimension")->required()->check(CLI::Range(0, 63));
  simon->add_option("--budget", opt.budget, "Time budget in seconds")->capture_default_str();
  simon->add_option("--report", opt.report_path, "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : hx::kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = hx::kOk;
  try {
    if (*chordal) code = cmd_chordal(opt);
    if (*erase) code = cmd_erase(opt);
    if (*shell) code = cmd_shell(opt);
    if (*extendable) code = cmd_extendable(opt);
    if (*verify) code = cmd_verify_theorem(opt);
    if (*sharp) code = cmd_sharpness(opt);
    if (*simon) code = cmd_simon(opt);
  } catch (const sf::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return hx::kParseError;
  } catch (const sf::ArgumentError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return hx::kPrecondition;
  } catch (const sf::InvariantViolation& e) {
    std::cerr << "bug: " << e.what() << '\n';
    return hx::kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hx::kParseError;
  }
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "wall_time=" << elapsed.count() << "s\n";
  return code;
}
