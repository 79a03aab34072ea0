// knitwall: command-line front end for knitting, chamber enumeration and
// the arrangement oracle.
//
// Exit codes: 0 success, 2 input error, 3 consistency failure, 4 resource cap.

#include "knitwall/errors.hpp"
#include "knitwall/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace knitwall;

namespace {

struct Flags {
  std::string spec_path;
  std::string out_dir = "knitwall-out";
  std::string diagram;
  bool no_oracle = false;
  bool svg = false;
  bool dot = false;
  std::optional<std::uint64_t> seed;
  bool trace = false;
};

ProblemSpec load_with_overrides(const Flags& f) {
  ProblemSpec spec = load_spec(f.spec_path);
  if (f.no_oracle) spec.options.oracle = false;
  if (f.svg) spec.options.svg = true;
  if (f.dot) spec.options.dot = true;
  if (f.seed) spec.options.seed = *f.seed;
  return spec;
}

std::string b_string(const DynkinDiagram& d, const std::map<Vertex, int>& b) {
  std::string s;
  for (const auto& [v, c] : b) {
    if (!s.empty()) s += " + ";
    s += d.label(v) + (c == 1 ? "" : "^" + std::to_string(c));
  }
  return s;
}

std::string inequality_string(const Inequality& ineq) {
  return ineq.covector.pretty() + (ineq.sign > 0 ? " > 0" : " < 0");
}

int cmd_knit(const Flags& f) {
  const auto spec = load_with_overrides(f);
  const Configuration config(spec.diagram, spec.retained);
  const auto& d = config.diagram();
  for (std::size_t s = 0; s < config.size(); ++s) {
    if (f.trace) {
      const auto trace = knit_trace(config, s);
      std::cout << "slot " << s + 1 << " (" << d.label(config.vertex_at(s)) << ")\n";
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        std::cout << "  x" << k << " =";
        for (int x : trace.steps[k].column) std::cout << ' ' << x;
        if (!trace.steps[k].harvested.empty()) std::cout << "   harvest " << b_string(d, trace.steps[k].harvested);
        std::cout << '\n';
      }
    }
    const auto ex = knit(config, s);
    std::cout << "slot " << s + 1 << ": 0 -> " << d.label(ex.new_vertex) << " -> " << b_string(d, ex.b) << " -> "
              << d.label(ex.pivot_vertex) << " -> 0\n";
  }
  return 0;
}

int cmd_chambers(const Flags& f) {
  const auto spec = load_with_overrides(f);
  const Configuration config(spec.diagram, spec.retained);
  EnumerateOptions opts;
  opts.oracle = spec.options.oracle;
  const auto cs = enumerate_chambers(config, opts);
  const auto& d = config.diagram();
  for (const auto& ch : cs.chambers) {
    std::cout << "C" << ch.id << "  word=";
    if (ch.word.empty()) std::cout << "-";
    for (std::size_t i = 0; i < ch.word.size(); ++i) std::cout << (i ? "." : "") << ch.word[i] + 1;
    std::cout << "  config={";
    for (std::size_t i = 0; i < ch.config.size(); ++i) std::cout << (i ? "," : "") << d.label(ch.config[i]);
    std::cout << "}  ";
    for (std::size_t i = 0; i < ch.inequalities.size(); ++i)
      std::cout << (i ? ", " : "") << inequality_string(ch.inequalities[i]);
    std::cout << '\n';
  }
  const auto b = bounds(cs);
  std::cout << cs.chambers.size() << " chambers, " << cs.walls.size() << " walls, " << cs.skeleton.size()
            << " skeleton edges; bounds (" << b.lower << ", " << b.upper << ")\n";
  return 0;
}

int cmd_oracle(const Flags& f) {
  const auto spec = load_with_overrides(f);
  const Configuration config(spec.diagram, spec.retained);
  const auto arr = restricted_walls(config.diagram(), config.slots());
  for (const auto& c : arr.covectors) std::cout << c.pretty() << " = 0\n";
  if (arr.covectors.size() <= kSubsetBudget)
    std::cout << "whitney regions: " << count_regions(arr) << '\n';
  else
    std::cout << "whitney regions: skipped (" << arr.covectors.size() << " walls > budget " << kSubsetBudget << ")\n";
  std::cout << "sign-vector regions: " << sign_vectors(arr, 64).size() << '\n';
  return 0;
}

int cmd_report(const Flags& f) {
  const auto spec = load_with_overrides(f);
  const auto rep = run_report(spec, f.out_dir);
  std::cout << "wrote " << (std::filesystem::path(f.out_dir) / "report.json").string() << ": "
            << rep.chambers.size() << " chambers, " << rep.walls.size() << " walls";
  if (rep.oracle) std::cout << ", oracle " << (rep.oracle->match ? "match" : "MISMATCH");
  std::cout << '\n';
  for (const auto& n : rep.notices) std::cout << "note: " << n << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knitwall: mutation, chamber and wall computations for partial ADE resolutions"};
  app.require_subcommand(1);
  Flags f;

  auto* describe_cmd = app.add_subcommand("describe", "print the canonical labeling of a diagram");
  describe_cmd->add_option("diagram", f.diagram, "diagram name, e.g. E7")->required();

  const auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", f.spec_path, "problem spec JSON")->required();
    sub->add_flag("--no-oracle", f.no_oracle, "skip the arrangement oracle");
    sub->add_option("--seed", f.seed, "seed for generic-point checks");
  };
  auto* knit_cmd = app.add_subcommand("knit", "exchange sequence for every slot");
  add_spec(knit_cmd);
  knit_cmd->add_flag("--trace", f.trace, "print every knitting column");
  auto* chambers_cmd = app.add_subcommand("chambers", "enumerate GIT chambers");
  add_spec(chambers_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "restricted root arrangement and region counts");
  add_spec(oracle_cmd);
  auto* report_cmd = app.add_subcommand("report", "write report.json and optional graphs");
  add_spec(report_cmd);
  report_cmd->add_option("--out", f.out_dir, "output directory");
  report_cmd->add_flag("--svg", f.svg, "write chambers.svg (2 slots only)");
  report_cmd->add_flag("--dot", f.dot, "write skeleton.dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*describe_cmd) {
      std::cout << describe(DynkinType::parse(f.diagram));
      return 0;
    }
    if (*knit_cmd) return cmd_knit(f);
    if (*chambers_cmd) return cmd_chambers(f);
    if (*oracle_cmd) return cmd_oracle(f);
    if (*report_cmd) return cmd_report(f);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 4;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
