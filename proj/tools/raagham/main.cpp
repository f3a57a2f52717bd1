#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "raagham/errors.hpp"

using namespace raagham;
using namespace raagham::cli;

namespace {

struct Subcommand {
  const char* name;
  const char* help;
  int (*run)(const Inputs&);
};

constexpr Subcommand kCommands[] = {
    {"normal-form", "print the normal form of --word", cmd_normal_form},
    {"word-eq", "compare two words (exit 1 when they differ)", cmd_word_eq},
    {"double", "write the double graph and the maps delta, pi", cmd_double},
    {"check-cover", "check that --cover is an orbi-cover of --graph", cmd_check_cover},
    {"emulator", "search for a planar emulator", cmd_emulator},
    {"certificate", "degree certificate that no planar emulator exists", cmd_certificate},
    {"build-config", "annulus configuration as JSON and SVG", cmd_build_config},
    {"build-rep", "representation data for --N", cmd_build_rep},
    {"simulate", "apply --word to marked and grid points", cmd_simulate},
    {"verify", "check the relations numerically", cmd_verify},
    {"probe-faithful", "displacement table for words up to --depth", cmd_probe_faithful},
    {"lambda-decay", "Schottky enumeration estimates to --depth", cmd_lambda_decay},
    {"smooth-study", "mollified hamiltonian against --eps values", cmd_smooth_study},
    {"polydisk", "slice checks for the polydisk extension", cmd_polydisk},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RAAG actions by Hamiltonian twists on the disk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "raagham 1.0.0");

  Inputs in;
  std::string config_path, out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", in.graph, "graph file");
    sub->add_option("--word", in.words, "word file or literal word (repeat for word-eq)");
    sub->add_option("--cover", in.cover, "cover file with map lines");
    sub->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_flag("--integrated", in.integrated, "use integrated flows instead of closed forms");
    sub->add_option("--N", in.cfg.N, "twist power, at least 2");
    sub->add_option("--depth", in.cfg.depth, "word length bound");
    sub->add_option("--eps", in.cfg.eps, "mollifier parameters");
    sub->add_option("--seed", in.cfg.seed, "random seed");
    sub->add_option("--out", out, "artifact directory");
    sub->add_option("--grid", in.cfg.grid, "grid points per side");
    sub->add_option("--tol", in.cfg.tol, "tolerance");
    sub->add_option("--max-sheets", in.cfg.max_sheets, "emulator sheet bound");
    sub->add_option("--samples", in.cfg.samples, "sample count");
  };

  const Subcommand* chosen = nullptr;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    // Options are re-registered per subcommand; only the parsed one is read.
    add_common(sub);
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!out.empty()) in.cfg.out = out;
    if (!config_path.empty()) {
      std::vector<std::string> given;
      auto* sub = app.get_subcommands().front();
      for (const char* key : {"N", "depth", "eps", "seed", "out", "grid", "tol", "max_sheets", "samples"}) {
        std::string flag = std::string("--") + key;
        if (flag == "--max_sheets") flag = "--max-sheets";
        if (sub->get_option(flag)->count() > 0) given.emplace_back(key);
      }
      in.cfg = merge_config_file(in.cfg, config_path, given);
    }
    in.cfg.validate();
    return chosen->run(in);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
