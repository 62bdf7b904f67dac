// Command-line front end: mine a corpus for signal sequences, simulate a
// recruiter scenario against the mined patterns, or compare a trace with an
// annotated reference.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "attisim/pipeline.hpp"

namespace {

attisim::AppConfig load_or_default(const std::string& config_path) {
  if (config_path.empty()) return {};
  return attisim::load_config(config_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social attitude pipeline for a virtual recruiter"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config overriding module defaults");

  auto* mine = app.add_subcommand("mine", "mine signal sequences from an annotated corpus");
  std::string corpus_path;
  std::string patterns_out = "patterns.txt";
  std::optional<double> min_support;
  mine->add_option("corpus", corpus_path, "annotated corpus file")->required();
  mine->add_option("--min-support,-s", min_support, "minimum pattern support in (0,1]");
  mine->add_option("--out,-o", patterns_out, "output pattern file");

  auto* simulate = app.add_subcommand("simulate", "run a scenario through the pipeline");
  std::string scenario_path;
  std::string patterns_in;
  std::string trace_out;
  bool interactive = false;
  simulate->add_option("scenario", scenario_path, "scenario file")->required();
  simulate->add_option("--patterns,-p", patterns_in, "mined pattern file")->required();
  simulate->add_option("--trace,-t", trace_out, "CSV trace output path");
  simulate->add_flag("--interactive,-i", interactive,
                     "read detected affects for interactive turns from stdin");

  auto* compare = app.add_subcommand("compare", "sign-level trace vs annotation comparison");
  std::string trace_path;
  std::string reference_path;
  compare->add_option("trace", trace_path, "CSV trace file")->required();
  compare->add_option("reference", reference_path, "annotated attitude reference")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    attisim::AppConfig config = load_or_default(config_path);
    if (mine->parsed()) {
      if (min_support) {
        config.miner.min_support = *min_support;
        config.miner.validate();
      }
      const auto result = attisim::run_mine(corpus_path, config, patterns_out);
      std::cerr << "wrote " << result.records.size() << " pattern records to "
                << patterns_out << "\n";
    } else if (simulate->parsed()) {
      std::optional<std::filesystem::path> csv;
      if (!trace_out.empty()) csv = trace_out;
      // stdin always backs interactive turns so piped input works; the
      // flag only switches the prompt on.
      attisim::run_simulate(scenario_path, patterns_in, config, csv, std::cout,
                            &std::cin, interactive ? &std::cerr : nullptr);
    } else if (compare->parsed()) {
      attisim::run_compare(trace_path, reference_path, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
