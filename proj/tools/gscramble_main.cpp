#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gscramble/experiments/config.hpp"
#include "gscramble/experiments/emit.hpp"
#include "gscramble/experiments/runners.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Gaussian-dynamics scrambling experiments: evolves bosonic covariance "
      "matrices and writes entropy / mutual-information / OTOC / form-factor "
      "series as CSV (plus SVG quicklook plots and a manifest)."};
  app.require_subcommand(0);

  std::string experiment;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int samples = 0;
  bool paper_scale = false;
  int workers = 1;

  app.add_option("experiment", experiment,
                 "One of: memory-effect, circuit-memory, tmi, tmi-static, "
                 "otoc, sff, wigner-check")
      ->required();
  app.add_option("--config", config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out-dir", out_dir,
                 "Output directory (default: out/<experiment>)");
  auto* seed_opt =
      app.add_option("--seed", seed, "Override the master seed");
  app.add_option("--samples", samples,
                 "Override the ensemble sample count")
      ->check(CLI::PositiveNumber);
  app.add_flag("--paper-scale", paper_scale,
               "Apply the config's paper_scale override block");
  app.add_option("--workers", workers,
                 "Worker threads (0 = hardware); never changes the output "
                 "bytes")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);
  seed_set = seed_opt->count() > 0;

  try {
    gsc::ExperimentConfig config =
        gsc::load_config(config_path, paper_scale);
    if (config.experiment.empty()) {
      config.experiment = experiment;
    } else if (config.experiment != experiment) {
      std::cerr << "error: config is for experiment '" << config.experiment
                << "' but '" << experiment << "' was requested\n";
      return 1;
    }
    if (seed_set) config.seed = seed;
    if (samples > 0) config.samples = samples;

    if (out_dir.empty()) out_dir = "out/" + experiment;
    std::filesystem::create_directories(out_dir);

    const std::string hash = gsc::config_hash(config);
    std::vector<gsc::ResultTable> tables =
        gsc::run_experiment(config, workers);

    std::vector<std::string> files;
    for (const auto& tab : tables) {
      files.push_back(gsc::emit_csv(tab, out_dir));
      files.push_back(gsc::emit_svg(tab, out_dir));
    }
    gsc::write_manifest(out_dir, experiment, hash, files);

    std::cout << experiment << ": wrote " << files.size()
              << " files to " << out_dir << " (config " << hash << ")\n";
    for (const auto& f : files) std::cout << "  " << f << "\n";
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
