#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ford/errors.hpp"
#include "ford/pipeline.hpp"
#include "ford/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ford::MalformedInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ford::MalformedInput("cannot write " + path);
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

struct Flags {
  std::string config_path;
  std::string out_path;
  std::string svg_path;
  int max_word_len = -1;
  int grid = -1;
  double tol = -1.0;
  double target_R = -1.0;
  double safety = 0.5;
};

ford::ScenarioConfig build_config(const Flags& f, bool allow_shortcut) {
  ford::ScenarioConfig cfg;
  bool have = false;
  if (!f.config_path.empty()) {
    cfg = ford::parse_config(read_file(f.config_path));
    have = true;
  }
  if (allow_shortcut && f.target_R > 0.0) {
    cfg.family = ford::FamilySpec{std::nullopt, f.target_R, f.safety};
    cfg.matrix.reset();
    have = true;
  }
  if (!have)
    throw ford::MalformedInput("need --config (or --target-R for families)");
  if (f.max_word_len > 0) cfg.max_word_len = f.max_word_len;
  if (f.grid >= 0) cfg.oracle_grid = f.grid;
  if (f.tol > 0.0) cfg.tie_tol = f.tol;
  return cfg;
}

int exit_for(ford::CertificateStatus s) {
  return s == ford::CertificateStatus::Inconclusive ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ford domain computation and certification for cusped quotient groups"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze = app.add_subcommand(
      "analyze", "run the full pipeline on one configuration");
  analyze->add_option("--config", f.config_path, "JSON scenario config");
  analyze->add_option("--out", f.out_path, "report path (default stdout)");
  analyze->add_option("--svg", f.svg_path, "also write an SVG rendering");
  analyze->add_option("--max-word-len", f.max_word_len,
                      "override enumeration cutoff");
  analyze->add_option("--tol", f.tol, "override the tie tolerance");
  analyze->add_option("--grid", f.grid,
                      "sampling-oracle resolution (0 disables)");
  analyze->add_option("--target-R", f.target_R,
                      "family shortcut: eps = safety*exp(-R)");
  analyze->add_option("--safety", f.safety, "safety factor for --target-R");

  auto* sweep =
      app.add_subcommand("sweep", "run the sweep described in the config");
  sweep->add_option("--config", f.config_path, "JSON scenario config")
      ->required();
  sweep->add_option("--out", f.out_path, "report path (default stdout)");

  auto* render = app.add_subcommand("render", "write the SVG picture only");
  render->add_option("--config", f.config_path, "JSON scenario config");
  render->add_option("--svg", f.svg_path, "SVG output path");
  render->add_option("--out", f.out_path, "alias for --svg");
  render->add_option("--target-R", f.target_R,
                     "family shortcut: eps = safety*exp(-R)");
  render->add_option("--safety", f.safety, "safety factor for --target-R");

  auto* homology = app.add_subcommand(
      "homology", "filling-slope arithmetic from a classes file");
  homology->add_option("--config", f.config_path,
                       "JSON file with {\"classes\": [[a,b],...], \"k\": 0}")
      ->required();
  homology->add_option("--out", f.out_path, "report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto cfg = build_config(f, true);
      const auto an = ford::run_analysis(cfg);
      emit(f.out_path, ford::report_json(an));
      if (!f.svg_path.empty()) write_file(f.svg_path, ford::render_svg(an));
      std::fprintf(stderr, "[ford] analyze: %s in %.1f ms\n",
                   ford::to_string(an.certificate.status).c_str(),
                   an.elapsed_ms);
      return exit_for(an.certificate.status);
    }
    if (sweep->parsed()) {
      const auto cfg = build_config(f, false);
      const auto result = ford::run_sweep(cfg);
      emit(f.out_path, ford::sweep_json(result, cfg));
      bool inconclusive = false;
      for (const auto& row : result.rows)
        inconclusive |= row.status == ford::CertificateStatus::Inconclusive;
      return inconclusive ? 2 : 0;
    }
    if (render->parsed()) {
      const auto cfg = build_config(f, true);
      const auto an = ford::run_analysis(cfg);
      const std::string path =
          !f.svg_path.empty() ? f.svg_path : f.out_path;
      emit(path, ford::render_svg(an));
      return 0;
    }
    if (homology->parsed()) {
      const std::string text = read_file(f.config_path);
      if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ford::EmptyInput("homology input file is empty");
      emit(f.out_path, ford::homology_json(text));
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
