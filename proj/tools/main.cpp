#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "../vendor/CLI11.hpp"
#include "verify.hpp"

namespace {

using rmra::Report;
using rmra::tools::VerifyOptions;

void print_report(const Report& rep) {
  for (const auto& c : rep.checks)
    std::printf("[%s] %-34s value=%.6g tol=%.6g\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                c.value, c.tolerance);
}

int finish(const Report& rep, const std::string& out_dir) {
  print_report(rep);
  std::string json = rep.to_json();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream os(std::filesystem::path(out_dir) / (rep.suite + "-report.json"),
                     std::ios::binary);
    os << json;
  } else {
    std::cout << json;
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial multiresolution analysis toolkit"};
  app.set_config("--config", "", "TOML-style config file; flags override its values");
  app.require_subcommand(1);

  VerifyOptions opt;
  std::string out_dir;
  double tol_scale = 1.0;

  auto add_common = [&](CLI::App* sub, bool with_grid = false) {
    sub->add_option("--rank", opt.rank, "matrix rank n")->check(CLI::Range(2, 6));
    sub->add_option("--mc-samples", opt.mc_samples, "Monte-Carlo sample count (0 = default)");
    sub->add_option("--seed", opt.seed, "RNG seed");
    sub->add_option("--tol", tol_scale, "tolerance scale factor (diagnostics)");
    sub->add_option("--out", out_dir, "output directory (reports and artifacts)");
    if (with_grid) {
      sub->add_option("--grid", opt.grid_npts, "box-grid nodes per dimension (0 = default)");
      sub->add_option("--radius", opt.radius, "box radius (0 = default)");
    }
  };

  CLI::App* core = app.add_subcommand("verify-core", "kernel and character identities");
  add_common(core);
  CLI::App* hyper = app.add_subcommand("verify-hypergroup", "convolution density checks");
  add_common(hyper);
  CLI::App* hankel = app.add_subcommand("verify-hankel", "transform unitarity and dilation");
  add_common(hankel, true);
  CLI::App* mra = app.add_subcommand("verify-mra", "scaling, filter and wavelet criteria");
  add_common(mra);
  mra->add_option("--xi-samples", opt.xi_samples, "random frequencies for unitarity checks");
  CLI::App* bsh = app.add_subcommand("build-shannon", "export the band-limited family");
  add_common(bsh);
  CLI::App* bcl = app.add_subcommand("build-from-classical",
                                     "lift a smooth classical profile and export the family");
  add_common(bcl);
  CLI::App* dec = app.add_subcommand("decompose", "scaling coefficients of a test function");
  add_common(dec);
  CLI::App* plot = app.add_subcommand("plot-supports", "rank-2 support figures (SVG)");
  plot->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opt.tol_scale = tol_scale;
  std::string artifacts = out_dir.empty() ? "out" : out_dir;
  try {
    if (core->parsed()) return finish(rmra::tools::verify_core(opt), out_dir);
    if (hyper->parsed()) return finish(rmra::tools::verify_hypergroup(opt), out_dir);
    if (hankel->parsed()) return finish(rmra::tools::verify_hankel(opt), out_dir);
    if (mra->parsed()) return finish(rmra::tools::verify_mra(opt), out_dir);
    if (bsh->parsed()) return finish(rmra::tools::build_shannon(opt.rank, artifacts), out_dir);
    if (bcl->parsed())
      return finish(rmra::tools::build_from_classical(opt.rank, artifacts), out_dir);
    if (dec->parsed()) return finish(rmra::tools::run_decompose(opt.rank, artifacts), out_dir);
    if (plot->parsed()) return finish(rmra::tools::plot_supports(artifacts), out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
