#pragma once

#include <cstdint>
#include <string>

#include "radialmra/report.hpp"

namespace rmra::tools {

/// Shared knobs for the verification suites; zero/negative values select
/// per-suite defaults.
struct VerifyOptions {
  int rank = 2;
  long mc_samples = 0;
  std::uint64_t seed = 1;
  double tol_scale = 1.0;  ///< multiplies every tolerance (diagnostics only)
  int grid_npts = 0;       ///< box-grid override for the transform suite
  double radius = 0.0;     ///< box radius override
  int xi_samples = 0;      ///< random frequency samples for unitarity checks
};

Report verify_core(const VerifyOptions& opt);
Report verify_hypergroup(const VerifyOptions& opt);
Report verify_hankel(const VerifyOptions& opt);
Report verify_mra(const VerifyOptions& opt);

/// Builders / exporters: each returns a report and writes artifacts into
/// out_dir (created if missing).
Report build_shannon(int rank, const std::string& out_dir);
Report build_from_classical(int rank, const std::string& out_dir);
Report run_decompose(int rank, const std::string& out_dir);
Report plot_supports(const std::string& out_dir);

}  // namespace rmra::tools
