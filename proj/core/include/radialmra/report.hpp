#pragma once

#include <string>
#include <vector>

namespace rmra {

/// One verification line: a measured value against its tolerance. The
/// paper_ref field carries a stable anchor slug naming the invariant.
struct Check {
  std::string name;
  std::string paper_ref;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Check make_check(const std::string& name, const std::string& anchor, double value,
                 double tolerance);
/// For boolean facts (counts, exact identities): value is 0/1, tolerance 0.
Check make_flag(const std::string& name, const std::string& anchor, bool ok);
/// For negative controls: passes when value exceeds the stated bound
/// (tolerance records the bound).
Check make_lower_bound(const std::string& name, const std::string& anchor, double value,
                       double bound);

/// A machine-readable verification report; serialization is deterministic
/// (fixed key order, shortest round-trip float formatting), so identical
/// runs produce byte-identical files.
struct Report {
  std::string suite;
  int rank = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  std::string to_json() const;
};

/// RFC-4180 CSV: fields holding commas, quotes or newlines are quoted,
/// embedded quotes doubled, CRLF row terminators.
std::string csv_escape(const std::string& field);
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

/// Minimal native SVG: axis-aligned shaded rectangles over a square data
/// window, with a frame and a caption. Coordinates are in data units.
struct SvgRect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};

std::string svg_panel(const std::string& caption, const std::vector<SvgRect>& shaded,
                      double data_min, double data_max, int size_px = 260);

/// The rank-2 frequency-support panels of the band-limited family: panel 0
/// is the scaling support, panels 1..3 the wavelet cube unions, as shaded
/// half-cells of [-pi, pi]^2.
std::vector<std::pair<std::string, std::vector<SvgRect>>> shannon_support_panels();

}  // namespace rmra
