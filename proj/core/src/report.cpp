#include "radialmra/report.hpp"

#include <cmath>
#include <sstream>

#include "../../vendor/json.hpp"

namespace rmra {

Check make_check(const std::string& name, const std::string& anchor, double value,
                 double tolerance) {
  Check c;
  c.name = name;
  c.paper_ref = anchor;
  c.value = value;
  c.tolerance = tolerance;
  c.pass = std::isfinite(value) && value <= tolerance;
  return c;
}

Check make_flag(const std::string& name, const std::string& anchor, bool ok) {
  Check c;
  c.name = name;
  c.paper_ref = anchor;
  c.value = ok ? 0.0 : 1.0;
  c.tolerance = 0.0;
  c.pass = ok;
  return c;
}

Check make_lower_bound(const std::string& name, const std::string& anchor, double value,
                       double bound) {
  Check c;
  c.name = name;
  c.paper_ref = anchor;
  c.value = value;
  c.tolerance = bound;
  c.pass = std::isfinite(value) && value > bound;
  return c;
}

bool Report::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["rank"] = rank;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["paper_ref"] = c.paper_ref;
    jc["value"] = c.value;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto emit = [&os](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(row[i]);
    }
    os << "\r\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string svg_panel(const std::string& caption, const std::vector<SvgRect>& shaded,
                      double data_min, double data_max, int size_px) {
  const int margin = 18;
  const int total = size_px + 2 * margin;
  const double span = data_max - data_min;
  auto px = [&](double v) { return margin + (v - data_min) / span * size_px; };
  auto py = [&](double v) { return margin + (data_max - v) / span * size_px; };
  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\""
     << total + 22 << "\" viewBox=\"0 0 " << total << ' ' << total + 22 << "\">\n";
  for (const SvgRect& r : shaded)
    os << "  <rect x=\"" << px(r.x0) << "\" y=\"" << py(r.y1) << "\" width=\""
       << px(r.x1) - px(r.x0) << "\" height=\"" << py(r.y0) - py(r.y1)
       << "\" fill=\"#444444\"/>\n";
  os << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size_px
     << "\" height=\"" << size_px << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  os << "  <text x=\"" << total / 2 << "\" y=\"" << total + 14
     << "\" font-size=\"12\" text-anchor=\"middle\">" << caption << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<std::pair<std::string, std::vector<SvgRect>>> shannon_support_panels() {
  // scan [-pi, pi]^2 in half-pi cells; a cell belongs to panel i when its
  // center lies in q^i + Q (the lattice union of half-size cubes)
  auto in_q = [](double a, double b) {
    auto wrap = [](double v) {
      double r = std::fmod(v + M_PI, 2.0 * M_PI);
      if (r < 0) r += 2.0 * M_PI;
      return r - M_PI;
    };
    return std::abs(wrap(a)) < 0.5 * M_PI && std::abs(wrap(b)) < 0.5 * M_PI;
  };
  // coset order matches LatticePair::make: bit d sets component d to pi
  const double qs[4][2] = {{0, 0}, {M_PI, 0}, {0, M_PI}, {M_PI, M_PI}};
  const char* names[4] = {"scaling support", "wavelet support (pi, 0)", "wavelet support (0, pi)",
                          "wavelet support (pi, pi)"};
  std::vector<std::pair<std::string, std::vector<SvgRect>>> panels;
  for (int i = 0; i < 4; ++i) {
    std::vector<SvgRect> rects;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double x0 = -M_PI + a * 0.5 * M_PI, y0 = -M_PI + b * 0.5 * M_PI;
        double cx = x0 + 0.25 * M_PI, cy = y0 + 0.25 * M_PI;
        if (in_q(cx - qs[i][0], cy - qs[i][1]))
          rects.push_back({x0, y0, x0 + 0.5 * M_PI, y0 + 0.5 * M_PI});
      }
    panels.emplace_back(names[i], std::move(rects));
  }
  return panels;
}

}  // namespace rmra
