#include <cmath>

#include "doctest.h"
#include "radialmra/report.hpp"

using namespace rmra;

TEST_CASE("check constructors") {
  Check c = make_check("residual", "anchor-slug", 1e-9, 1e-6);
  CHECK(c.pass);
  CHECK(!make_check("residual", "anchor-slug", 2e-6, 1e-6).pass);
  // flags record the deviation, so an ok flag has value 0
  CHECK(make_flag("count", "anchor", true).value == 0.0);
  CHECK(make_flag("count", "anchor", true).pass);
  CHECK(!make_flag("count", "anchor", false).pass);
  // lower bounds pass when the value exceeds the bound (negative controls)
  CHECK(make_lower_bound("rejected", "anchor", 0.5, 0.1).pass);
  CHECK(!make_lower_bound("rejected", "anchor", 0.05, 0.1).pass);
}

TEST_CASE("report json is deterministic and schema-stable") {
  Report r;
  r.suite = "demo";
  r.rank = 2;
  r.checks.push_back(make_check("a", "ref-a", 0.125, 1.0));
  r.checks.push_back(make_flag("b", "ref-b", true));
  std::string j = r.to_json();
  CHECK(j == r.to_json());
  for (const char* key : {"\"suite\"", "\"rank\"", "\"checks\"", "\"name\"", "\"paper_ref\"",
                          "\"value\"", "\"tolerance\"", "\"pass\""})
    CHECK(j.find(key) != std::string::npos);
  // key order is fixed: suite before rank before checks
  CHECK(j.find("\"suite\"") < j.find("\"rank\""));
  CHECK(j.find("\"rank\"") < j.find("\"checks\""));
  CHECK(r.all_pass());
  r.checks.push_back(make_check("c", "ref-c", 2.0, 1.0));
  CHECK(!r.all_pass());
}

TEST_CASE("csv quoting follows rfc 4180") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
  std::string csv = to_csv({"index", "value"}, {{"0", "1.5"}, {"1", "x,y"}});
  CHECK(csv == "index,value\r\n0,1.5\r\n1,\"x,y\"\r\n");
}

TEST_CASE("svg panels are well formed") {
  std::vector<SvgRect> shaded = {{-1.0, -1.0, 0.0, 0.0}};
  std::string svg = svg_panel("caption text", shaded, -1.0, 1.0);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);
  CHECK(svg.find("caption text") != std::string::npos);
}

TEST_CASE("band-limited support panels cover the half-cells") {
  auto panels = shannon_support_panels();
  CHECK(panels.size() == 4);
  for (const auto& [name, rects] : panels) {
    CHECK(!name.empty());
    double area = 0.0;
    for (const SvgRect& r : rects) area += (r.x1 - r.x0) * (r.y1 - r.y0);
    // each panel shades one quarter of [-pi, pi]^2
    CHECK(area == doctest::Approx(M_PI * M_PI).epsilon(1e-12));
  }
}
