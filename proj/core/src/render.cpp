#include "fpb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <vector>

namespace fpb {

namespace {

constexpr double kSpacing = 40.0;  // distance between feet
constexpr double kBandWidth = 14.0;
constexpr double kGap = 5.0;       // half-length of a break, along the arc
constexpr double kMargin = 30.0;
constexpr double kDiscDepth = 50.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

// Semicircle above the binding, centre (c, 0), radius r; angle pi is the left end.
struct Edge {
  double c = 0, r = 0;
  int band = 0;
};

// Angles at which two upper semicircles meet, if they do.
std::optional<double> meet(const Edge& a, const Edge& b) {
  if (a.c == b.c) return std::nullopt;
  const double x = (a.r * a.r - b.r * b.r + b.c * b.c - a.c * a.c) / (2 * (b.c - a.c));
  const double dx = x - a.c;
  if (std::abs(dx) >= a.r) return std::nullopt;
  if (std::abs(x - b.c) >= b.r) return std::nullopt;
  return std::acos(dx / a.r);
}

}  // namespace

RenderResult render_svg(const RenderSpec& spec) {
  if (!(spec.scale > 0)) throw std::invalid_argument("render scale must be positive");
  const auto& w = spec.word;
  const int positions = static_cast<int>(w.size());
  const int n = w.bands();

  auto foot_x = [&](int pos) { return kMargin + kSpacing * (pos + 1); };
  const double width = 2 * kMargin + kSpacing * (positions + 1);
  double top = 0;
  std::vector<Edge> edges;
  for (int k = 1; k <= n; ++k) {
    const auto [p, q] = w.feet(k);
    const double xp = foot_x(p), xq = foot_x(q);
    const double c = 0.5 * (xp + xq);
    const double outer = 0.5 * (xq - xp) + kBandWidth / 2, inner = 0.5 * (xq - xp) - kBandWidth / 2;
    edges.push_back({c, outer, k});
    edges.push_back({c, inner, k});
    top = std::max(top, outer);
  }
  const double binding_y = kMargin + top + (n > 0 ? 16.0 : 0.0);
  const double height = binding_y + kDiscDepth + kMargin;

  RenderResult result;
  result.arcs = n;
  std::string body;
  body += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(binding_y) + "\" width=\"" + num(width - 2 * kMargin) +
          "\" height=\"" + num(kDiscDepth) + "\" fill=\"#d9d9d9\" stroke=\"black\"/>\n";
  if (spec.show_disc_label) {
    body += "<text x=\"" + num(width / 2) + "\" y=\"" + num(binding_y + kDiscDepth / 2 + 5) +
            "\" text-anchor=\"middle\" font-size=\"14\">D</text>\n";
  }

  // Deepest band first so front bands paint over it.
  for (int k = n; k >= 1; --k) {
    for (const auto& e : edges) {
      if (e.band != k) continue;
      // Cut this edge wherever a band in front of it crosses.
      std::vector<double> cuts;
      for (const auto& f : edges) {
        if (f.band >= k) continue;
        if (auto a = meet(e, f)) cuts.push_back(*a);
      }
      result.breaks += static_cast<int>(cuts.size());
      std::sort(cuts.rbegin(), cuts.rend());
      const double half = kGap / e.r;
      std::vector<std::pair<double, double>> pieces;  // angle ranges, descending
      double from = std::numbers::pi;
      for (double a : cuts) {
        if (from > a + half) pieces.emplace_back(from, a + half);
        from = a - half;
      }
      if (from > 0) pieces.emplace_back(from, 0.0);
      for (const auto& [a0, a1] : pieces) {
        const double x0 = e.c + e.r * std::cos(a0), y0 = binding_y - e.r * std::sin(a0);
        const double x1 = e.c + e.r * std::cos(a1), y1 = binding_y - e.r * std::sin(a1);
        body += "<path d=\"M " + num(x0) + " " + num(y0) + " A " + num(e.r) + " " + num(e.r) + " 0 0 1 " + num(x1) +
                " " + num(y1) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
      }
    }
    if (spec.show_band_numbers) {
      const auto [p, q] = w.feet(k);
      const double c = 0.5 * (foot_x(p) + foot_x(q)), r = 0.5 * (foot_x(q) - foot_x(p)) + kBandWidth / 2;
      body += "<text x=\"" + num(c) + "\" y=\"" + num(binding_y - r - 4) +
              "\" text-anchor=\"middle\" font-size=\"11\">" + std::to_string(k) + "</text>\n";
    }
  }

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width * spec.scale) + "\" height=\"" +
                    num(height * spec.scale) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  svg += body;
  svg += "</svg>\n";
  result.svg = std::move(svg);
  return result;
}

RenderResult write_svg(const RenderSpec& spec) {
  auto result = render_svg(spec);
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + spec.output_path + " for writing");
  out << result.svg;
  if (!out) throw IoError("failed writing " + spec.output_path);
  return result;
}

}  // namespace fpb
