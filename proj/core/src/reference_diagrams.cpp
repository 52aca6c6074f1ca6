#include "fpb/reference_diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpb {

PlanarDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
  for (int g : word) {
    if (g == 0 || std::abs(g) >= strands) throw std::invalid_argument("braid_closure: generator out of range");
  }
  // Per strand start position, the visits met while following it through one pass.
  std::vector<int> signs;
  signs.reserve(word.size());
  for (int g : word) signs.push_back(g > 0 ? 1 : -1);

  std::vector<char> started(static_cast<std::size_t>(strands), 0);
  std::vector<std::vector<CrossingVisit>> components;
  for (int s = 0; s < strands; ++s) {
    if (started[static_cast<std::size_t>(s)]) continue;
    std::vector<CrossingVisit> visits;
    int pos = s;
    do {
      started[static_cast<std::size_t>(pos)] = 1;
      for (std::size_t k = 0; k < word.size(); ++k) {
        const int g = word[k];
        const int left = std::abs(g) - 1;
        if (pos != left && pos != left + 1) continue;
        const bool moving_right = pos == left;
        visits.push_back({static_cast<int>(k), moving_right == (g > 0)});
        pos = moving_right ? left + 1 : left;
      }
    } while (pos != s);
    components.push_back(std::move(visits));
  }
  return assemble_diagram(components, signs);
}

namespace {

double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

struct Hit {
  int crossing = 0;
  double t = 0;  // segment index + fraction
  bool over = false;
};

}  // namespace

PlanarDiagram polyline_diagram(const std::vector<std::vector<Point2>>& curves, const OverRule& over) {
  std::vector<std::vector<Hit>> hits(curves.size());
  std::vector<int> signs;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a; b < curves.size(); ++b) {
      const auto& ca = curves[a];
      const auto& cb = curves[b];
      for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = a == b ? i + 2 : 0; j < cb.size(); ++j) {
          if (a == b && i == 0 && j + 1 == cb.size()) continue;  // closing neighbours
          const Point2 p = ca[i], p2 = ca[(i + 1) % ca.size()];
          const Point2 r = cb[j], r2 = cb[(j + 1) % cb.size()];
          const Point2 d = sub(p2, p), e = sub(r2, r);
          const double den = cross(d, e);
          if (std::abs(den) < 1e-12) continue;
          const double s = cross(sub(r, p), e) / den;
          const double t = cross(sub(r, p), d) / den;
          if (s < 0 || s >= 1 || t < 0 || t >= 1) continue;
          const Point2 where{p.x + s * d.x, p.y + s * d.y};
          const bool a_over = over(static_cast<int>(a), static_cast<int>(b), where);
          const int id = static_cast<int>(signs.size());
          const double c = a_over ? cross(d, e) : cross(e, d);
          signs.push_back(c > 0 ? 1 : -1);
          hits[a].push_back({id, static_cast<double>(i) + s, a_over});
          hits[b].push_back({id, static_cast<double>(j) + t, !a_over});
        }
      }
    }
  }
  std::vector<std::vector<CrossingVisit>> components;
  for (auto& h : hits) {
    std::sort(h.begin(), h.end(), [](const Hit& l, const Hit& r) { return l.t < r.t; });
    std::vector<CrossingVisit> visits;
    for (const auto& x : h) visits.push_back({x.crossing, x.over});
    components.push_back(std::move(visits));
  }
  return assemble_diagram(components, signs);
}

PlanarDiagram three_ring_necklace() {
  constexpr int samples = 90;
  const double side = 2.0, radius = 1.08;  // side/2 < radius < side/sqrt(3)
  std::vector<Point2> centres;
  for (int k = 0; k < 3; ++k) {
    const double a = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 3;
    centres.push_back({side / std::sqrt(3.0) * std::cos(a), side / std::sqrt(3.0) * std::sin(a)});
  }
  std::vector<std::vector<Point2>> curves;
  for (const auto& c : centres) {
    std::vector<Point2> circle;
    for (int s = 0; s < samples; ++s) {
      const double a = 2 * std::numbers::pi * (s + 0.5) / samples;
      circle.push_back({c.x + radius * std::cos(a), c.y + radius * std::sin(a)});
    }
    curves.push_back(std::move(circle));
  }
  const double mid = side / (2 * std::sqrt(3.0));  // distance from centroid to an edge midpoint
  return polyline_diagram(curves, [&](int a, int b, Point2 where) {
    const bool outer = std::hypot(where.x, where.y) > mid;
    // Counterclockwise predecessor: a precedes b when b == a + 1 (mod 3).
    const bool a_precedes = (a + 1) % 3 == b;
    return outer == a_precedes;
  });
}

}  // namespace fpb
