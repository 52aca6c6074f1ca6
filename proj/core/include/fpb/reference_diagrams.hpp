#pragma once

#include <functional>
#include <vector>

#include "fpb/planar_diagram.hpp"

namespace fpb {

// Closure of a braid on `strands` strands. Generator +i (1-based) crosses
// positions i and i+1 with the strand moving from i to i+1 over; -i is the
// inverse. Strands without crossings become bare loops.
PlanarDiagram braid_closure(int strands, const std::vector<int>& word);

struct Point2 {
  double x = 0, y = 0;
};

// Decides, for a crossing between curves a and b at `where`, whether a is over.
using OverRule = std::function<bool(int a, int b, Point2 where)>;

// Diagram of closed plane polylines in general position (no self-crossings
// are allowed to coincide with vertices). Crossings between two segments of
// the same curve are supported; `over` then receives a == b.
PlanarDiagram polyline_diagram(const std::vector<std::vector<Point2>>& curves, const OverRule& over);

// Three round circles centred on an equilateral triangle, each meeting its two
// neighbours twice; alternating crossings.
PlanarDiagram three_ring_necklace();

}  // namespace fpb
