#pragma once

#include <array>
#include <string>
#include <vector>

namespace fpb {

// One crossing of an oriented link diagram. `slots` lists the four incident
// edge ids counterclockwise, starting at the incoming under-strand; slots[2]
// is the outgoing under-strand. The over-strand runs slots[3] -> slots[1]
// when sign is +1 and slots[1] -> slots[3] when sign is -1.
struct PdCrossing {
  std::array<int, 4> slots{};
  int sign = 0;
  int over_band = 0;   // basket letter of the over-strand, 0 if not a basket diagram
  int under_band = 0;

  int under_in() const noexcept { return slots[0]; }
  int under_out() const noexcept { return slots[2]; }
  int over_in() const noexcept { return sign > 0 ? slots[3] : slots[1]; }
  int over_out() const noexcept { return sign > 0 ? slots[1] : slots[3]; }
};

// Oriented planar diagram. Edges are 0-based ids; each edge runs from one
// crossing to the next along its component. Components without crossings are
// kept as bare loops.
struct PlanarDiagram {
  int edge_count = 0;
  std::vector<PdCrossing> crossings;
  std::vector<int> edge_component;  // component id per edge
  int component_count = 0;          // includes bare loops
  int bare_loops = 0;
  // Per component, the crossing ids met along its orientation.
  std::vector<std::vector<int>> component_crossings;
};

// A visit of a component to a crossing while walking along it.
struct CrossingVisit {
  int crossing = 0;
  bool over = false;
};

// Assembles a PlanarDiagram from per-component visit sequences and per-crossing
// signs (for the orientation given by the visit order). Every crossing must be
// visited exactly once as over and once as under. Empty sequences are bare loops.
PlanarDiagram assemble_diagram(const std::vector<std::vector<CrossingVisit>>& components, const std::vector<int>& signs,
                               const std::vector<std::array<int, 2>>& bands = {});

// Counts closed curves by walking the crossing slots, independently of the
// stored component ids.
int closed_curve_count(const PlanarDiagram& d);

// Switches every crossing; orientations are kept.
PlanarDiagram mirror(const PlanarDiagram& d);

// Number of faces of the projection graph plus the Euler check
// V - E + F == 1 + (connected pieces). Bare loops count as separate pieces.
bool satisfies_euler_relation(const PlanarDiagram& d);

// Text export: header line then one "X a b c d [o=i,u=j]" line per crossing,
// edge ids 1-based.
std::string to_pd_text(const PlanarDiagram& d);

}  // namespace fpb
