#pragma once

#include <vector>

#include "fpb/basket.hpp"
#include "fpb/planar_diagram.hpp"

namespace fpb {

struct Chord {
  int left = 0;   // 0-based position of the left foot
  int right = 0;  // 0-based position of the right foot
};

// Band k (letter k, page depth k) has its feet at chords[k - 1].
struct ChordDiagram {
  int bands = 0;
  std::vector<Chord> chords;

  const Chord& chord(int band) const { return chords[static_cast<std::size_t>(band - 1)]; }
};

ChordDiagram to_chords(const BasketWord& w);

// True iff exactly one foot of band j lies strictly between the feet of band i.
bool interleaved(const ChordDiagram& c, int i, int j);
bool interleaved(const Chord& a, const Chord& b) noexcept;
int interleaved_pair_count(const ChordDiagram& c);

// Every foot interval at position x has a left end L_x and a right end R_x.
// Band (p < q): outer edge L_p--R_q, inner edge R_p--L_q. Disc gaps join R_x
// to L_{x+1}, cyclically.
struct BoundaryComponents {
  int count = 0;
  std::vector<int> left_end;   // component label of L_x
  std::vector<int> right_end;  // component label of R_x
};

BoundaryComponents boundary_components(const BasketWord& w);

// Diagram of the boundary link. Band edges are drawn as axis-aligned arches
// over their foot interval; a taller arch encloses every shorter one. The
// band with the smaller page depth is over at every crossing. Components are
// oriented along the boundary traversal that starts at the lowest free end.
PlanarDiagram to_planar_diagram(const BasketWord& w);

}  // namespace fpb
