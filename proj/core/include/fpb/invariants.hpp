#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpb/basket.hpp"
#include "fpb/planar_diagram.hpp"
#include "fpb/polynomial.hpp"

namespace fpb {

// Loop value -A^2 - A^-2.
LaurentPolynomial bracket_loop_value();

// Kauffman bracket in A, normalized so that c crossing-free curves give
// loop_value^(c-1). Evaluated by contracting crossings one at a time while
// tracking the planar matchings of the open strand ends.
LaurentPolynomial kauffman_bracket(const PlanarDiagram& d);

struct OrientedSigns {
  int writhe = 0;
  std::vector<int> signs;  // per crossing
};

// `reversed[c]` flips the orientation of component c relative to the
// diagram's stored orientation; an empty span keeps all orientations.
OrientedSigns orient_and_writhe(const PlanarDiagram& d, std::span<const char> reversed = {});

// Jones polynomial in q = t^(1/2) for one orientation: (-A^3)^(-w) <D> with A = q^(-1/2).
LaurentPolynomial jones_for_orientation(const LaurentPolynomial& bracket, int writhe);

// Least Jones polynomial (in q) over all component orientations and the
// mirror map q <-> q^-1.
LaurentPolynomial canonical_jones(const PlanarDiagram& d);
LaurentPolynomial jones(const BasketWord& w);

// Sorted |lk| over every unordered pair of components (bare loops included).
std::vector<int> linking_multiset(const PlanarDiagram& d);
std::vector<int> linking_matrix(const BasketWord& w);

// Seifert matrix of the basket surface on the band cores, indexed by page depth.
struct SeifertMatrix {
  int size = 0;
  std::vector<int> entries;  // row-major

  int operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * size + j)]; }
  int& operator()(int i, int j) { return entries[static_cast<std::size_t>(i * size + j)]; }
};

// V(i, j) = lk(a_i^+, a_j) for 0-based band indices. Nonzero only on
// interleaved pairs, and there only in the row of the deeper band.
SeifertMatrix seifert_matrix(const BasketWord& w);

// det(V - t V^T) in t, not normalized.
LaurentPolynomial alexander_determinant(const SeifertMatrix& v);
// Normalizes up to +-t^k and t <-> 1/t: lowest exponent 0, positive leading
// coefficient, then the lesser of the polynomial and its reversal.
LaurentPolynomial canonical_alexander(const LaurentPolynomial& p);
LaurentPolynomial alexander(const BasketWord& w);

struct LinkFingerprint {
  int components = 0;
  LaurentPolynomial jones{'q'};
  LaurentPolynomial alexander{'t'};
  std::vector<int> linking;

  friend bool operator==(const LinkFingerprint& a, const LinkFingerprint& b) {
    return a.components == b.components && a.jones == b.jones && a.alexander == b.alexander && a.linking == b.linking;
  }
  friend bool operator<(const LinkFingerprint& a, const LinkFingerprint& b);
};

LinkFingerprint fingerprint(const BasketWord& w);

// Single-line JSON: {"components":..,"jones":"..","alexander":"..","linking":[..]}
std::string to_json(const LinkFingerprint& f);
LinkFingerprint fingerprint_from_json(const std::string& text);

}  // namespace fpb
