#pragma once

#include <stdexcept>
#include <string>

#include "fpb/basket.hpp"

namespace fpb {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RenderSpec {
  BasketWord word;
  std::string output_path;  // used by write_svg only
  double scale = 1.0;       // must be positive
  bool show_band_numbers = true;
  bool show_disc_label = true;
};

struct RenderResult {
  std::string svg;
  int arcs = 0;    // one double-line arc per band
  int breaks = 0;  // gaps cut into back-band edges
};

// Shaded disc below the binding, one pair of concentric semicircles per band.
// Where bands cross, the deeper band's edges are broken. Byte-identical output
// for identical specs. Throws std::invalid_argument for a non-positive scale.
RenderResult render_svg(const RenderSpec& spec);

// Renders to spec.output_path; throws IoError when the file cannot be written.
RenderResult write_svg(const RenderSpec& spec);

}  // namespace fpb
