#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpb/basket.hpp"
#include "fpb/invariants.hpp"
#include "fpb/planar_diagram.hpp"

namespace fpb {

inline constexpr std::string_view kUnknown = "UNKNOWN";

struct NamedLink {
  std::string name;
  std::optional<BasketWord> word;  // reference basket word, when one is known
  PlanarDiagram diagram;           // independent reference diagram
  LinkFingerprint fingerprint;
  // False when no basket word is known: the surface Alexander polynomial is
  // then unavailable and matching ignores it.
  bool has_alexander = true;
};

class NamedLinkTable {
 public:
  // unknot, 2..5-component unlinks, L2a1, 3_1, 4_1, L2a1_u_O, L2a1#L2a1,
  // L6a5, L6n1, L4a1, 5_2.
  static const NamedLinkTable& standard();

  const std::vector<NamedLink>& entries() const noexcept { return entries_; }
  const NamedLink* find(std::string_view name) const;

  // Name of the entry the fingerprint matches, or nullopt.
  std::optional<std::string> classify(const LinkFingerprint& f) const;

  void add(NamedLink link);

 private:
  std::vector<NamedLink> entries_;
};

// True when f agrees with the entry on every field the entry defines.
bool matches(const NamedLink& entry, const LinkFingerprint& f);

// Fingerprint of a diagram; the Alexander field is left zero.
LinkFingerprint diagram_fingerprint(const PlanarDiagram& d);

}  // namespace fpb
