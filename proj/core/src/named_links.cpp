#include "fpb/named_links.hpp"

#include <stdexcept>

#include "fpb/reference_diagrams.hpp"

namespace fpb {

LinkFingerprint diagram_fingerprint(const PlanarDiagram& d) {
  LinkFingerprint f;
  f.components = d.component_count;
  f.jones = canonical_jones(d);
  f.linking = linking_multiset(d);
  return f;
}

bool matches(const NamedLink& entry, const LinkFingerprint& f) {
  const auto& e = entry.fingerprint;
  if (e.components != f.components || !(e.jones == f.jones) || e.linking != f.linking) return false;
  return !entry.has_alexander || e.alexander == f.alexander;
}

const NamedLink* NamedLinkTable::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::optional<std::string> NamedLinkTable::classify(const LinkFingerprint& f) const {
  for (const auto& e : entries_) {
    if (matches(e, f)) return e.name;
  }
  return std::nullopt;
}

void NamedLinkTable::add(NamedLink link) {
  for (const auto& e : entries_) {
    if (e.name == link.name) throw std::invalid_argument("NamedLinkTable: duplicate name " + link.name);
    const bool both = e.has_alexander && link.has_alexander;
    if (e.fingerprint.components == link.fingerprint.components && e.fingerprint.jones == link.fingerprint.jones &&
        e.fingerprint.linking == link.fingerprint.linking && (!both || e.fingerprint.alexander == link.fingerprint.alexander)) {
      throw std::invalid_argument("NamedLinkTable: " + link.name + " is indistinguishable from " + e.name);
    }
  }
  entries_.push_back(std::move(link));
}

namespace {

NamedLink from_word(std::string name, std::initializer_list<int> letters, PlanarDiagram reference) {
  NamedLink link;
  link.name = std::move(name);
  link.word = BasketWord::validate(letters);
  link.diagram = std::move(reference);
  link.fingerprint = fingerprint(*link.word);
  return link;
}

NamedLink from_diagram(std::string name, PlanarDiagram reference) {
  NamedLink link;
  link.name = std::move(name);
  link.fingerprint = diagram_fingerprint(reference);
  link.diagram = std::move(reference);
  link.has_alexander = false;
  return link;
}

NamedLinkTable build_standard() {
  NamedLinkTable t;
  t.add(from_word("unknot", {}, braid_closure(1, {})));
  t.add(from_word("2-unlink", {1, 1}, braid_closure(2, {})));
  t.add(from_word("3-unlink", {1, 1, 2, 2}, braid_closure(3, {})));
  t.add(from_word("4-unlink", {1, 1, 2, 2, 3, 3}, braid_closure(4, {})));
  t.add(from_word("5-unlink", {1, 1, 2, 2, 3, 3, 4, 4}, braid_closure(5, {})));
  t.add(from_word("L2a1", {1, 2, 3, 1, 2, 3}, braid_closure(2, {1, 1})));
  t.add(from_word("3_1", {1, 2, 3, 4, 1, 2, 3, 4}, braid_closure(2, {1, 1, 1})));
  t.add(from_word("4_1", {1, 2, 4, 3, 1, 2, 4, 3}, braid_closure(3, {1, -2, 1, -2})));
  t.add(from_word("L2a1_u_O", {1, 2, 3, 4, 4, 1, 2, 3}, braid_closure(3, {1, 1})));
  t.add(from_word("L2a1#L2a1", {1, 3, 2, 4, 1, 3, 4, 2}, braid_closure(3, {1, 1, 2, 2})));
  t.add(from_diagram("L6a5", three_ring_necklace()));
  t.add(from_word("L6n1", {1, 3, 2, 4, 3, 1, 4, 2}, braid_closure(3, {1, 2, 1, 2, 1, 2})));
  t.add(from_word("L4a1", {1, 2, 3, 4, 5, 1, 4, 5, 2, 3}, braid_closure(2, {1, 1, 1, 1})));
  t.add(from_word("5_2", {1, 2, 3, 4, 5, 6, 4, 5, 1, 2, 3, 6}, braid_closure(3, {1, 1, 1, 2, -1, 2})));
  return t;
}

}  // namespace

const NamedLinkTable& NamedLinkTable::standard() {
  static const NamedLinkTable table = build_standard();
  return table;
}

}  // namespace fpb
