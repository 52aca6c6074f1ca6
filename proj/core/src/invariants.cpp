#include "fpb/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpb/diagram.hpp"
#include "json.hpp"

namespace fpb {

OrientedSigns orient_and_writhe(const PlanarDiagram& d, std::span<const char> reversed) {
  OrientedSigns out;
  out.signs.reserve(d.crossings.size());
  auto flip = [&](int edge) {
    const auto c = static_cast<std::size_t>(d.edge_component[static_cast<std::size_t>(edge)]);
    return c < reversed.size() && reversed[c] ? -1 : 1;
  };
  for (const auto& c : d.crossings) {
    const int s = c.sign * flip(c.under_in()) * flip(c.over_in());
    out.signs.push_back(s);
    out.writhe += s;
  }
  return out;
}

LaurentPolynomial jones_for_orientation(const LaurentPolynomial& bracket, int writhe) {
  const auto factor = LaurentPolynomial::monomial(writhe % 2 == 0 ? 1 : -1, -3 * writhe, 'A');
  // A = q^(-1/2): exponent e of A becomes -e/2 in q.
  return (factor * bracket).divide_exponents(-2).with_variable('q');
}

LaurentPolynomial canonical_jones(const PlanarDiagram& d) {
  const auto bracket = kauffman_bracket(d);
  const int comps = d.component_count;
  std::optional<LaurentPolynomial> best;
  // Component 0 stays fixed: reversing every component leaves all signs alone.
  const unsigned choices = comps <= 1 ? 1U : 1U << static_cast<unsigned>(comps - 1);
  std::vector<char> reversed(static_cast<std::size_t>(std::max(comps, 1)), 0);
  for (unsigned mask = 0; mask < choices; ++mask) {
    for (int c = 1; c < comps; ++c) reversed[static_cast<std::size_t>(c)] = (mask >> static_cast<unsigned>(c - 1)) & 1U;
    const auto v = jones_for_orientation(bracket, orient_and_writhe(d, reversed).writhe);
    for (const auto& candidate : {v, v.substitute_power(-1)}) {
      if (!best || candidate < *best) best = candidate;
    }
  }
  return *best;
}

LaurentPolynomial jones(const BasketWord& w) { return canonical_jones(to_planar_diagram(w)); }

std::vector<int> linking_multiset(const PlanarDiagram& d) {
  const int comps = d.component_count;
  std::vector<int> twice(static_cast<std::size_t>(comps * comps), 0);
  for (const auto& c : d.crossings) {
    const int a = d.edge_component[static_cast<std::size_t>(c.under_in())];
    const int b = d.edge_component[static_cast<std::size_t>(c.over_in())];
    if (a == b) continue;
    twice[static_cast<std::size_t>(std::min(a, b) * comps + std::max(a, b))] += c.sign;
  }
  std::vector<int> out;
  for (int a = 0; a < comps; ++a) {
    for (int b = a + 1; b < comps; ++b) {
      const int v = twice[static_cast<std::size_t>(a * comps + b)];
      if (v % 2 != 0) throw std::logic_error("linking_multiset: odd crossing sum between components");
      out.push_back(std::abs(v / 2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> linking_matrix(const BasketWord& w) { return linking_multiset(to_planar_diagram(w)); }

SeifertMatrix seifert_matrix(const BasketWord& w) {
  const auto chords = to_chords(w);
  SeifertMatrix v;
  v.size = chords.bands;
  v.entries.assign(static_cast<std::size_t>(v.size * v.size), 0);
  for (int i = 0; i < v.size; ++i) {
    for (int j = i + 1; j < v.size; ++j) {
      const auto& front = chords.chords[static_cast<std::size_t>(i)];
      const auto& back = chords.chords[static_cast<std::size_t>(j)];
      if (!interleaved(front, back)) continue;
      v(j, i) = front.left < back.left ? 1 : -1;
    }
  }
  return v;
}

namespace {

// Laplace expansion along the first row, memoized over the set of columns
// still available. Sizes stay small (n <= 8 in practice).
LaurentPolynomial determinant(const std::vector<LaurentPolynomial>& m, int n) {
  if (n == 0) return LaurentPolynomial::constant(1, 't');
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  std::vector<std::optional<LaurentPolynomial>> memo(std::size_t{1} << static_cast<unsigned>(n));
  auto rec = [&](auto&& self, unsigned cols, int row) -> LaurentPolynomial {
    if (row == n) return LaurentPolynomial::constant(1, 't');
    auto& slot = memo[cols];
    if (slot) return *slot;
    LaurentPolynomial acc(LaurentPolynomial::constant(0, 't'));
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(cols & (1U << static_cast<unsigned>(c)))) continue;
      const auto& entry = m[static_cast<std::size_t>(row * n + c)];
      if (!entry.is_zero()) {
        auto minor = self(self, cols & ~(1U << static_cast<unsigned>(c)), row + 1);
        acc += sign > 0 ? entry * minor : -(entry * minor);
      }
      sign = -sign;
    }
    slot = acc;
    return acc;
  };
  return rec(rec, (1U << static_cast<unsigned>(n)) - 1U, 0).with_variable('t');
}

}  // namespace

LaurentPolynomial alexander_determinant(const SeifertMatrix& v) {
  const int n = v.size;
  std::vector<LaurentPolynomial> m;
  m.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.push_back(LaurentPolynomial::constant(v(i, j), 't') - LaurentPolynomial::monomial(v(j, i), 1, 't'));
    }
  }
  return determinant(m, n);
}

LaurentPolynomial canonical_alexander(const LaurentPolynomial& p) {
  if (p.is_zero()) return LaurentPolynomial('t');
  auto normalize = [](LaurentPolynomial x) {
    x = x.shifted(-x.min_exponent());
    return x.leading_coefficient() < 0 ? -x : x;
  };
  const auto forward = normalize(p.with_variable('t'));
  const auto backward = normalize(forward.substitute_power(-1));
  return backward < forward ? backward : forward;
}

LaurentPolynomial alexander(const BasketWord& w) { return canonical_alexander(alexander_determinant(seifert_matrix(w))); }

bool operator<(const LinkFingerprint& a, const LinkFingerprint& b) {
  if (a.components != b.components) return a.components < b.components;
  if (!(a.jones == b.jones)) return a.jones < b.jones;
  if (!(a.alexander == b.alexander)) return a.alexander < b.alexander;
  return a.linking < b.linking;
}

LinkFingerprint fingerprint(const BasketWord& w) {
  const auto pd = to_planar_diagram(w);
  LinkFingerprint f;
  f.components = pd.component_count;
  f.jones = canonical_jones(pd);
  f.alexander = alexander(w);
  f.linking = linking_multiset(pd);
  return f;
}

std::string to_json(const LinkFingerprint& f) {
  nlohmann::ordered_json j;
  j["components"] = f.components;
  j["jones"] = f.jones.to_string();
  j["alexander"] = f.alexander.to_string();
  j["linking"] = f.linking;
  return j.dump();
}

LinkFingerprint fingerprint_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  LinkFingerprint f;
  f.components = j.at("components").get<int>();
  f.jones = LaurentPolynomial::parse(j.at("jones").get<std::string>(), 'q');
  f.alexander = LaurentPolynomial::parse(j.at("alexander").get<std::string>(), 't');
  f.linking = j.at("linking").get<std::vector<int>>();
  return f;
}

}  // namespace fpb
