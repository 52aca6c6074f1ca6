#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fpb/invariants.hpp"

namespace fpb {

LaurentPolynomial bracket_loop_value() {
  return LaurentPolynomial::from_terms({{-2, -1}, {2, -1}}, 'A');
}

namespace {

// Open strand ends, as sorted (a, b) pairs flattened: a0 b0 a1 b1 ...
using Matching = std::vector<int>;

struct MatchingHash {
  std::size_t operator()(const Matching& m) const noexcept {
    std::size_t h = m.size();
    for (int v : m) h = h * 1000003U ^ static_cast<std::size_t>(v);
    return h;
  }
};

// Greedy order: next crossing shares the most edges with the open boundary.
std::vector<int> contraction_order(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  std::vector<int> order;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> touched(static_cast<std::size_t>(d.edge_count), 0);
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int x = 0; x < n; ++x) {
      if (done[static_cast<std::size_t>(x)]) continue;
      int score = 0;
      for (int e : d.crossings[static_cast<std::size_t>(x)].slots) score += touched[static_cast<std::size_t>(e)] == 1 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = x;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    for (int e : d.crossings[static_cast<std::size_t>(best)].slots) ++touched[static_cast<std::size_t>(e)];
    order.push_back(best);
  }
  return order;
}

class PartnerMap {
 public:
  explicit PartnerMap(int edges) : partner_(static_cast<std::size_t>(edges), -1) {}

  void load(const Matching& m) {
    for (std::size_t i = 0; i < m.size(); i += 2) link(m[i], m[i + 1]);
    live_ = m;
  }

  // Joins strand ends x and y through a smoothing arc; returns closed loops.
  int add_arc(int x, int y) {
    if (x == y) return 1;
    const int fx = partner_[static_cast<std::size_t>(x)];
    const int fy = partner_[static_cast<std::size_t>(y)];
    if (fx != -1 && fy != -1) {
      if (fx == y) {
        unlink(x);
        unlink(y);
        return 1;
      }
      unlink(x);
      unlink(y);
      link(fx, fy);
    } else if (fx != -1) {
      unlink(x);
      link(fx, y);
      live_.push_back(y);
    } else if (fy != -1) {
      unlink(y);
      link(fy, x);
      live_.push_back(x);
    } else {
      link(x, y);
      live_.push_back(x);
      live_.push_back(y);
    }
    return 0;
  }

  // Extracts the canonical matching and clears the scratch state.
  Matching take() {
    Matching out;
    for (int v : live_) {
      const int p = partner_[static_cast<std::size_t>(v)];
      if (p != -1 && v < p) {
        out.push_back(v);
        out.push_back(p);
      }
    }
    for (int v : live_) partner_[static_cast<std::size_t>(v)] = -1;
    live_.clear();
    // Sort pairs by first element.
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < out.size(); i += 2) pairs.emplace_back(out[i], out[i + 1]);
    std::sort(pairs.begin(), pairs.end());
    out.clear();
    for (const auto& [a, b] : pairs) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }

 private:
  void link(int a, int b) {
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
  }
  void unlink(int a) { partner_[static_cast<std::size_t>(a)] = -1; }

  std::vector<int> partner_;
  std::vector<int> live_;
};

}  // namespace

LaurentPolynomial kauffman_bracket(const PlanarDiagram& d) {
  const LaurentPolynomial delta = bracket_loop_value();
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial::constant(1, 'A'), delta, delta * delta};
  const LaurentPolynomial a_factor = LaurentPolynomial::monomial(1, 1, 'A');
  const LaurentPolynomial b_factor = LaurentPolynomial::monomial(1, -1, 'A');

  std::unordered_map<Matching, LaurentPolynomial, MatchingHash> states;
  states.emplace(Matching{}, LaurentPolynomial::constant(1, 'A'));
  PartnerMap scratch(d.edge_count);

  for (int x : contraction_order(d)) {
    const auto& s = d.crossings[static_cast<std::size_t>(x)].slots;
    std::unordered_map<Matching, LaurentPolynomial, MatchingHash> next;
    next.reserve(states.size() * 2);
    for (const auto& [matching, poly] : states) {
      // A-smoothing joins (slot0, slot1)(slot2, slot3); B joins (slot0, slot3)(slot1, slot2).
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        scratch.load(matching);
        int loops = 0;
        if (smoothing == 0) {
          loops += scratch.add_arc(s[0], s[1]);
          loops += scratch.add_arc(s[2], s[3]);
        } else {
          loops += scratch.add_arc(s[0], s[3]);
          loops += scratch.add_arc(s[1], s[2]);
        }
        LaurentPolynomial term = poly * (smoothing == 0 ? a_factor : b_factor);
        if (loops > 0) term *= delta_pow[static_cast<std::size_t>(loops)];
        next[scratch.take()] += term;
      }
    }
    states.clear();
    for (auto& [m, p] : next) {
      if (!p.is_zero()) states.emplace(m, std::move(p));
    }
  }

  LaurentPolynomial total(LaurentPolynomial::constant(0, 'A'));
  for (const auto& [m, p] : states) {
    if (!m.empty()) throw std::logic_error("kauffman_bracket: open strands remain after contraction");
    total += p;
  }
  if (d.crossings.empty()) total = LaurentPolynomial::constant(1, 'A');
  total *= delta.pow(static_cast<unsigned>(d.bare_loops));
  auto normalized = total.exact_divide(delta);
  if (!normalized) throw std::logic_error("kauffman_bracket: state sum not divisible by the loop value");
  return normalized->with_variable('A');
}

}  // namespace fpb
