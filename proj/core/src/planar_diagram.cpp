#include "fpb/planar_diagram.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace fpb {

PlanarDiagram assemble_diagram(const std::vector<std::vector<CrossingVisit>>& components, const std::vector<int>& signs,
                               const std::vector<std::array<int, 2>>& bands) {
  const std::size_t n_crossings = signs.size();
  struct Ends {
    int in = -1, out = -1;
  };
  std::vector<Ends> under(n_crossings), over(n_crossings);

  PlanarDiagram d;
  d.component_count = static_cast<int>(components.size());
  d.component_crossings.resize(components.size());
  int next_edge = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& visits = components[c];
    const int m = static_cast<int>(visits.size());
    if (m == 0) {
      ++d.bare_loops;
      continue;
    }
    const int base = next_edge;
    next_edge += m;
    for (int i = 0; i < m; ++i) {
      const auto& v = visits[static_cast<std::size_t>(i)];
      if (v.crossing < 0 || static_cast<std::size_t>(v.crossing) >= n_crossings) {
        throw std::invalid_argument("assemble_diagram: crossing id out of range");
      }
      Ends& ends = v.over ? over[static_cast<std::size_t>(v.crossing)] : under[static_cast<std::size_t>(v.crossing)];
      if (ends.in != -1) throw std::invalid_argument("assemble_diagram: crossing strand visited twice");
      ends.in = base + (i + m - 1) % m;
      ends.out = base + i;
      d.component_crossings[c].push_back(v.crossing);
    }
    d.edge_component.insert(d.edge_component.end(), static_cast<std::size_t>(m), static_cast<int>(c));
  }
  d.edge_count = next_edge;

  d.crossings.resize(n_crossings);
  for (std::size_t x = 0; x < n_crossings; ++x) {
    if (under[x].in == -1 || over[x].in == -1) throw std::invalid_argument("assemble_diagram: crossing not visited twice");
    const int s = signs[x];
    if (s != 1 && s != -1) throw std::invalid_argument("assemble_diagram: sign must be +-1");
    auto& cx = d.crossings[x];
    cx.sign = s;
    cx.slots = {under[x].in, s > 0 ? over[x].out : over[x].in, under[x].out, s > 0 ? over[x].in : over[x].out};
    if (x < bands.size()) {
      cx.over_band = bands[x][0];
      cx.under_band = bands[x][1];
    }
  }
  return d;
}

namespace {

// (crossing, slot) occurrences of every edge.
std::vector<std::array<std::pair<int, int>, 2>> edge_occurrences(const PlanarDiagram& d) {
  std::vector<std::array<std::pair<int, int>, 2>> occ(static_cast<std::size_t>(d.edge_count),
                                                      {std::pair{-1, -1}, std::pair{-1, -1}});
  for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x) {
    for (int s = 0; s < 4; ++s) {
      auto& o = occ[static_cast<std::size_t>(d.crossings[static_cast<std::size_t>(x)].slots[static_cast<std::size_t>(s)])];
      (o[0].first == -1 ? o[0] : o[1]) = {x, s};
    }
  }
  return occ;
}

std::pair<int, int> other_end(const std::array<std::pair<int, int>, 2>& occ, int x, int s) {
  return occ[0] == std::pair{x, s} ? occ[1] : occ[0];
}

}  // namespace

int closed_curve_count(const PlanarDiagram& d) {
  const auto occ = edge_occurrences(d);
  std::vector<char> seen(static_cast<std::size_t>(d.edge_count), 0);
  int curves = 0;
  for (int e0 = 0; e0 < d.edge_count; ++e0) {
    if (seen[static_cast<std::size_t>(e0)]) continue;
    ++curves;
    // Walk: leave through the slot opposite to the one we arrived at.
    int e = e0;
    auto [x, s] = occ[static_cast<std::size_t>(e)][0];
    while (!seen[static_cast<std::size_t>(e)]) {
      seen[static_cast<std::size_t>(e)] = 1;
      const int s_out = (s + 2) % 4;
      e = d.crossings[static_cast<std::size_t>(x)].slots[static_cast<std::size_t>(s_out)];
      std::tie(x, s) = other_end(occ[static_cast<std::size_t>(e)], x, s_out);
    }
  }
  return curves + d.bare_loops;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram m = d;
  for (auto& c : m.crossings) {
    const auto [a, b, cc, dd] = c.slots;
    c.slots = c.sign > 0 ? std::array<int, 4>{dd, a, b, cc} : std::array<int, 4>{b, cc, dd, a};
    c.sign = -c.sign;
    std::swap(c.over_band, c.under_band);
  }
  return m;
}

bool satisfies_euler_relation(const PlanarDiagram& d) {
  const int v = static_cast<int>(d.crossings.size());
  if (v == 0) return d.edge_count == 0;
  const auto occ = edge_occurrences(d);

  // Boundary walks: arriving at slot s, the face continues through slot s - 1.
  std::vector<std::array<char, 4>> used(static_cast<std::size_t>(v), {0, 0, 0, 0});
  int walks = 0;
  for (int x0 = 0; x0 < v; ++x0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (used[static_cast<std::size_t>(x0)][static_cast<std::size_t>(s0)]) continue;
      ++walks;
      int x = x0, s = s0;
      while (!used[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]) {
        used[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] = 1;
        const int e = d.crossings[static_cast<std::size_t>(x)].slots[static_cast<std::size_t>(s)];
        auto [nx, ns] = other_end(occ[static_cast<std::size_t>(e)], x, s);
        x = nx;
        s = (ns + 3) % 4;
      }
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  for (const auto& o : occ) parent[static_cast<std::size_t>(find(o[0].first))] = find(o[1].first);
  int pieces = 0;
  for (int x = 0; x < v; ++x) pieces += find(x) == x ? 1 : 0;

  return v - d.edge_count + walks == 2 * pieces;
}

std::string to_pd_text(const PlanarDiagram& d) {
  std::ostringstream out;
  out << "PD crossings=" << d.crossings.size() << " edges=" << d.edge_count << " components=" << d.component_count
      << " bare_loops=" << d.bare_loops << '\n';
  for (const auto& c : d.crossings) {
    out << "X " << c.slots[0] + 1 << ' ' << c.slots[1] + 1 << ' ' << c.slots[2] + 1 << ' ' << c.slots[3] + 1 << " [o="
        << c.over_band << ",u=" << c.under_band << "]\n";
  }
  return out.str();
}

}  // namespace fpb
