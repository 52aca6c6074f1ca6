#include "fpb/diagram.hpp"

#include <algorithm>

namespace fpb {

ChordDiagram to_chords(const BasketWord& w) {
  ChordDiagram c;
  c.bands = w.bands();
  c.chords.reserve(static_cast<std::size_t>(c.bands));
  for (int k = 1; k <= c.bands; ++k) {
    const auto [p, q] = w.feet(k);
    c.chords.push_back({p, q});
  }
  return c;
}

bool interleaved(const Chord& a, const Chord& b) noexcept {
  const bool left_inside = a.left < b.left && b.left < a.right;
  const bool right_inside = a.left < b.right && b.right < a.right;
  return left_inside != right_inside;
}

bool interleaved(const ChordDiagram& c, int i, int j) { return interleaved(c.chord(i), c.chord(j)); }

int interleaved_pair_count(const ChordDiagram& c) {
  int count = 0;
  for (int i = 1; i <= c.bands; ++i) {
    for (int j = i + 1; j <= c.bands; ++j) count += interleaved(c, i, j) ? 1 : 0;
  }
  return count;
}

namespace {

// End nodes: L_x = 2x, R_x = 2x + 1.
constexpr int left_node(int x) { return 2 * x; }
constexpr int right_node(int x) { return 2 * x + 1; }

struct BandEdge {
  int band = 0;
  bool outer = true;
  int from_node = 0;  // left end
  int to_node = 0;    // right end
  // Arch geometry: x-extent [a, b] and height h.
  long a = 0, b = 0, h = 0;
};

std::vector<BandEdge> band_edges(const ChordDiagram& c) {
  std::vector<BandEdge> edges;
  edges.reserve(static_cast<std::size_t>(2 * c.bands));
  for (int k = 1; k <= c.bands; ++k) {
    const auto [p, q] = c.chord(k);
    const auto lx = [](int x) { return 4L * x + 1; };
    const auto rx = [](int x) { return 4L * x + 3; };
    BandEdge outer{k, true, left_node(p), right_node(q), lx(p), rx(q), 0};
    BandEdge inner{k, false, right_node(p), left_node(q), rx(p), lx(q), 0};
    for (BandEdge* e : {&outer, &inner}) e->h = (e->b - e->a) * 1000 + e->a;
    edges.push_back(outer);
    edges.push_back(inner);
  }
  return edges;
}

// Each end node lies on exactly one band edge.
std::vector<int> edge_at_node(const std::vector<BandEdge>& edges, int n_nodes) {
  std::vector<int> at(static_cast<std::size_t>(n_nodes), -1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    at[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].from_node)] = e;
    at[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].to_node)] = e;
  }
  return at;
}

int gap_partner(int node, int positions) {
  const int x = node / 2;
  return node % 2 == 1 ? left_node((x + 1) % positions) : right_node((x + positions - 1) % positions);
}

struct Traversal {
  int edge = 0;
  bool forward = true;  // left end to right end
};

// Cycles of the end-node pairing, each as its sequence of band-edge traversals.
std::vector<std::vector<Traversal>> trace_boundary(const std::vector<BandEdge>& edges, int positions,
                                                   std::vector<int>* node_label) {
  const int n_nodes = 2 * positions;
  const auto at = edge_at_node(edges, n_nodes);
  std::vector<int> label(static_cast<std::size_t>(n_nodes), -1);
  std::vector<std::vector<Traversal>> cycles;
  for (int start = 0; start < n_nodes; ++start) {
    if (label[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(cycles.size());
    cycles.emplace_back();
    int node = start;
    do {
      const int e = at[static_cast<std::size_t>(node)];
      const auto& be = edges[static_cast<std::size_t>(e)];
      const bool forward = be.from_node == node;
      const int far = forward ? be.to_node : be.from_node;
      label[static_cast<std::size_t>(node)] = id;
      label[static_cast<std::size_t>(far)] = id;
      cycles.back().push_back({e, forward});
      node = gap_partner(far, positions);
    } while (node != start);
  }
  if (node_label) *node_label = std::move(label);
  return cycles;
}

struct Vec {
  int x = 0, y = 0;
};

// Position of a crossing along an edge (left-to-right parametrization) and the
// edge's direction there.
struct EdgePoint {
  int crossing = 0;
  long t = 0;
  Vec dir;
};

}  // namespace

BoundaryComponents boundary_components(const BasketWord& w) {
  BoundaryComponents out;
  const int positions = static_cast<int>(w.size());
  if (positions == 0) {
    out.count = 1;
    return out;
  }
  const auto edges = band_edges(to_chords(w));
  std::vector<int> label;
  out.count = static_cast<int>(trace_boundary(edges, positions, &label).size());
  out.left_end.resize(static_cast<std::size_t>(positions));
  out.right_end.resize(static_cast<std::size_t>(positions));
  for (int x = 0; x < positions; ++x) {
    out.left_end[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(left_node(x))];
    out.right_end[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(right_node(x))];
  }
  return out;
}

PlanarDiagram to_planar_diagram(const BasketWord& w) {
  const int positions = static_cast<int>(w.size());
  if (positions == 0) return assemble_diagram({{}}, {});

  const auto chords = to_chords(w);
  const auto edges = band_edges(chords);
  std::vector<std::vector<EdgePoint>> on_edge(edges.size());
  std::vector<std::array<int, 2>> bands;  // over, under
  std::vector<std::array<Vec, 2>> dirs;   // over, under directions (left-to-right parametrization)
  std::vector<std::array<int, 2>> crossing_edges;

  for (int ea = 0; ea < static_cast<int>(edges.size()); ++ea) {
    for (int eb = 0; eb < static_cast<int>(edges.size()); ++eb) {
      const auto& A = edges[static_cast<std::size_t>(ea)];
      const auto& B = edges[static_cast<std::size_t>(eb)];
      // Only consider A starting to the left of B, with B's left end inside A.
      if (A.band == B.band || !(A.a < B.a && B.a < A.b && A.b < B.b)) continue;
      const int id = static_cast<int>(bands.size());
      EdgePoint pa{id, 0, {}}, pb{id, 0, {}};
      if (B.h > A.h) {
        // B's left leg passes A's roof.
        pa.t = A.h + (B.a - A.a);
        pa.dir = {1, 0};
        pb.t = A.h;
        pb.dir = {0, 1};
      } else {
        // A's right leg passes B's roof.
        pa.t = A.h + (A.b - A.a) + (A.h - B.h);
        pa.dir = {0, -1};
        pb.t = B.h + (A.b - B.a);
        pb.dir = {1, 0};
      }
      on_edge[static_cast<std::size_t>(ea)].push_back(pa);
      on_edge[static_cast<std::size_t>(eb)].push_back(pb);
      const bool a_over = A.band < B.band;
      bands.push_back(a_over ? std::array<int, 2>{A.band, B.band} : std::array<int, 2>{B.band, A.band});
      dirs.push_back(a_over ? std::array<Vec, 2>{pa.dir, pb.dir} : std::array<Vec, 2>{pb.dir, pa.dir});
      crossing_edges.push_back(a_over ? std::array<int, 2>{ea, eb} : std::array<int, 2>{eb, ea});
    }
  }
  for (auto& pts : on_edge) {
    std::sort(pts.begin(), pts.end(), [](const EdgePoint& l, const EdgePoint& r) { return l.t < r.t; });
  }

  const auto cycles = trace_boundary(edges, positions, nullptr);
  std::vector<std::vector<CrossingVisit>> components(cycles.size());
  std::vector<std::array<int, 2>> orient(bands.size(), {1, 1});  // over, under: +1 if traversed forward
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const auto& tr : cycles[c]) {
      const auto& pts = on_edge[static_cast<std::size_t>(tr.edge)];
      auto visit = [&](const EdgePoint& pt) {
        const bool over = crossing_edges[static_cast<std::size_t>(pt.crossing)][0] == tr.edge;
        components[c].push_back({pt.crossing, over});
        orient[static_cast<std::size_t>(pt.crossing)][over ? 0 : 1] = tr.forward ? 1 : -1;
      };
      if (tr.forward) {
        std::for_each(pts.begin(), pts.end(), visit);
      } else {
        std::for_each(pts.rbegin(), pts.rend(), visit);
      }
    }
  }

  std::vector<int> signs(bands.size());
  for (std::size_t x = 0; x < bands.size(); ++x) {
    const Vec o{dirs[x][0].x * orient[x][0], dirs[x][0].y * orient[x][0]};
    const Vec u{dirs[x][1].x * orient[x][1], dirs[x][1].y * orient[x][1]};
    signs[x] = (o.x * u.y - o.y * u.x) > 0 ? 1 : -1;
  }
  return assemble_diagram(components, signs, bands);
}

}  // namespace fpb
