#include "coxlab/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"

namespace coxlab {

std::string to_string(LineKind kind) {
  switch (kind) {
    case LineKind::horizontal: return "horizontal";
    case LineKind::vertical: return "vertical";
    case LineKind::diagonal: return "diagonal";
  }
  return "?";
}

LineKind line_kind_from_string(const std::string& s) {
  if (s == "horizontal") return LineKind::horizontal;
  if (s == "vertical") return LineKind::vertical;
  if (s == "diagonal") return LineKind::diagonal;
  throw InvalidInput("unknown line kind '" + s + "'");
}

const Line& DegenerationComplex::line(int id) const {
  if (id < 1 || id > static_cast<int>(lines.size())) throw InvalidInput("no line " + std::to_string(id));
  return lines[static_cast<std::size_t>(id - 1)];
}

const Plane& DegenerationComplex::plane(int id) const {
  if (id < 1 || id > static_cast<int>(planes.size())) throw InvalidInput("no plane " + std::to_string(id));
  return planes[static_cast<std::size_t>(id - 1)];
}

void DegenerationComplex::validate() const {
  const auto mn = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  auto fail = [](const std::string& what) { throw InvalidInput("invalid complex: " + what); };
  if (rows < 1 || cols < 1) fail("non-positive grid size");
  if (points.size() != mn || lines.size() != 3 * mn || planes.size() != 2 * mn) fail("cell counts do not match the grid");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] != static_cast<int>(i + 1)) fail("points must be numbered 1..mn");
  }
  const int np = static_cast<int>(points.size());
  const int nf = static_cast<int>(planes.size());
  std::map<int, std::set<int>> plane_lines;
  std::array<int, 3> kind_count{};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.id != static_cast<int>(i + 1)) fail("lines must be numbered 1..3mn");
    for (int p : l.points) {
      if (p < 1 || p > np) fail("line " + std::to_string(l.id) + " has an unknown point");
    }
    if (l.points[0] == l.points[1]) fail("line " + std::to_string(l.id) + " is a loop");
    if (l.planes[0] == l.planes[1]) fail("line " + std::to_string(l.id) + " borders one plane twice");
    for (int f : l.planes) {
      if (f < 1 || f > nf) fail("line " + std::to_string(l.id) + " has an unknown plane");
      plane_lines[f].insert(l.id);
    }
    ++kind_count[static_cast<std::size_t>(l.kind)];
  }
  if (kind_count[0] != static_cast<int>(mn) || kind_count[1] != static_cast<int>(mn) ||
      kind_count[2] != static_cast<int>(mn)) {
    fail("expected mn lines of each kind");
  }
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const Plane& f = planes[i];
    if (f.id != static_cast<int>(i + 1)) fail("planes must be numbered 1..2mn");
    std::set<int> boundary(f.lines.begin(), f.lines.end());
    if (boundary.size() != 3 || boundary != plane_lines[f.id]) {
      fail("plane " + std::to_string(f.id) + " boundary disagrees with line incidences");
    }
    std::set<int> corners;
    std::set<LineKind> kinds;
    for (int l : f.lines) {
      if (l < 1 || l > static_cast<int>(lines.size())) fail("plane " + std::to_string(f.id) + " has an unknown line");
      corners.insert(line(l).points.begin(), line(l).points.end());
      kinds.insert(line(l).kind);
    }
    if (corners.size() != 3 || kinds.size() != 3) fail("plane " + std::to_string(f.id) + " is not a triangle");
  }
  if (euler_characteristic() != 0) fail("Euler characteristic is not 0");
}

DegenerationComplex build_torus_triangulation(int rows, int cols) {
  if (rows < 3 || cols < 3) {
    throw UnsupportedGrid("grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " is unsupported: both dimensions must be at least 3");
  }
  const int mn = rows * cols;
  auto pt = [&](int r, int c) { return ((r % rows + rows) % rows) * cols + (c % cols + cols) % cols + 1; };
  auto sq = [&](int r, int c) { return ((r % rows + rows) % rows) * cols + (c % cols + cols) % cols; };
  auto horizontal = [&](int r, int c) { return sq(r, c) + 1; };
  auto vertical = [&](int r, int c) { return mn + sq(r, c) + 1; };
  auto diagonal = [&](int r, int c) { return 2 * mn + sq(r, c) + 1; };
  auto lower = [&](int r, int c) { return 2 * sq(r, c) + 1; };
  auto upper = [&](int r, int c) { return 2 * sq(r, c) + 2; };

  DegenerationComplex x;
  x.rows = rows;
  x.cols = cols;
  x.points.resize(static_cast<std::size_t>(mn));
  std::iota(x.points.begin(), x.points.end(), 1);
  x.lines.resize(static_cast<std::size_t>(3 * mn));
  x.planes.resize(static_cast<std::size_t>(2 * mn));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      // square (r,c) has corners (r,c) NW, (r,c+1) NE, (r+1,c) SW, (r+1,c+1) SE
      x.lines[static_cast<std::size_t>(horizontal(r, c) - 1)] = {
          horizontal(r, c), LineKind::horizontal, {pt(r, c), pt(r, c + 1)}, {upper(r, c), lower(r - 1, c)}};
      x.lines[static_cast<std::size_t>(vertical(r, c) - 1)] = {
          vertical(r, c), LineKind::vertical, {pt(r, c), pt(r + 1, c)}, {upper(r, c), lower(r, c - 1)}};
      x.lines[static_cast<std::size_t>(diagonal(r, c) - 1)] = {
          diagonal(r, c), LineKind::diagonal, {pt(r, c + 1), pt(r + 1, c)}, {upper(r, c), lower(r, c)}};
      x.planes[static_cast<std::size_t>(upper(r, c) - 1)] = {upper(r, c), {horizontal(r, c), vertical(r, c), diagonal(r, c)}};
      x.planes[static_cast<std::size_t>(lower(r, c) - 1)] = {
          lower(r, c), {diagonal(r, c), vertical(r, c + 1), horizontal(r + 1, c)}};
    }
  }
  for (auto& l : x.lines) std::sort(l.planes.begin(), l.planes.end());
  for (auto& f : x.planes) std::sort(f.lines.begin(), f.lines.end());
  x.validate();
  return x;
}

DualGraph::DualGraph(std::vector<int> vertices, std::vector<DualEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(edges_.begin(), edges_.end(), [](const DualEdge& a, const DualEdge& b) { return a.id < b.id; });
  for (int v : vertices_) adjacency_[v];
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.id != static_cast<int>(i + 1)) throw InvalidInput("dual graph edges must be numbered 1..E");
    if (!adjacency_.contains(e.u) || !adjacency_.contains(e.v) || e.u == e.v) {
      throw InvalidInput("dual graph edge " + std::to_string(e.id) + " has bad endpoints");
    }
    adjacency_[e.u].push_back(e.id);
    adjacency_[e.v].push_back(e.id);
  }
}

const DualEdge& DualGraph::edge(int id) const {
  if (!has_edge(id)) throw InvalidInput("graph has no edge " + std::to_string(id));
  return edges_[static_cast<std::size_t>(id - 1)];
}

const std::vector<int>& DualGraph::incident(int vertex) const {
  auto it = adjacency_.find(vertex);
  if (it == adjacency_.end()) throw InvalidInput("graph has no vertex " + std::to_string(vertex));
  return it->second;
}

namespace {

std::map<int, int> component_labels(const DualGraph& g) {
  std::map<int, int> label;
  int next = 0;
  for (int s : g.vertices()) {
    if (label.contains(s)) continue;
    std::deque<int> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : g.incident(v)) {
        const auto& ed = g.edge(e);
        int w = ed.u == v ? ed.v : ed.u;
        if (label.try_emplace(w, next).second) queue.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

bool DualGraph::is_connected() const {
  if (vertices_.empty()) return false;
  auto labels = component_labels(*this);
  return std::all_of(labels.begin(), labels.end(), [](const auto& kv) { return kv.second == 0; });
}

bool DualGraph::is_regular(std::size_t d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [d](const auto& kv) { return kv.second.size() == d; });
}

bool DualGraph::adjacent(int e, int f) const {
  if (e == f) return false;
  const auto& a = edge(e);
  const auto& b = edge(f);
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

int DualGraph::cycle_rank() const {
  auto labels = component_labels(*this);
  int components = 0;
  for (const auto& [v, c] : labels) components = std::max(components, c + 1);
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + components;
}

DualGraph dual_graph(const DegenerationComplex& complex) {
  std::vector<int> vertices;
  for (const auto& f : complex.planes) vertices.push_back(f.id);
  std::vector<DualEdge> edges;
  for (const auto& l : complex.lines) edges.push_back({l.id, l.planes[0], l.planes[1]});
  return DualGraph(std::move(vertices), std::move(edges));
}

char role_name(Role r) { return static_cast<char>('a' + static_cast<int>(r)); }

std::optional<Role> HexagonLink::role_of(int line) const {
  for (Role r : kRoles) {
    if (role(r) == line) return r;
  }
  return std::nullopt;
}

std::vector<HexagonLink> hexagon_links(const DegenerationComplex& complex) {
  std::vector<HexagonLink> links;
  for (int p : complex.points) {
    HexagonLink link;
    link.point = p;
    std::array<int, 6> count{};
    for (const auto& l : complex.lines) {
      const bool tail = l.points[0] == p;
      const bool head = l.points[1] == p;
      if (!tail && !head) continue;
      Role r{};
      switch (l.kind) {
        case LineKind::horizontal: r = head ? Role::a : Role::d; break;
        case LineKind::vertical: r = head ? Role::b : Role::e; break;
        case LineKind::diagonal: r = head ? Role::c : Role::f; break;
      }
      link.cycle[static_cast<std::size_t>(r)] = l.id;
      ++count[static_cast<std::size_t>(r)];
    }
    if (count != std::array<int, 6>{1, 1, 1, 1, 1, 1}) {
      throw InvalidInput("point " + std::to_string(p) + " does not have exactly one line in each role");
    }
    links.push_back(link);
  }
  return links;
}

namespace {

void check_spanning_tree(const DualGraph& g, const std::vector<int>& tree) {
  std::vector<DualEdge> edges;
  // relabel to 1..k for the DualGraph constructor
  int next = 1;
  for (int id : tree) {
    const auto& e = g.edge(id);
    edges.push_back({next++, e.u, e.v});
  }
  DualGraph t(g.vertices(), std::move(edges));
  if (tree.size() + 1 != g.vertices().size() || !t.is_connected()) {
    throw InvalidInput("non-chord edges do not form a spanning tree");
  }
}

}  // namespace

SpanningData spanning_data(const DualGraph& graph, const std::vector<Chord>& chords) {
  if (!graph.is_connected()) throw InvalidInput("spanning data requires a connected graph");
  std::set<int> chord_lines;
  SpanningData out;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Chord& c = chords[i];
    const auto& e = graph.edge(c.line);
    if (c.label != static_cast<int>(i + 1)) throw InvalidInput("chord labels must run 1..t in order");
    if (!((c.tail == e.u && c.head == e.v) || (c.tail == e.v && c.head == e.u))) {
      throw InvalidInput("chord " + std::to_string(c.label) + " endpoints disagree with line " + std::to_string(c.line));
    }
    if (!chord_lines.insert(c.line).second) throw InvalidInput("line used by two chords");
    out.chords.push_back(c);
  }
  for (const auto& e : graph.edges()) {
    if (!chord_lines.contains(e.id)) out.tree_edges.push_back(e.id);
  }
  check_spanning_tree(graph, out.tree_edges);
  return out;
}

SpanningData spanning_data(const DualGraph& graph, SpanningMode mode) {
  if (mode == SpanningMode::paper_fixture) return spanning_data(graph, fixtures::paper_chords());
  if (!graph.is_connected()) throw InvalidInput("spanning data requires a connected graph");
  std::set<int> reached{graph.vertices().front()};
  std::deque<int> queue{graph.vertices().front()};
  std::set<int> tree;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : graph.incident(v)) {
      const auto& e = graph.edge(id);
      int w = e.u == v ? e.v : e.u;
      if (reached.insert(w).second) {
        tree.insert(id);
        queue.push_back(w);
      }
    }
  }
  SpanningData out;
  out.tree_edges.assign(tree.begin(), tree.end());
  int label = 1;
  for (const auto& e : graph.edges()) {
    if (tree.contains(e.id)) continue;
    out.chords.push_back({label++, e.id, std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return out;
}

}  // namespace coxlab
