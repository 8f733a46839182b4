#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxlab {

/// Direction of an intersection line in the grid picture of the torus.
enum class LineKind { horizontal, vertical, diagonal };

std::string to_string(LineKind kind);
LineKind line_kind_from_string(const std::string& s);

/// An intersection line. `points` is oriented: west→east for horizontals,
/// north→south for verticals and northeast→southwest for diagonals. Role
/// labels around a point are read off this orientation.
struct Line {
  int id = 0;
  LineKind kind = LineKind::horizontal;
  std::array<int, 2> points{};
  std::array<int, 2> planes{};
};

struct Plane {
  int id = 0;
  std::array<int, 3> lines{};
};

/// An edge of the dual graph that is not on the spanning tree, oriented tail → head.
struct Chord {
  int label = 0;
  int line = 0;
  int tail = 0;
  int head = 0;
};

/// The degenerated surface: an m×n torus grid, every square cut by a
/// northeast–southwest diagonal into two triangles (planes).
struct DegenerationComplex {
  int rows = 0;
  int cols = 0;
  std::vector<int> points;
  std::vector<Line> lines;    // sorted by id
  std::vector<Plane> planes;  // sorted by id
  /// Only the shipped reference labeling carries a chord table.
  std::vector<Chord> chords;

  const Line& line(int id) const;
  const Plane& plane(int id) const;
  int euler_characteristic() const {
    return static_cast<int>(points.size()) - static_cast<int>(lines.size()) + static_cast<int>(planes.size());
  }

  /// Throws InvalidInput unless counts, incidences and orientations are coherent.
  void validate() const;
};

/// Rows and columns must both be at least 3. Throws UnsupportedGrid.
///
/// Points are numbered row-major. Lines: horizontals, then verticals, then
/// diagonals, each row-major. Planes: row-major over squares, the lower
/// (southeast) triangle before the upper (northwest) one.
DegenerationComplex build_torus_triangulation(int rows, int cols);

struct DualEdge {
  int id = 0;  // line id
  int u = 0;   // plane ids
  int v = 0;
};

/// Vertices are planes, edges are lines. Edge ids must be 1..E.
class DualGraph {
 public:
  DualGraph() = default;
  DualGraph(std::vector<int> vertices, std::vector<DualEdge> edges);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<DualEdge>& edges() const { return edges_; }
  const DualEdge& edge(int id) const;
  bool has_edge(int id) const { return id >= 1 && id <= static_cast<int>(edges_.size()); }
  /// Incident edge ids in increasing order.
  const std::vector<int>& incident(int vertex) const;
  std::size_t degree(int vertex) const { return incident(vertex).size(); }
  int max_vertex() const { return vertices_.empty() ? 0 : vertices_.back(); }

  bool is_connected() const;
  bool is_regular(std::size_t d) const;
  /// Two distinct edges sharing an endpoint.
  bool adjacent(int e, int f) const;
  /// |E| − |V| + components.
  int cycle_rank() const;

 private:
  std::vector<int> vertices_;
  std::vector<DualEdge> edges_;
  std::map<int, std::vector<int>> adjacency_;
};

DualGraph dual_graph(const DegenerationComplex& complex);

enum class Role { a, b, c, d, e, f };
inline constexpr std::array<Role, 6> kRoles{Role::a, Role::b, Role::c, Role::d, Role::e, Role::f};
char role_name(Role r);

/// The six lines through a point. `cycle` lists them in the cyclic order
/// a, b, c, d, e, f, which is a 6-cycle of the dual graph.
struct HexagonLink {
  int point = 0;
  std::array<int, 6> cycle{};
  int role(Role r) const { return cycle[static_cast<std::size_t>(r)]; }
  std::optional<Role> role_of(int line) const;
};

/// One link per point, in point order. Roles: a west horizontal, b north
/// vertical, c northeast diagonal, d east horizontal, e south vertical,
/// f southwest diagonal.
std::vector<HexagonLink> hexagon_links(const DegenerationComplex& complex);

enum class SpanningMode { canonical, paper_fixture };

struct SpanningData {
  std::vector<int> tree_edges;  // sorted
  std::vector<Chord> chords;    // ordered by label 1..t
};

/// Canonical: breadth-first tree from the lowest vertex, edges taken in id
/// order; chords labelled in increasing line id, oriented low plane → high plane.
/// Paper fixture: the chord table shipped with the reference 3x3 labeling.
/// Throws InvalidInput for a disconnected graph or a chord table that does
/// not leave a spanning tree.
SpanningData spanning_data(const DualGraph& graph, SpanningMode mode);

/// Paper-fixture mode against an explicit chord table.
SpanningData spanning_data(const DualGraph& graph, const std::vector<Chord>& chords);

}  // namespace coxlab
