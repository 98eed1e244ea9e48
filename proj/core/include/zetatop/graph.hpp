#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zetatop {

enum class VertexKind { exceptional, branch_arrow, form_arrow };

std::string_view to_string(VertexKind k);
std::optional<VertexKind> parse_vertex_kind(std::string_view s);

// A component of the total transform: an exceptional curve, the strict
// transform of a branch of f, or the strict transform of a curve in div(omega).
struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::exceptional;
  std::int64_t N = 1;   // multiplicity of pi^* f
  std::int64_t nu = 1;  // 1 + multiplicity of pi^* omega
  int genus = 0;

  bool is_arrow() const { return kind != VertexKind::exceptional; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Intersection point of two components; order > 1 marks a cyclic quotient
// singularity of a Q-resolution.
struct Edge {
  std::string a;
  std::string b;
  std::int64_t order = 1;

  std::string id() const { return a + "--" + b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Quotient singular point lying on the open stratum of an exceptional curve.
struct QPoint {
  std::string vertex;
  std::int64_t order = 2;
  friend bool operator==(const QPoint&, const QPoint&) = default;
};

// Decorated dual resolution graph. Arrows are vertices with exactly one
// incident edge, so every pair stratum is an edge.
class ResGraph {
 public:
  ResGraph() = default;
  ResGraph(std::string label, std::vector<Vertex> vertices, std::vector<Edge> edges,
           std::vector<QPoint> qpoints = {});

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<QPoint>& qpoints() const { return qpoints_; }

  // Exceptional cycles are rejected by validate() unless this is set.
  bool allow_cycles() const { return allow_cycles_; }
  void set_allow_cycles(bool v) { allow_cycles_ = v; }

  void add_vertex(Vertex v);
  void add_edge(Edge e);
  void add_qpoint(QPoint q);
  // Drops the vertex and every incident edge and qpoint.
  void remove_vertex(std::string_view id);
  Vertex& vertex_mut(std::string_view id);

  bool contains(std::string_view id) const;
  const Vertex& vertex(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;
  // Indices into edges() of the edges incident to a vertex.
  std::vector<std::size_t> incident_edges(std::string_view id) const;
  std::vector<std::string> neighbors(std::string_view id) const;
  std::size_t degree(std::string_view id) const;

  std::size_t exceptional_count() const;
  // No edge of order > 1 and no qpoints.
  bool is_ordinary() const;

 private:
  void reindex();

  std::string label_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<QPoint> qpoints_;
  std::map<std::string, std::size_t, std::less<>> index_;
  bool allow_cycles_ = false;
};

// Empty iff all structural invariants hold.
std::vector<std::string> validate(const ResGraph& g);
// Throws ValidationError listing every violation.
void require_valid(const ResGraph& g);

// Euler characteristic of the open stratum of an exceptional vertex:
// 2 - 2*genus - (incident edges) - (qpoints on it).
std::int64_t chi_open(const ResGraph& g, std::string_view v);

// Same count restricted to components of f (form arrows, N = 0, ignored).
std::int64_t chi_open_of_f(const ResGraph& g, std::string_view v);

// Graph file in JSON syntax.
// Throws ParseError on malformed documents; with check_invariants also
// throws ValidationError when validate() reports violations.
ResGraph parse_graph(std::string_view json_text, bool check_invariants = true);
std::string serialize_graph(const ResGraph& g);

// Isomorphism-invariant string: labels are (kind, N, nu, genus), edge orders
// and qpoint orders. Equal strings iff the decorated graphs are isomorphic
// (exact for forests, which covers every plane-curve graph).
std::string canonical_form(const ResGraph& g);

// Plain-text adjacency dump.
std::string adjacency_dump(const ResGraph& g);

}  // namespace zetatop
