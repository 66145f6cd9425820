#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tmg/geometry.hpp"

namespace tmg {

struct Vertex {
  std::string id;
  Point position;
};

// Loop-free: u != v. The curve runs from u's position to v's position.
struct Edge {
  std::string id;
  std::string u;
  std::string v;
  Polyline curve;
};

// A topological multigraph: vertices at exact points, edges as polylines.
// Construction enforces the structural invariants (fresh ids, distinct vertex
// positions, no loops, curve endpoints matching the endpoint positions).
// General position is checked separately by validate_general_position.
class Drawing {
 public:
  Drawing() = default;

  void add_vertex(const std::string& id, Point position);
  void add_edge(const std::string& id, const std::string& u, const std::string& v,
                Polyline curve);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;  // throws UnknownVertex
  std::size_t edge_index(const std::string& id) const;    // throws UnknownEdge

  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> incident_edges(std::size_t v) const;
  std::size_t max_degree() const;

  bool edge_incident(std::size_t e, std::size_t v) const;
  std::vector<std::size_t> shared_endpoints(std::size_t e1, std::size_t e2) const;
  bool parallel(std::size_t e1, std::size_t e2) const;  // same endpoint set

  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  std::size_t multiplicity(const std::string& u, const std::string& v) const;
  std::size_t max_multiplicity() const;

  // Shortest cycle length in the underlying multigraph; nullopt when acyclic.
  // A parallel pair is a 2-cycle.
  std::optional<std::size_t> girth() const;

  std::string fresh_vertex_id(const std::string& base) const;
  std::string fresh_edge_id(const std::string& base) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_by_id_;
  std::unordered_map<std::string, std::size_t> edge_by_id_;
};

// Incident edges of v sorted by exact angular order of their first curve
// segment leaving v. Distinct directions are guaranteed in valid drawings.
std::vector<std::size_t> rotation_order(const Drawing& d, std::size_t v);

struct InducedDrawing {
  Drawing drawing;
  std::vector<std::size_t> vertex_map;  // new index -> original index
  std::vector<std::size_t> edge_map;
};

// Sub-drawing on a vertex subset: keeps edges with both endpoints inside,
// minus any explicitly excluded edges. Curves are inherited unchanged.
InducedDrawing induced_drawing(const Drawing& d, const std::vector<std::size_t>& vertex_subset,
                               const std::vector<std::size_t>& excluded_edges = {});

}  // namespace tmg
