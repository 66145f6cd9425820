#include "tmg/drawing.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "tmg/error.hpp"

namespace tmg {

void Drawing::add_vertex(const std::string& id, Point position) {
  if (vertex_by_id_.count(id))
    fail(ErrorCode::InvariantViolation, "duplicate vertex id '" + id + "'");
  for (const auto& v : vertices_) {
    if (v.position == position)
      fail(ErrorCode::InvariantViolation,
           "vertices '" + v.id + "' and '" + id + "' share a location");
  }
  vertex_by_id_[id] = vertices_.size();
  vertices_.push_back(Vertex{id, std::move(position)});
}

void Drawing::add_edge(const std::string& id, const std::string& u, const std::string& v,
                       Polyline curve) {
  if (edge_by_id_.count(id)) fail(ErrorCode::InvariantViolation, "duplicate edge id '" + id + "'");
  if (u == v) fail(ErrorCode::InvariantViolation, "loop edge '" + id + "' at vertex '" + u + "'");
  const std::size_t ui = vertex_index(u);
  const std::size_t vi = vertex_index(v);
  if (curve.front() != vertices_[ui].position || curve.back() != vertices_[vi].position)
    fail(ErrorCode::InvariantViolation,
         "curve of edge '" + id + "' does not run between its endpoints");
  edge_by_id_[id] = edges_.size();
  edges_.push_back(Edge{id, u, v, std::move(curve)});
}

std::optional<std::size_t> Drawing::find_vertex(const std::string& id) const {
  const auto it = vertex_by_id_.find(id);
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Drawing::find_edge(const std::string& id) const {
  const auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t Drawing::vertex_index(const std::string& id) const {
  const auto idx = find_vertex(id);
  if (!idx) fail(ErrorCode::UnknownVertex, "no vertex '" + id + "'");
  return *idx;
}

std::size_t Drawing::edge_index(const std::string& id) const {
  const auto idx = find_edge(id);
  if (!idx) fail(ErrorCode::UnknownEdge, "no edge '" + id + "'");
  return *idx;
}

std::size_t Drawing::degree(std::size_t v) const {
  const std::string& id = vertices_[v].id;
  std::size_t deg = 0;
  for (const auto& e : edges_) deg += (e.u == id) + (e.v == id);
  return deg;
}

std::vector<std::size_t> Drawing::incident_edges(std::size_t v) const {
  const std::string& id = vertices_[v].id;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == id || edges_[i].v == id) out.push_back(i);
  }
  return out;
}

std::size_t Drawing::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Drawing::edge_incident(std::size_t e, std::size_t v) const {
  const std::string& id = vertices_[v].id;
  return edges_[e].u == id || edges_[e].v == id;
}

std::vector<std::size_t> Drawing::shared_endpoints(std::size_t e1, std::size_t e2) const {
  std::vector<std::size_t> out;
  for (const std::string* a : {&edges_[e1].u, &edges_[e1].v}) {
    if (*a == edges_[e2].u || *a == edges_[e2].v) out.push_back(vertex_index(*a));
  }
  return out;
}

bool Drawing::parallel(std::size_t e1, std::size_t e2) const {
  const Edge& a = edges_[e1];
  const Edge& b = edges_[e2];
  return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
}

std::size_t Drawing::multiplicity(std::size_t u, std::size_t v) const {
  if (u == v) fail(ErrorCode::DomainError, "multiplicity of a vertex with itself");
  const std::string& a = vertices_[u].id;
  const std::string& b = vertices_[v].id;
  std::size_t count = 0;
  for (const auto& e : edges_) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ++count;
  }
  return count;
}

std::size_t Drawing::multiplicity(const std::string& u, const std::string& v) const {
  return multiplicity(vertex_index(u), vertex_index(v));
}

std::size_t Drawing::max_multiplicity() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, multiplicity(i, j));
    }
  }
  return best;
}

std::optional<std::size_t> Drawing::girth() const {
  if (max_multiplicity() >= 2) return 2;
  // Simple graph now: shortest cycle via per-edge removal + BFS distance.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t skip = 0; skip < edges_.size(); ++skip) {
    const std::size_t src = vertex_index(edges_[skip].u);
    const std::size_t dst = vertex_index(edges_[skip].v);
    std::vector<std::size_t> dist(vertices_.size(), std::numeric_limits<std::size_t>::max());
    std::deque<std::size_t> queue;
    dist[src] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (e == skip || !edge_incident(e, at)) continue;
        const std::size_t other =
            vertex_index(edges_[e].u) == at ? vertex_index(edges_[e].v) : vertex_index(edges_[e].u);
        if (dist[other] > dist[at] + 1) {
          dist[other] = dist[at] + 1;
          queue.push_back(other);
        }
      }
    }
    if (dist[dst] != std::numeric_limits<std::size_t>::max())
      best = std::min(best, dist[dst] + 1);
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::string Drawing::fresh_vertex_id(const std::string& base) const {
  if (!vertex_by_id_.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    const std::string candidate = base + "_" + std::to_string(k);
    if (!vertex_by_id_.count(candidate)) return candidate;
  }
}

std::string Drawing::fresh_edge_id(const std::string& base) const {
  if (!edge_by_id_.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    const std::string candidate = base + "_" + std::to_string(k);
    if (!edge_by_id_.count(candidate)) return candidate;
  }
}

std::vector<std::size_t> rotation_order(const Drawing& d, std::size_t v) {
  const Point& origin = d.vertices()[v].position;
  auto incident = d.incident_edges(v);
  auto direction_at = [&](std::size_t e) {
    const Edge& edge = d.edges()[e];
    const auto& pts = edge.curve.points();
    const Point& next = (pts.front() == origin) ? pts[1] : pts[pts.size() - 2];
    return Point{next.x - origin.x, next.y - origin.y};
  };
  std::stable_sort(incident.begin(), incident.end(), [&](std::size_t a, std::size_t b) {
    return angle_less(direction_at(a), direction_at(b));
  });
  return incident;
}

InducedDrawing induced_drawing(const Drawing& d, const std::vector<std::size_t>& vertex_subset,
                               const std::vector<std::size_t>& excluded_edges) {
  InducedDrawing out;
  std::vector<bool> in_subset(d.vertex_count(), false);
  for (const std::size_t v : vertex_subset) in_subset[v] = true;
  std::vector<bool> excluded(d.edge_count(), false);
  for (const std::size_t e : excluded_edges) excluded[e] = true;
  for (const std::size_t v : vertex_subset) {
    out.drawing.add_vertex(d.vertices()[v].id, d.vertices()[v].position);
    out.vertex_map.push_back(v);
  }
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (excluded[e]) continue;
    const Edge& edge = d.edges()[e];
    if (!in_subset[d.vertex_index(edge.u)] || !in_subset[d.vertex_index(edge.v)]) continue;
    out.drawing.add_edge(edge.id, edge.u, edge.v, edge.curve);
    out.edge_map.push_back(e);
  }
  return out;
}

}  // namespace tmg
