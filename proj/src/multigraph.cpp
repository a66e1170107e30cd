#include "dmt/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dmt/errors.hpp"

namespace dmt {

Multigraph::Multigraph(std::vector<std::string> vertex_labels,
                       std::vector<std::string> edge_labels,
                       std::vector<std::pair<Vertex, Vertex>> boundary)
    : vertex_labels_(std::move(vertex_labels)),
      edge_labels_(std::move(edge_labels)),
      boundary_(std::move(boundary)) {
  if (edge_labels_.size() != boundary_.size())
    throw MalformedInput("edge label count differs from edge count");
  const auto n = static_cast<Vertex>(vertex_labels_.size());
  for (auto& [u, v] : boundary_) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw MalformedInput("edge endpoint outside the vertex set");
    if (u == v) throw MalformedInput("loop edge");
    if (u > v) std::swap(u, v);
  }
  if (std::set<std::string>(vertex_labels_.begin(), vertex_labels_.end()).size() !=
      vertex_labels_.size())
    throw MalformedInput("duplicate vertex label");
  if (std::set<std::string>(edge_labels_.begin(), edge_labels_.end()).size() !=
      edge_labels_.size())
    throw MalformedInput("duplicate edge id");
}

Multigraph::Multigraph(int num_vertices,
                       std::vector<std::pair<Vertex, Vertex>> boundary) {
  std::vector<std::string> vl(static_cast<std::size_t>(num_vertices));
  for (int i = 0; i < num_vertices; ++i) vl[i] = std::to_string(i);
  std::vector<std::string> el(boundary.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) el[i] = "e" + std::to_string(i);
  *this = Multigraph(std::move(vl), std::move(el), std::move(boundary));
}

Vertex Multigraph::other_end(EdgeId e, Vertex v) const {
  auto [a, b] = boundary_[e];
  return a == v ? b : a;
}

std::vector<EdgeId> Multigraph::parallel_class(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(boundary_.size()); ++e)
    if (boundary_[e] == std::pair{u, v}) out.push_back(e);
  return out;
}

bool Multigraph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen(boundary_.begin(), boundary_.end());
  return seen.size() == boundary_.size();
}

std::vector<EdgeId> Multigraph::incident(Vertex v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(boundary_.size()); ++e)
    if (boundary_[e].first == v || boundary_[e].second == v) out.push_back(e);
  return out;
}

bool is_connected(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.boundary(static_cast<EdgeId>(e));
    Vertex a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Multigraph as_multigraph(const SimplicialComplex& graph) {
  if (graph.dim() > 1) throw PreconditionError("complex is not a graph");
  // Compact the present vertices so every multigraph vertex exists.
  const auto verts = graph.vertices();
  std::vector<Vertex> compact(graph.universe_size(), kNoVertex);
  std::vector<std::string> vl;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    compact[verts[i]] = static_cast<Vertex>(i);
    vl.push_back(graph.label(verts[i]));
  }
  std::vector<std::string> el;
  std::vector<std::pair<Vertex, Vertex>> boundary;
  for (const auto& s : graph.simplices())
    if (s.size() == 2) {
      boundary.emplace_back(compact[s[0]], compact[s[1]]);
      el.push_back(graph.label(s[0]) + "-" + graph.label(s[1]));
    }
  return Multigraph(std::move(vl), std::move(el), std::move(boundary));
}

}  // namespace dmt
