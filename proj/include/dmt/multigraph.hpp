#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

using EdgeId = std::int32_t;

// Loop-free multigraph (V, E, boundary). Every vertex in [0, num_vertices())
// is present; edges are ids in [0, num_edges()) with boundary u < v.
class Multigraph {
 public:
  Multigraph() = default;

  // Throws MalformedInput on loops, out-of-range endpoints or repeated labels.
  Multigraph(std::vector<std::string> vertex_labels,
             std::vector<std::string> edge_labels,
             std::vector<std::pair<Vertex, Vertex>> boundary);

  // Unlabelled convenience form: vertices "0".., edges "e0"...
  Multigraph(int num_vertices, std::vector<std::pair<Vertex, Vertex>> boundary);

  std::size_t num_vertices() const { return vertex_labels_.size(); }
  std::size_t num_edges() const { return boundary_.size(); }
  std::pair<Vertex, Vertex> boundary(EdgeId e) const { return boundary_[e]; }
  Vertex other_end(EdgeId e, Vertex v) const;

  const std::string& vertex_label(Vertex v) const { return vertex_labels_[v]; }
  const std::string& edge_label(EdgeId e) const { return edge_labels_[e]; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }

  // E_G(u, v): parallel class, ascending edge ids.
  std::vector<EdgeId> parallel_class(Vertex u, Vertex v) const;
  bool parallel(EdgeId a, EdgeId b) const { return boundary_[a] == boundary_[b]; }
  bool is_simple() const;

  // Incident edges of v, ascending.
  std::vector<EdgeId> incident(Vertex v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
  std::vector<std::pair<Vertex, Vertex>> boundary_;
};

bool is_connected(const Multigraph& g);

// A 1-dimensional complex viewed as a simple multigraph; edges follow the
// complex's canonical edge order and are labelled "u-v".
Multigraph as_multigraph(const SimplicialComplex& graph);

}  // namespace dmt
