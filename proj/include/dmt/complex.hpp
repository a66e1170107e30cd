#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmt/simplex.hpp"

namespace dmt {

class SimplicialComplex;

// A complex described only by its maximal simplices. This is the storage
// format for Morse complexes, whose full face sets grow exponentially.
//
// Vertices are ids in [0, universe_size()); a vertex is present when some
// facet contains it. The 1-skeleton adjacency is kept alongside the facets.
class FacetComplex {
 public:
  FacetComplex() = default;

  // Normalizes: drops duplicates and non-maximal members, sorts facets.
  FacetComplex(std::size_t universe_size, std::vector<Simplex> facets);

  // Trusted: `facets` are already maximal, distinct and sorted. When
  // `adjacency` is given it must equal the 1-skeleton of the facets.
  static FacetComplex from_maximal(
      std::size_t universe_size, std::vector<Simplex> facets,
      std::optional<std::vector<std::vector<Vertex>>> adjacency = std::nullopt);

  std::size_t universe_size() const { return universe_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }
  bool empty() const { return facets_.empty(); }
  int dim() const;

  std::vector<Vertex> vertices() const;
  std::size_t num_vertices() const { return vertices().size(); }
  bool has_vertex(Vertex v) const;

  // True iff `s` lies in some facet.
  bool contains(const Simplex& s) const;

  // Facets of lk(v); equal links have equal facet lists.
  std::vector<Simplex> link_facets(Vertex v) const;

  // Full face set. Throws BudgetExceeded past `max_simplices`.
  SimplicialComplex materialize(std::vector<std::string> labels,
                                std::size_t max_simplices = 5'000'000) const;

  friend bool operator==(const FacetComplex& a, const FacetComplex& b) {
    return a.universe_ == b.universe_ && a.facets_ == b.facets_;
  }

 private:
  void build_adjacency();

  std::size_t universe_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Vertex>> adj_;
};

// A finite simplicial complex with every face stored explicitly.
//
// Vertex ids index a label table (the vertex universe). Simplices are kept in
// lexicographic order of their vertex sequences, which is the canonical order
// used for every tie-break in the library.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int dim() const;

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
  bool contains(const Simplex& s) const { return index_.contains(s); }
  std::optional<std::size_t> index_of(const Simplex& s) const;

  const std::vector<Simplex>& facets() const { return facets_; }
  std::vector<Simplex> simplices_of_dim(int d) const;

  // Present vertices in ascending order.
  std::vector<Vertex> vertices() const;
  std::size_t num_vertices() const;
  std::size_t universe_size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find_label(const std::string& label) const;

  // Counts per dimension, f_vector()[d] = number of d-simplices.
  std::vector<std::size_t> f_vector() const;

  // Neighbours of each vertex in the 1-skeleton (indexed by vertex id).
  std::vector<std::vector<Vertex>> adjacency() const;

  FacetComplex facet_complex() const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_ && a.labels_ == b.labels_;
  }

 private:
  friend SimplicialComplex closure(std::span<const Simplex>,
                                   std::vector<std::string>);

  std::vector<std::string> labels_;
  std::vector<Simplex> simplices_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
  std::vector<Simplex> facets_;
};

// Smallest face-closed complex containing `faces`. When `labels` is empty the
// vertex universe is 0..max id with decimal labels.
SimplicialComplex closure(std::span<const Simplex> faces,
                          std::vector<std::string> labels = {});

SimplicialComplex skeleton(const SimplicialComplex& k, int dim);

// lk(sigma, K); throws NotAFace when sigma is not in K.
SimplicialComplex link(const Simplex& sigma, const SimplicialComplex& k);

bool is_connected(const SimplicialComplex& k);

// m when K is isomorphic to the boundary of the m-simplex (m >= 1).
std::optional<int> is_boundary_simplex(const SimplicialComplex& k);

// True when K is a simple graph isomorphic to a cycle C_n, n >= 3.
bool is_cycle_graph(const SimplicialComplex& k);

// Standard complexes, vertices labelled 0..n.
SimplicialComplex full_simplex(int n);
SimplicialComplex simplex_boundary(int n);
SimplicialComplex cycle_graph(int n);
SimplicialComplex path_graph(int n);
SimplicialComplex graph_from_edges(int num_vertices,
                                   std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace dmt
