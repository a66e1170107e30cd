#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

// A bijection between the present vertices of two complexes. Both directions
// are stored as dense tables over the respective vertex universes, with
// kNoVertex for ids outside the domain.
class VertexBijection {
 public:
  VertexBijection() = default;

  // Throws InvalidIsomorphism unless the tables are mutually inverse.
  VertexBijection(std::vector<Vertex> forward, std::vector<Vertex> backward);

  // Builds the inverse table from `forward`; `target_universe` sizes it.
  static VertexBijection from_forward(std::vector<Vertex> forward,
                                      std::size_t target_universe);

  Vertex operator()(Vertex v) const { return forward_.at(v); }
  Vertex inverse(Vertex w) const { return backward_.at(w); }
  const std::vector<Vertex>& forward() const { return forward_; }
  const std::vector<Vertex>& backward() const { return backward_; }
  VertexBijection inverted() const { return {backward_, forward_}; }
  std::size_t size() const;

  Simplex apply(const Simplex& s) const;

  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> backward_;
};

// True iff `f` is a bijection of present vertices mapping facets onto facets.
bool is_isomorphism(const VertexBijection& f, const FacetComplex& a,
                    const FacetComplex& b);
bool is_isomorphism(const VertexBijection& f, const SimplicialComplex& k,
                    const SimplicialComplex& l);

// A complex given by its vertex set, its 1-skeleton and a family of vertex
// sets that determines it: either its facets or its minimal non-faces of size
// at least three. Both sides of a search must use the same kind of family.
struct ComplexDescription {
  std::size_t universe_size = 0;
  std::vector<Vertex> vertices;
  const std::vector<std::vector<Vertex>>* adjacency = nullptr;
  const std::vector<Simplex>* determining = nullptr;

  static ComplexDescription of(const FacetComplex& fc);
};

// Every isomorphism a -> b in lexicographic order, up to `limit`.
std::vector<VertexBijection> enumerate_isomorphisms(
    const ComplexDescription& a, const ComplexDescription& b,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Exact isomorphism search by backtracking with colour refinement.
//
// Vertices of `a` are assigned in ascending id order and candidates are tried
// in ascending order, so the witness returned is the lexicographically least
// isomorphism. Intended for desk-scale inputs (a few dozen vertices).
std::optional<VertexBijection> find_isomorphism(const FacetComplex& a,
                                                const FacetComplex& b);
std::optional<VertexBijection> find_isomorphism(const SimplicialComplex& k,
                                                const SimplicialComplex& l);

// Every isomorphism a -> b in lexicographic order, up to `limit`.
std::vector<VertexBijection> enumerate_isomorphisms(
    const FacetComplex& a, const FacetComplex& b,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// The map on simplices induced by a vertex bijection, as a relabelled complex.
SimplicialComplex relabel(const SimplicialComplex& k, const VertexBijection& f,
                          std::vector<std::string> target_labels);

}  // namespace dmt
