#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/isomorphism.hpp"
#include "dmt/morse.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

// An isomorphism of Morse complexes, as a bijection of pair ids. Pair ids are
// positions in HasseDiagram::of(X).covers() for the respective X.
using MorseIso = VertexBijection;

// The map M(h) induced by a simplicial isomorphism h: K -> L, sending the
// pair (s, t) to (h s, h t). Throws InvalidIsomorphism when h is not one.
MorseIso morse_map(const SimplicialComplex& k, const SimplicialComplex& l,
                   const VertexBijection& h);

struct MultigraphIso {
  VertexBijection vertices;
  VertexBijection edges;
};

bool is_isomorphism(const MultigraphIso& f, const Multigraph& g, const Multigraph& h);

MorseIso morse_map(const Multigraph& g, const Multigraph& h, const MultigraphIso& f);

// Partition of the vertices by the relation "equal, or non-adjacent with
// equal links", and the complex spanned by the class representatives.
struct QuotientComplex {
  std::vector<Vertex> projection;            // vertex -> representative
  std::vector<std::vector<Vertex>> classes;  // ascending, by representative
  FacetComplex quotient;                     // on the representatives

  std::size_t num_classes() const { return classes.size(); }
};

// Representatives are the least member of each class.
QuotientComplex quotient(const FacetComplex& k);
QuotientComplex quotient(const SimplicialComplex& k);

// The map v~ -> f(v)~. Throws InvalidIsomorphism when f is not an
// isomorphism a -> b, TheoremContradiction when the induced map is not
// well defined or not an isomorphism of quotients.
VertexBijection induced_quotient_iso(const VertexBijection& f, const FacetComplex& a,
                                     const FacetComplex& b, const QuotientComplex& qa,
                                     const QuotientComplex& qb);
VertexBijection induced_quotient_iso(const VertexBijection& f, const FacetComplex& a,
                                     const FacetComplex& b);

// Pairs (v, e), (v', e') with v = v' and e, e' distinct parallel edges.
bool literally_parallel(const MorseComplex& m, const Multigraph& g,
                        std::size_t p, std::size_t q);

// The link characterization: p, q incompatible with equal links in M(G).
// Needs the facets of `m`. Throws HypothesisViolation when G has fewer than
// three vertices or is disconnected.
bool parallel_pairs(const MorseComplex& m, const Multigraph& g,
                    std::size_t p, std::size_t q);

struct Simplification {
  SimplicialComplex graph;        // on the vertices of G, same labels
  std::vector<Simplex> edge_map;  // edge of G -> its edge in sG
};

Simplification simplify(const Multigraph& g);

// f(v) = s(F(v, e)) for the least edge e at v. Every incident edge is
// checked to agree and the result is verified to be an isomorphism.
//
// Throws HypothesisViolation unless g, h are connected graphs that are not
// cycles, InvalidIsomorphism when F is not an isomorphism M(g) -> M(h), and
// TheoremContradiction (naming the disagreeing edges) otherwise.
VertexBijection reconstruct_graph_iso(const SimplicialComplex& g,
                                      const SimplicialComplex& h, const MorseIso& f);

// n when h is also a cycle on n vertices, judged by |V| = |E|,
// connectedness and the absence of leaves. Throws HypothesisViolation when g
// is not a cycle.
std::optional<int> reconstruct_cycle(const SimplicialComplex& g,
                                     const SimplicialComplex& h);

// Vertex map from the simplified graphs plus an edge map that pairs the
// parallel classes in ascending order. Throws TheoremContradiction when a
// class cardinality is not preserved.
MultigraphIso reconstruct_multigraph_iso(const Multigraph& g, const Multigraph& h,
                                         const MorseIso& f,
                                         const MorseBudget& budget = {});

// An index-0 pair sent to a pair of higher index, by F or by its inverse.
struct IndexAnomaly {
  bool inverse = false;   // found on F^{-1}
  std::size_t pair = 0;   // index-0 pair id on the domain side
  std::size_t image = 0;
  int image_index = 0;
};

std::optional<IndexAnomaly> detect_index_anomaly(const SimplicialComplex& k,
                                                 const SimplicialComplex& l,
                                                 const MorseIso& f);

// Vertex isomorphism K -> L read off F. When F mixes indices both sides must
// be boundaries of the same simplex and any isomorphism is returned. When
// the 1-skeleton is a cycle the map comes from walking both cycles unless F
// itself is induced by a vertex map. Otherwise F is checked to equal M(f)
// on every pair, dimension by dimension.
VertexBijection reconstruct_complex_iso(const SimplicialComplex& k,
                                        const SimplicialComplex& l, const MorseIso& f,
                                        const MorseBudget& budget = {});

}  // namespace dmt
