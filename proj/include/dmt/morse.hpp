#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/isomorphism.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

using CellId = std::int32_t;

// A cell of a simplicial complex or multigraph. For a multigraph edge the
// support is its pair of endpoints and `edge` names which parallel copy.
struct Cell {
  Simplex support;
  EdgeId edge = -1;

  int dim() const { return edge >= 0 ? 1 : support.dim(); }
};

// A regular pair (source, target) with source an immediate face of target,
// i.e. a primitive discrete Morse function. Cells are ids into a HasseDiagram.
struct RegularPair {
  CellId source = -1;
  CellId target = -1;
  int index = 0;  // dim(source)

  friend bool operator==(const RegularPair&, const RegularPair&) = default;
  friend auto operator<=>(const RegularPair& a, const RegularPair& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.target <=> b.target;
  }
};

// Hasse diagram of the face poset (cells and cover relations).
//
// Cell ids follow the canonical order: for a simplicial complex, the
// lexicographic simplex order (so cell i is K.simplex(i)); for a multigraph,
// vertices first, then edges. Covers are sorted by (index, source, target),
// which makes cover position the pair id used everywhere else.
class HasseDiagram {
 public:
  HasseDiagram() = default;
  static HasseDiagram of(const SimplicialComplex& k);
  static HasseDiagram of(const Multigraph& g);

  std::size_t num_cells() const { return cells_.size(); }
  const Cell& cell(CellId c) const { return cells_[c]; }
  int dim(CellId c) const { return cells_[c].dim(); }
  const std::vector<CellId>& faces(CellId c) const { return faces_[c]; }
  const std::vector<CellId>& cofaces(CellId c) const { return cofaces_[c]; }

  const std::vector<RegularPair>& covers() const { return covers_; }
  std::optional<std::size_t> pair_id(const RegularPair& p) const;

  // Cell id of a vertex set; for multigraphs only vertices resolve.
  std::optional<CellId> cell_of(const Simplex& s) const;
  std::optional<CellId> edge_cell(EdgeId e) const;

  bool is_multigraph() const { return multigraph_; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

  // "a,b,c" for simplices; the edge id for multigraph edges.
  std::string describe(CellId c) const;

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<CellId>> faces_, cofaces_;
  std::vector<RegularPair> covers_;
  std::vector<std::string> vertex_labels_, edge_labels_;
  bool multigraph_ = false;
};

using PairSet = std::span<const RegularPair>;

std::vector<RegularPair> primitive_pairs(const SimplicialComplex& k);
std::vector<RegularPair> primitive_pairs(const Multigraph& g);

// No cell occurs in two distinct pairs.
bool is_matching(PairSet pairs);

// No closed non-stationary V-path in any index. Throws PreconditionError when
// `pairs` is not a matching.
bool is_acyclic(const HasseDiagram& h, PairSet pairs);

// {p, q} is an acyclic matching.
bool compatible(const HasseDiagram& h, const RegularPair& p, const RegularPair& q);

// A V-path (f-path) of one index. `closed` paths list each pair once; the
// successor of the last step is the first.
struct FPath {
  int index = 0;
  std::vector<RegularPair> steps;
  bool closed = false;
};

// Every f-cycle supported by `pairs`: closed paths whose pairs form a matching,
// each reported once starting from its least pair.
std::vector<FPath> find_f_cycles(const HasseDiagram& h, PairSet pairs);

struct MorseBudget {
  std::size_t max_facets = 1'000'000;
  std::chrono::duration<double> max_seconds{60.0};

  // Honours MORSE_BUDGET_SECONDS when set.
  static MorseBudget from_environment();
};

// The discrete Morse complex: vertices are the regular pairs (ids = positions
// in hasse().covers()), simplices are acyclic matchings.
//
// Always carries the compatibility graph and the minimal non-faces with at
// least three pairs (the chordless f-cycles); together they determine the
// complex. The facet list is enumerated only on request, under a budget.
class MorseComplex {
 public:
  MorseComplex() = default;
  MorseComplex(HasseDiagram hasse, std::vector<std::vector<Vertex>> compatibility,
               std::vector<Simplex> circuits,
               std::optional<FacetComplex> complex = std::nullopt);

  const HasseDiagram& hasse() const { return hasse_; }
  std::size_t num_pairs() const { return hasse_.covers().size(); }
  const RegularPair& pair(std::size_t id) const { return hasse_.covers()[id]; }
  std::optional<std::size_t> pair_id(const RegularPair& p) const {
    return hasse_.pair_id(p);
  }

  const std::vector<std::vector<Vertex>>& compatibility() const { return compat_; }
  bool compatible(std::size_t p, std::size_t q) const;
  const std::vector<Simplex>& circuits() const { return circuits_; }

  // True iff the pair ids form an acyclic matching.
  bool is_simplex(const Simplex& pair_ids) const;

  bool has_facets() const { return complex_.has_value(); }
  // Throw PreconditionError when the facets were not enumerated.
  const FacetComplex& complex() const;
  const std::vector<Simplex>& facets() const { return complex().facets(); }
  int dim() const { return complex().dim(); }

  // Description by minimal non-faces, for isomorphism search.
  ComplexDescription description() const;

  // Zero-padded names "p00".."pNN"; lexicographic order equals id order.
  std::vector<std::string> pair_labels() const;
  std::string describe(std::size_t id) const;

  SimplicialComplex materialize(std::size_t max_simplices = 5'000'000) const {
    return complex().materialize(pair_labels(), max_simplices);
  }

 private:
  HasseDiagram hasse_;
  std::vector<std::vector<Vertex>> compat_;
  std::vector<Simplex> circuits_;
  std::optional<FacetComplex> complex_;
};

// Enumerates maximal acyclic matchings by backtracking over the sorted covers
// with incremental per-index cycle detection. Throws BudgetExceeded.
MorseComplex morse_complex(const SimplicialComplex& k, const MorseBudget& budget = {});
MorseComplex morse_complex(const Multigraph& g, const MorseBudget& budget = {});
MorseComplex morse_complex(HasseDiagram h, const MorseBudget& budget = {});

// The same complex without its facet list: pair table, compatibility graph
// and circuits only. Cheap even where the facet count is in the millions.
MorseComplex morse_structure(const SimplicialComplex& k, const MorseBudget& budget = {});
MorseComplex morse_structure(const Multigraph& g, const MorseBudget& budget = {});
MorseComplex morse_structure(HasseDiagram h, const MorseBudget& budget = {});

// Chordless f-cycles over all primitive pairs: every set of pairs that is a
// minimal non-face of the Morse complex and has more than two elements.
std::vector<Simplex> chordless_f_cycles(const HasseDiagram& h,
                                        const MorseBudget& budget = {});

// Bijections between the pair sets of two Morse complexes that are
// simplicial isomorphisms, lexicographically least first.
std::optional<VertexBijection> find_isomorphism(const MorseComplex& a,
                                                const MorseComplex& b);
std::vector<VertexBijection> enumerate_isomorphisms(
    const MorseComplex& a, const MorseComplex& b,
    std::size_t limit = std::numeric_limits<std::size_t>::max());
bool is_isomorphism(const VertexBijection& f, const MorseComplex& a,
                    const MorseComplex& b);

// Empty triangles of M: 3-sets of pairwise compatible, jointly incompatible
// pairs (pair ids, ascending).
std::vector<std::array<std::size_t, 3>> minimal_f_cycles(const MorseComplex& m);

// Minimal f-cycles sharing exactly one regular pair.
bool adjacent_cycles(const std::array<std::size_t, 3>& a,
                     const std::array<std::size_t, 3>& b);

// Directed multigraph without loops.
struct Arc {
  Vertex tail;
  Vertex head;
  EdgeId edge = -1;  // undirected edge this arc came from, if any
};

struct DirectedGraph {
  std::size_t num_vertices = 0;
  std::vector<Arc> arcs;
};

// d(G): one arc in each direction per edge. Arc 2e runs from the lower to
// the higher endpoint of e, arc 2e+1 the other way.
DirectedGraph double_graph(const Multigraph& g);

// Complex of directed forests: vertices are arc indices, simplices are arc
// sets in which every vertex has at most one incoming arc and no directed
// cycle occurs. Enumerated by choosing a parent arc (or none) per vertex.
FacetComplex directed_forest_complex(const DirectedGraph& d);

// The arc of d(G) identified with the regular pair (v, e): the arc along e
// into v from the other end, so that matchings become in-degree bounds.
std::size_t arc_for_pair(const Multigraph& g, Vertex source, EdgeId edge);

struct ForestComparison {
  std::size_t pairs = 0;
  std::size_t arcs = 0;
  std::size_t morse_facets = 0;
  std::size_t forest_facets = 0;
  bool equal = false;
};

// Maps the facets of M(G) to arc sets of d(G) and compares them with the
// facets of the directed forest complex.
ForestComparison compare_with_forests(const Multigraph& g, const MorseBudget& budget = {});

}  // namespace dmt
