#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/isomorphism.hpp"
#include "dmt/multigraph.hpp"

namespace dmt {

using Rng = std::mt19937_64;

// One connected simple graph per isomorphism class on exactly n vertices
// (n <= 6), by brute-force canonical forms.
std::vector<SimplicialComplex> connected_graphs(int n);

// `count` pairwise non-isomorphic connected graphs on n <= 7 vertices.
std::vector<SimplicialComplex> random_connected_graphs(int n, std::size_t count, Rng& rng);

// One complex per isomorphism class among complexes on exactly n <= 5
// vertices; all of them, or only the connected ones.
std::vector<SimplicialComplex> complexes_on(int n, bool connected_only);

// Connected complexes on 1..max_vertices vertices, up to isomorphism.
std::vector<SimplicialComplex> connected_complexes(int max_vertices);

// Connected multigraphs on 1..max_vertices (<= 5) vertices with at most
// `max_multiplicity` edges per parallel class, up to isomorphism.
std::vector<Multigraph> connected_multigraphs(int max_vertices, int max_multiplicity);

// A connected complex on 2..max_vertices vertices with random facets of
// dimension 1..3.
SimplicialComplex random_connected_complex(int max_vertices, Rng& rng);

// A uniformly random vertex permutation with shuffled labels; returns the
// map and the relabelled complex.
std::pair<VertexBijection, SimplicialComplex> random_relabel(const SimplicialComplex& k,
                                                             Rng& rng);

// Same for multigraphs, permuting vertices and edges.
Multigraph random_relabel(const Multigraph& g, Rng& rng);

// Exhaustive over vertex permutations; for small multigraphs.
bool multigraphs_isomorphic(const Multigraph& g, const Multigraph& h);

}  // namespace dmt
