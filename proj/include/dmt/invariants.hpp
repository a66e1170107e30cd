#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {

struct InvariantReport {
  std::vector<std::size_t> f_vector;
  long euler = 0;
  std::size_t components = 0;
  std::vector<std::size_t> betti_mod2;
  bool collapsible = false;  // greedy collapse reached a point
};

InvariantReport invariants(const SimplicialComplex& k);

// Rank of each boundary map over Z/2; rank[d] is the rank of d-chains ->
// (d-1)-chains, rank[0] = 0.
std::vector<std::size_t> boundary_ranks_mod2(const SimplicialComplex& k);

std::size_t count_components(const SimplicialComplex& k);

// An elementary collapse removes a free face together with its coface.
using Collapse = std::pair<Simplex, Simplex>;

// Repeatedly removes the lexicographically least free face. Returns the
// sequence when a single vertex remains, nothing otherwise.
std::optional<std::vector<Collapse>> greedy_collapse(const SimplicialComplex& k);

}  // namespace dmt
