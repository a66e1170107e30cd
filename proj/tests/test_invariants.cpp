#include "doctest.h"
#include "dmt/corpus.hpp"
#include "dmt/invariants.hpp"
#include "dmt/morse.hpp"

using namespace dmt;

namespace {

std::vector<std::size_t> trimmed(std::vector<std::size_t> b) {
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

}  // namespace

TEST_CASE("simplices are contractible") {
  for (int n = 0; n <= 4; ++n) {
    const auto r = invariants(full_simplex(n));
    CHECK(r.euler == 1);
    CHECK(r.components == 1);
    CHECK(trimmed(r.betti_mod2) == std::vector<std::size_t>{1});
    CHECK(r.collapsible);
  }
  CHECK(invariants(full_simplex(3)).f_vector == std::vector<std::size_t>{4, 6, 4, 1});
}

TEST_CASE("spheres and cycles") {
  const auto c3 = invariants(cycle_graph(3));
  CHECK(c3.euler == 0);
  CHECK(c3.betti_mod2 == std::vector<std::size_t>{1, 1});
  CHECK_FALSE(c3.collapsible);
  CHECK_FALSE(greedy_collapse(cycle_graph(3)).has_value());

  const auto s2 = invariants(simplex_boundary(3));
  CHECK(s2.euler == 2);
  CHECK(s2.betti_mod2 == std::vector<std::size_t>{1, 0, 1});

  const auto s0 = invariants(simplex_boundary(1));
  CHECK(s0.components == 2);
  CHECK(s0.betti_mod2 == std::vector<std::size_t>{2});
}

TEST_CASE("morse complexes of small simplices") {
  const auto two = invariants(morse_complex(full_simplex(2)).materialize());
  CHECK(two.euler == -3);
  CHECK(trimmed(two.betti_mod2) == std::vector<std::size_t>{1, 4});

  const auto one = invariants(morse_complex(full_simplex(1)).materialize());
  CHECK(one.components == 2);
  CHECK(one.euler == 2);
}

TEST_CASE("two contractible morse complexes of non-isomorphic graphs") {
  const auto p3 = closure(std::vector<Simplex>{{0, 1}, {0, 2}});
  const auto paw = closure(std::vector<Simplex>{{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  CHECK(greedy_collapse(morse_complex(p3).materialize()).has_value());
  CHECK(greedy_collapse(morse_complex(paw).materialize()).has_value());
  CHECK(invariants(p3).euler == 1);
  CHECK(invariants(paw).euler == 0);
}

TEST_CASE("euler characteristic from betti numbers") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& k : complexes_on(n, false)) {
      const auto r = invariants(k);
      long alt = 0, sign = 1;
      for (std::size_t b : r.betti_mod2) {
        alt += sign * static_cast<long>(b);
        sign = -sign;
      }
      CHECK(alt == r.euler);
      CHECK(r.components == r.betti_mod2[0]);
      if (r.collapsible) CHECK(trimmed(r.betti_mod2) == std::vector<std::size_t>{1});
    }
}

TEST_CASE("collapse sequences") {
  for (const auto& k : connected_complexes(4)) {
    const auto seq = greedy_collapse(k);
    if (!seq) continue;
    CHECK(seq->size() * 2 + 1 == k.size());
    for (const auto& [free, coface] : *seq) CHECK(free.is_face_of(coface));
  }
}

TEST_CASE("trees") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : connected_graphs(n)) {
      if (g.f_vector()[1] != static_cast<std::size_t>(n - 1)) continue;
      CHECK(invariants(g).collapsible);
      const auto m = morse_complex(g);
      std::size_t largest = 0;
      for (const auto& f : m.facets()) largest = std::max(largest, f.size());
      CHECK(largest == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("boundary ranks") {
  const auto r = boundary_ranks_mod2(full_simplex(2));
  CHECK(r == std::vector<std::size_t>{0, 2, 1});
  CHECK(count_components(closure(std::vector<Simplex>{{0}, {1}, {2, 3}})) == 3);
}
