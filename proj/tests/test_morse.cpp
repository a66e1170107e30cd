#include <algorithm>
#include <functional>

#include "doctest.h"
#include "dmt/corpus.hpp"
#include "dmt/errors.hpp"
#include "dmt/morse.hpp"

using namespace dmt;

namespace {

RegularPair pair_of(const HasseDiagram& h, const Simplex& s, const Simplex& t) {
  const CellId a = *h.cell_of(s);
  const CellId b = *h.cell_of(t);
  return {a, b, h.dim(a)};
}

// Modified Hasse digraph: unmatched covers point down, matched covers up.
// A matching is acyclic iff this digraph has no directed cycle.
bool oracle_simplex(const HasseDiagram& h, const std::vector<RegularPair>& pairs) {
  std::vector<int> used(h.num_cells(), 0);
  for (const auto& p : pairs) {
    if (used[p.source]++ || used[p.target]++) return false;
  }
  std::vector<std::vector<CellId>> out(h.num_cells());
  for (const auto& c : h.covers()) {
    const bool matched = std::find(pairs.begin(), pairs.end(), c) != pairs.end();
    if (matched)
      out[c.source].push_back(c.target);
    else
      out[c.target].push_back(c.source);
  }
  std::vector<int> colour(h.num_cells(), 0);
  std::function<bool(CellId)> cyclic = [&](CellId v) {
    colour[v] = 1;
    for (CellId w : out[v]) {
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && cyclic(w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (CellId v = 0; v < static_cast<CellId>(h.num_cells()); ++v)
    if (colour[v] == 0 && cyclic(v)) return false;
  return true;
}

std::vector<RegularPair> pick(const HasseDiagram& h, unsigned mask) {
  std::vector<RegularPair> out;
  for (std::size_t i = 0; i < h.covers().size(); ++i)
    if (mask >> i & 1u) out.push_back(h.covers()[i]);
  return out;
}

Simplex ids_of(unsigned mask) {
  std::vector<Vertex> v;
  for (Vertex i = 0; i < 32; ++i)
    if (mask >> i & 1u) v.push_back(i);
  return Simplex(v);
}

std::vector<SimplicialComplex> small_complexes() {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= 4; ++n)
    for (auto& k : complexes_on(n, false))
      if (HasseDiagram::of(k).covers().size() <= 12) out.push_back(std::move(k));
  return out;
}

}  // namespace

TEST_CASE("hasse diagrams") {
  const auto d1 = full_simplex(1);
  const auto h1 = HasseDiagram::of(d1);
  REQUIRE(h1.covers().size() == 2);
  CHECK(h1.cell(h1.covers()[0].source).support == Simplex{0});
  CHECK(h1.cell(h1.covers()[1].source).support == Simplex{1});
  CHECK(h1.covers()[0].target == h1.covers()[1].target);

  CHECK(HasseDiagram::of(full_simplex(2)).covers().size() == 9);
  CHECK(primitive_pairs(full_simplex(2)).size() == 9);

  const Multigraph theta2(2, {{0, 1}, {0, 1}});
  CHECK(HasseDiagram::of(theta2).covers().size() == 4);

  for (const auto& k : connected_complexes(4)) {
    std::size_t expected = 0;
    for (const auto& s : k.simplices())
      if (s.dim() >= 1) expected += s.size();
    const auto h = HasseDiagram::of(k);
    CHECK(h.covers().size() == expected);
    CHECK(std::is_sorted(h.covers().begin(), h.covers().end()));
  }
}

TEST_CASE("matchings") {
  const auto d1 = full_simplex(1);
  const auto h = HasseDiagram::of(d1);
  CHECK_FALSE(is_matching(h.covers()));

  const auto c3 = cycle_graph(3);
  const auto hc = HasseDiagram::of(c3);
  std::vector<RegularPair> two{pair_of(hc, {0}, {0, 1}), pair_of(hc, {2}, {1, 2})};
  CHECK(is_matching(two));
  CHECK(is_acyclic(hc, two));
  CHECK_THROWS_AS(is_acyclic(h, h.covers()), PreconditionError);
}

TEST_CASE("pairwise compatible but jointly cyclic on a triangle") {
  const auto c3 = cycle_graph(3);
  const auto m = morse_complex(c3);
  const auto& h = m.hasse();
  const std::vector<RegularPair> cyc{pair_of(h, {0}, {0, 1}), pair_of(h, {1}, {1, 2}),
                                     pair_of(h, {2}, {0, 2})};
  for (const auto& p : cyc)
    for (const auto& q : cyc)
      if (p != q) CHECK(compatible(h, p, q));
  CHECK(is_matching(cyc));
  CHECK_FALSE(is_acyclic(h, cyc));

  std::vector<Vertex> ids;
  for (const auto& p : cyc) ids.push_back(static_cast<Vertex>(*m.pair_id(p)));
  CHECK_FALSE(m.is_simplex(Simplex(ids)));
  CHECK(m.is_simplex(Simplex({ids[0], ids[1]})));

  const auto cycles = find_f_cycles(h, cyc);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].closed);
  CHECK(cycles[0].index == 0);
  CHECK(cycles[0].steps.size() == 3);
  CHECK(cycles[0].steps[0] == cyc[0]);

  CHECK(minimal_f_cycles(m).size() == 2);
  CHECK(m.circuits().size() == 2);
  CHECK(m.num_pairs() == 6);
}

TEST_CASE("no f-cycles in a tree") {
  const auto p4 = path_graph(4);
  const auto h = HasseDiagram::of(p4);
  CHECK(find_f_cycles(h, h.covers()).empty());
  CHECK(morse_structure(p4).circuits().empty());
}

TEST_CASE("compatibility is symmetric") {
  for (const auto& k : connected_complexes(4)) {
    const auto m = morse_structure(k);
    for (std::size_t p = 0; p < m.num_pairs(); ++p)
      for (std::size_t q = 0; q < m.num_pairs(); ++q) {
        CHECK(m.compatible(p, q) == m.compatible(q, p));
        if (p != q) CHECK(m.compatible(p, q) == compatible(m.hasse(), m.pair(p), m.pair(q)));
      }
  }
}

TEST_CASE("morse complex of an edge is two points") {
  const auto m = morse_complex(full_simplex(1));
  CHECK(m.facets() == std::vector<Simplex>{Simplex{0}, Simplex{1}});
  CHECK(m.dim() == 0);
}

TEST_CASE("facets agree with a brute-force oracle") {
  std::size_t cases = 0;
  for (const auto& k : small_complexes()) {
    const auto m = morse_complex(k);
    const auto& h = m.hasse();
    const unsigned n = static_cast<unsigned>(h.covers().size());
    std::vector<unsigned> faces;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
      if (oracle_simplex(h, pick(h, mask))) faces.push_back(mask);
    std::vector<Simplex> maximal;
    for (unsigned a : faces) {
      bool top = true;
      for (unsigned b : faces)
        if (a != b && (a & b) == a) {
          top = false;
          break;
        }
      if (top) maximal.push_back(ids_of(a));
    }
    std::sort(maximal.begin(), maximal.end());
    CHECK(maximal == m.facets());

    // The circuit description decides simplices exactly.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      const bool oracle = std::binary_search(faces.begin(), faces.end(), mask);
      CHECK(m.is_simplex(ids_of(mask)) == oracle);
      CHECK(m.complex().contains(ids_of(mask)) == oracle);
      if (is_matching(pick(h, mask))) CHECK(is_acyclic(h, pick(h, mask)) == oracle);
    }
    ++cases;
  }
  CHECK(cases > 20);
}

TEST_CASE("isomorphism counts agree between facet and circuit descriptions") {
  const std::vector<SimplicialComplex> ks{full_simplex(1), cycle_graph(3), path_graph(3),
                                          path_graph(4), cycle_graph(4), full_simplex(2)};
  for (const auto& k : ks) {
    const auto m = morse_complex(k);
    const auto by_circuits = enumerate_isomorphisms(m, m);
    const auto by_facets = enumerate_isomorphisms(m.complex(), m.complex());
    CHECK(by_circuits.size() == by_facets.size());
    CHECK(by_circuits == by_facets);
    for (const auto& f : by_circuits) CHECK(is_isomorphism(f, m, m));
  }
}

TEST_CASE("graph lemma") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : connected_graphs(n)) {
      const auto m = morse_complex(g);
      CHECK(m.num_pairs() == 2 * g.f_vector()[1]);
      CHECK(m.dim() == n - 2);
    }
}

TEST_CASE("leaves have compatibility degree 2|E| - 2") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : connected_graphs(n)) {
      const auto m = morse_structure(g);
      const auto adj = g.adjacency();
      const std::size_t e = g.f_vector()[1];
      for (std::size_t p = 0; p < m.num_pairs(); ++p) {
        const Vertex v = m.hasse().cell(m.pair(p).source).support[0];
        CHECK((adj[v].size() == 1) == (m.compatibility()[p].size() == 2 * e - 2));
      }
    }
}

TEST_CASE("directed forest complexes") {
  const DirectedGraph arc{2, {Arc{0, 1}}};
  CHECK(directed_forest_complex(arc).facets() == std::vector<Simplex>{Simplex{0}});

  const DirectedGraph two_cycle{2, {Arc{0, 1}, Arc{1, 0}}};
  CHECK(directed_forest_complex(two_cycle).facets() ==
        std::vector<Simplex>{Simplex{0}, Simplex{1}});

  const auto d = double_graph(as_multigraph(path_graph(2)));
  REQUIRE(d.arcs.size() == 2);
  CHECK(d.arcs[0].tail == 0);
  CHECK(d.arcs[0].head == 1);
}

TEST_CASE("morse complex of a graph is its directed forest complex") {
  for (const auto& g : {cycle_graph(3), path_graph(3), cycle_graph(4), full_simplex(1)}) {
    const auto c = compare_with_forests(as_multigraph(skeleton(g, 1)));
    CHECK(c.equal);
    CHECK(c.pairs == c.arcs);
    CHECK(c.morse_facets == c.forest_facets);
  }
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : connected_graphs(n)) CHECK(compare_with_forests(as_multigraph(g)).equal);
  CHECK(compare_with_forests(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}})).equal);
}

TEST_CASE("arc for a pair runs into its source") {
  const auto g = as_multigraph(path_graph(2));
  const auto d = double_graph(g);
  CHECK(d.arcs[arc_for_pair(g, 1, 0)].head == 1);
  CHECK(d.arcs[arc_for_pair(g, 0, 0)].head == 0);
}

TEST_CASE("budgets") {
  MorseBudget tiny;
  tiny.max_facets = 3;
  CHECK_THROWS_AS(morse_complex(full_simplex(3), tiny), BudgetExceeded);
  const auto s = morse_structure(full_simplex(3), tiny);
  CHECK_FALSE(s.has_facets());
  CHECK_THROWS_AS(s.complex(), PreconditionError);
}

TEST_CASE("pair labels sort by id") {
  const auto m = morse_structure(full_simplex(3));
  const auto labels = m.pair_labels();
  CHECK(labels.size() == m.num_pairs());
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  CHECK(m.describe(0).find("->") != std::string::npos);
}
