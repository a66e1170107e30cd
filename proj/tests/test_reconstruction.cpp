#include <numeric>

#include "doctest.h"
#include "dmt/corpus.hpp"
#include "dmt/errors.hpp"
#include "dmt/reconstruction.hpp"

using namespace dmt;

namespace {

VertexBijection identity(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return VertexBijection::from_forward(v, n);
}

SimplicialComplex from(std::vector<Simplex> faces) { return closure(faces); }

}  // namespace

TEST_CASE("induced maps reconstruct to the map itself") {
  Rng rng(3);
  std::size_t checked = 0;
  for (const auto& k : connected_complexes(5)) {
    if (k.num_vertices() < 2) continue;
    auto [h, l] = random_relabel(k, rng);
    const auto f = morse_map(k, l, h);
    CHECK(is_isomorphism(f, morse_structure(k), morse_structure(l)));
    if (is_boundary_simplex(k)) continue;
    CHECK(reconstruct_complex_iso(k, l, f) == h);
    if (k.dim() == 1 && !is_cycle_graph(k)) CHECK(reconstruct_graph_iso(k, l, f) == h);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("morse map rejects non-isomorphisms") {
  const auto p3 = path_graph(3);
  const auto swap01 = VertexBijection::from_forward({1, 0, 2}, 3);
  CHECK_THROWS_AS(morse_map(p3, p3, swap01), InvalidIsomorphism);
}

TEST_CASE("automorphisms of a star") {
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {0, 2}, {0, 3}};
  const auto star = graph_from_edges(4, e);
  const auto m = morse_structure(star);
  const auto all = enumerate_isomorphisms(m, m);
  CHECK(all.size() == 6);
  for (const auto& f : all) {
    const auto g = reconstruct_graph_iso(star, star, f);
    CHECK(is_isomorphism(g, star, star));
    CHECK(g(0) == 0);
    CHECK(morse_map(star, star, g) == f);
  }
}

TEST_CASE("automorphisms of a path") {
  const auto p3 = path_graph(3);
  const auto m = morse_structure(p3);
  const auto all = enumerate_isomorphisms(m, m);
  CHECK(all.size() == 2);
  CHECK(reconstruct_graph_iso(p3, p3, all[0]) == identity(3));
  CHECK(reconstruct_graph_iso(p3, p3, all[1]) == VertexBijection::from_forward({2, 1, 0}, 3));
}

TEST_CASE("graph reconstruction hypotheses") {
  const auto c4 = cycle_graph(4);
  const auto m = morse_structure(c4);
  CHECK_THROWS_AS(reconstruct_graph_iso(c4, c4, identity(m.num_pairs())), HypothesisViolation);
  const auto d2 = full_simplex(2);
  CHECK_THROWS_AS(reconstruct_graph_iso(d2, d2, identity(9)), HypothesisViolation);

  const auto p4 = path_graph(4);
  std::vector<Vertex> swapped(6);
  std::iota(swapped.begin(), swapped.end(), 0);
  std::swap(swapped[0], swapped[1]);
  CHECK_THROWS_AS(reconstruct_graph_iso(p4, p4, VertexBijection::from_forward(swapped, 6)),
                  InvalidIsomorphism);
}

TEST_CASE("cycles") {
  CHECK(reconstruct_cycle(cycle_graph(4), cycle_graph(4)) == 4);
  CHECK_FALSE(reconstruct_cycle(cycle_graph(4), path_graph(4)).has_value());
  CHECK_FALSE(reconstruct_cycle(cycle_graph(4), cycle_graph(5)).has_value());
  CHECK_THROWS_AS(reconstruct_cycle(path_graph(4), cycle_graph(4)), HypothesisViolation);

  // Every automorphism of M(C_n), induced or not, yields a vertex automorphism.
  for (int n = 3; n <= 5; ++n) {
    const auto c = cycle_graph(n);
    const auto m = morse_structure(c);
    const auto all = enumerate_isomorphisms(m, m);
    CHECK(all.size() == static_cast<std::size_t>(4 * n));
    for (const auto& f : all) CHECK(is_isomorphism(reconstruct_complex_iso(c, c, f), c, c));
  }
}

TEST_CASE("quotients") {
  const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {0, 2}, {0, 3}};
  const auto star = graph_from_edges(4, e);
  const auto q = quotient(star);
  CHECK(q.num_classes() == 2);
  CHECK(q.classes[1] == std::vector<Vertex>{1, 2, 3});
  CHECK(q.projection == std::vector<Vertex>{0, 1, 1, 1});
  CHECK(q.quotient.facets() == std::vector<Simplex>{Simplex{0, 1}});

  const auto c4 = quotient(cycle_graph(4));
  CHECK(c4.classes == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});

  const auto d2 = quotient(full_simplex(2));
  CHECK(d2.num_classes() == 3);
}

TEST_CASE("quotient classes match the relation") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& k : complexes_on(n, false)) {
      const auto q = quotient(k);
      for (Vertex v : k.vertices())
        for (Vertex w : k.vertices()) {
          const bool related =
              v == w || (!k.contains(Simplex{std::min(v, w), std::max(v, w)}) &&
                         link(Simplex{v}, k).simplices() == link(Simplex{w}, k).simplices());
          CHECK((q.projection[v] == q.projection[w]) == related);
        }
      for (const auto& c : q.classes) CHECK(q.projection[c.front()] == c.front());

      // A second pass can only merge further.
      const auto again = quotient(q.quotient);
      CHECK(again.num_classes() <= q.num_classes());
      if (q.num_classes() == k.num_vertices()) CHECK(q.quotient == k.facet_complex());
    }
}

TEST_CASE("induced quotient isomorphisms") {
  const auto m = morse_complex(cycle_graph(3));
  const auto& fc = m.complex();
  const auto id = induced_quotient_iso(identity(fc.universe_size()), fc, fc);
  const auto q = quotient(fc);
  for (const auto& c : q.classes) CHECK(id(c.front()) == c.front());
  for (const auto& f : enumerate_isomorphisms(fc, fc)) {
    const auto g = induced_quotient_iso(f, fc, fc, q, q);
    CHECK(is_isomorphism(g, q.quotient, q.quotient));
  }
  std::vector<Vertex> bad(6);
  std::iota(bad.begin(), bad.end(), 0);
  std::swap(bad[0], bad[5]);
  if (!is_isomorphism(VertexBijection::from_forward(bad, 6), fc, fc))
    CHECK_THROWS_AS(induced_quotient_iso(VertexBijection::from_forward(bad, 6), fc, fc),
                    InvalidIsomorphism);
}

TEST_CASE("parallel pairs") {
  const Multigraph theta(3, {{0, 1}, {0, 1}, {1, 2}});
  const auto m = morse_complex(theta);
  std::size_t parallel = 0;
  for (std::size_t p = 0; p < m.num_pairs(); ++p)
    for (std::size_t q = 0; q < m.num_pairs(); ++q) {
      const bool lit = literally_parallel(m, theta, p, q);
      CHECK(parallel_pairs(m, theta, p, q) == lit);
      parallel += lit;
    }
  CHECK(parallel == 4);

  const auto simple = as_multigraph(path_graph(4));
  const auto ms = morse_complex(simple);
  for (std::size_t p = 0; p < ms.num_pairs(); ++p)
    for (std::size_t q = 0; q < ms.num_pairs(); ++q) CHECK_FALSE(parallel_pairs(ms, simple, p, q));

  const Multigraph two(2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(parallel_pairs(morse_complex(two), two, 0, 1), HypothesisViolation);
}

TEST_CASE("parallel pairs agree with the definition on the corpus") {
  for (const auto& g : connected_multigraphs(4, 3)) {
    if (g.num_vertices() < 3) continue;
    const auto m = morse_complex(g);
    for (std::size_t p = 0; p < m.num_pairs(); ++p)
      for (std::size_t q = 0; q < m.num_pairs(); ++q)
        CHECK(parallel_pairs(m, g, p, q) == literally_parallel(m, g, p, q));
  }
}

TEST_CASE("simplification") {
  const Multigraph theta(3, {{0, 1}, {0, 1}, {1, 2}});
  const auto s = simplify(theta);
  CHECK(s.graph.facets() == std::vector<Simplex>{Simplex{0, 1}, Simplex{1, 2}});
  CHECK(s.edge_map == std::vector<Simplex>{Simplex{0, 1}, Simplex{0, 1}, Simplex{1, 2}});
}

TEST_CASE("a double edge and a path have different morse complexes") {
  const Multigraph doubled(2, {{0, 1}, {0, 1}});
  const Multigraph path(3, {{0, 1}, {1, 2}});
  const auto a = morse_complex(doubled);
  const auto b = morse_complex(path);
  CHECK(a.num_pairs() == b.num_pairs());
  CHECK_FALSE(find_isomorphism(a, b).has_value());
}

TEST_CASE("multigraph reconstruction") {
  Rng rng(5);
  for (const auto& g : connected_multigraphs(4, 2)) {
    const auto h = random_relabel(g, rng);
    const auto mg = morse_structure(g);
    const auto mh = morse_structure(h);
    const auto f = find_isomorphism(mg, mh);
    REQUIRE(f);
    const auto r = reconstruct_multigraph_iso(g, h, *f);
    CHECK(is_isomorphism(r, g, h));
  }

  const Multigraph theta(3, {{0, 1}, {0, 1}, {1, 2}});
  const auto m = morse_structure(theta);
  for (const auto& f : enumerate_isomorphisms(m, m))
    CHECK(is_isomorphism(reconstruct_multigraph_iso(theta, theta, f), theta, theta));
}

TEST_CASE("index-mixing automorphisms of the boundary of a tetrahedron") {
  const auto k = simplex_boundary(3);
  const auto m = morse_structure(k);
  const auto all = enumerate_isomorphisms(m, m);
  CHECK(all.size() == 48);
  std::size_t mixing = 0;
  for (const auto& f : all) {
    if (detect_index_anomaly(k, k, f)) ++mixing;
    CHECK(is_isomorphism(reconstruct_complex_iso(k, k, f), k, k));
  }
  CHECK(mixing == 24);

  const auto t = simplex_boundary(2);
  const auto mt = morse_structure(t);
  for (const auto& f : enumerate_isomorphisms(mt, mt))
    CHECK_FALSE(detect_index_anomaly(t, t, f).has_value());
}

TEST_CASE("triangle permutations") {
  const auto d2 = full_simplex(2);
  std::vector<Vertex> p{0, 1, 2};
  do {
    const auto h = VertexBijection::from_forward(p, 3);
    CHECK(reconstruct_complex_iso(d2, d2, morse_map(d2, d2, h)) == h);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("triangle with a pendant edge") {
  const auto k = from({{0, 1, 2}, {2, 3}});
  const auto m = morse_structure(k);
  const auto all = enumerate_isomorphisms(m, m);
  CHECK(all.size() == 2);
  for (const auto& f : all) {
    const auto g = reconstruct_complex_iso(k, k, f);
    CHECK(is_isomorphism(g, k, k));
    CHECK(morse_map(k, k, g) == f);
  }
}

TEST_CASE("isomorphic morse complexes force equal counts") {
  std::vector<SimplicialComplex> graphs;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : connected_graphs(n)) graphs.push_back(std::move(g));
  std::vector<MorseComplex> ms;
  for (const auto& g : graphs) ms.push_back(morse_structure(g));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      if (ms[i].num_pairs() != ms[j].num_pairs()) continue;
      const bool iso = find_isomorphism(ms[i], ms[j]).has_value();
      if (iso) {
        CHECK(graphs[i].f_vector() == graphs[j].f_vector());
      }
      CHECK(iso == (i == j));
    }
}

TEST_CASE("disconnected inputs are rejected") {
  const auto two = from({{0}, {1}});
  CHECK_THROWS_AS(reconstruct_complex_iso(two, two, identity(0)), HypothesisViolation);
}
