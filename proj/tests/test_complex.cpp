#include <algorithm>
#include <random>

#include "doctest.h"
#include "dmt/complex.hpp"
#include "dmt/corpus.hpp"
#include "dmt/errors.hpp"
#include "dmt/isomorphism.hpp"

using namespace dmt;

namespace {

SimplicialComplex from(std::initializer_list<Simplex> faces,
                       std::vector<std::string> labels = {}) {
  std::vector<Simplex> v(faces);
  return closure(v, std::move(labels));
}

// Every subset check, no cleverness: a bijection is an isomorphism iff it
// maps the simplex set onto the simplex set.
bool brute_force_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.num_vertices() != l.num_vertices() || k.size() != l.size()) return false;
  auto a = k.vertices();
  auto b = l.vertices();
  do {
    std::vector<Vertex> fwd(k.universe_size(), kNoVertex);
    for (std::size_t i = 0; i < a.size(); ++i) fwd[a[i]] = b[i];
    bool ok = true;
    for (const auto& s : k.simplices()) {
      std::vector<Vertex> img;
      for (Vertex v : s) img.push_back(fwd[v]);
      if (!l.contains(Simplex(img))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(b.begin(), b.end()));
  return false;
}

}  // namespace

TEST_CASE("closure") {
  auto k = from({{0, 1, 2}});
  CHECK(k.size() == 7);
  CHECK(k.facets() == std::vector<Simplex>{{0, 1, 2}});

  auto point = from({{0}});
  CHECK(point.size() == 1);

  auto c3 = from({{0, 1}, {1, 2}, {0, 2}});
  CHECK(c3.size() == 6);
  CHECK(is_boundary_simplex(c3) == 2);

  CHECK_THROWS_AS(Simplex({0, 0, 1}), MalformedInput);
}

TEST_CASE("closure is idempotent") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& k : complexes_on(n, false)) {
      auto again = closure(k.simplices(), k.labels());
      CHECK(again == k);
    }
}

TEST_CASE("skeleton") {
  auto d2 = full_simplex(2);
  auto s1 = skeleton(d2, 1);
  CHECK(s1.f_vector() == std::vector<std::size_t>{3, 3});
  CHECK(is_cycle_graph(s1));
  CHECK(skeleton(d2, 0).f_vector() == std::vector<std::size_t>{3});
  CHECK(skeleton(d2, 7) == d2);

  auto k4 = skeleton(simplex_boundary(3), 1);
  CHECK(k4.f_vector() == std::vector<std::size_t>{4, 6});
}

TEST_CASE("link") {
  auto d2 = full_simplex(2);
  auto lk = link(Simplex{0}, d2);
  CHECK(lk.facets() == std::vector<Simplex>{{1, 2}});

  auto c3 = simplex_boundary(2);
  CHECK(link(Simplex{0, 1}, c3).empty());

  for (int n = 3; n <= 6; ++n) {
    auto lv = link(Simplex{0}, cycle_graph(n));
    CHECK(lv.f_vector() == std::vector<std::size_t>{2});
  }
  CHECK_THROWS_AS(link(Simplex{0, 1}, skeleton(d2, 0)), NotAFace);
}

TEST_CASE("links are face closed") {
  for (const auto& k : complexes_on(4, false))
    for (const auto& s : k.simplices()) {
      auto lk = link(s, k);
      for (const auto& t : lk.simplices())
        for (const auto& f : immediate_faces(t)) CHECK(lk.contains(f));
    }
}

TEST_CASE("immediate faces") {
  CHECK(immediate_faces(Simplex{0, 1, 2}) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(immediate_faces(Simplex{0, 1}) == std::vector<Simplex>{{0}, {1}});
  CHECK(immediate_faces(Simplex{0, 1, 2, 3}).size() == 4);
  CHECK(immediate_faces(Simplex{4}).empty());
  const auto d4 = full_simplex(4);
  for (const auto& s : d4.simplices())
    CHECK(immediate_faces(s).size() == static_cast<std::size_t>(s.dim() == 0 ? 0 : s.dim() + 1));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(full_simplex(3)));
  CHECK_FALSE(is_connected(from({{0}, {1}})));
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(SimplicialComplex{}));
}

TEST_CASE("boundary of a simplex") {
  CHECK(is_boundary_simplex(simplex_boundary(3)) == 3);
  CHECK(is_boundary_simplex(simplex_boundary(1)) == 1);
  CHECK_FALSE(is_boundary_simplex(full_simplex(2)));
  CHECK_FALSE(is_boundary_simplex(cycle_graph(4)));
}

TEST_CASE("isomorphism search examples") {
  auto c4 = cycle_graph(4);
  std::vector<std::pair<Vertex, Vertex>> e{{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  auto c4b = graph_from_edges(4, e);
  auto f = find_isomorphism(c4, c4b);
  REQUIRE(f);
  CHECK(is_isomorphism(*f, c4, c4b));

  CHECK_FALSE(find_isomorphism(cycle_graph(3), path_graph(3)).has_value());
}

TEST_CASE("isomorphism search agrees with brute force") {
  std::vector<SimplicialComplex> all;
  for (int n = 1; n <= 4; ++n)
    for (auto& k : complexes_on(n, false)) all.push_back(std::move(k));
  Rng rng(7);
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto [h, l] = random_relabel(all[i], rng);
    auto f = find_isomorphism(all[i], l);
    REQUIRE(f);
    CHECK(is_isomorphism(*f, all[i], l));
    auto back = find_isomorphism(l, all[i]);
    REQUIRE(back);
    for (std::size_t j = 0; j < all.size(); ++j) {
      const bool fast = find_isomorphism(all[i], all[j]).has_value();
      CHECK(fast == brute_force_isomorphic(all[i], all[j]));
      CHECK(fast == (i == j));
    }
  }
}

TEST_CASE("isomorphisms are symmetric and preserve f-vectors") {
  Rng rng(11);
  for (const auto& k : complexes_on(5, true)) {
    auto [h, l] = random_relabel(k, rng);
    auto f = find_isomorphism(k, l);
    auto g = find_isomorphism(l, k);
    REQUIRE(f);
    REQUIRE(g);
    CHECK(is_isomorphism(f->inverted(), l, k));
    CHECK(k.f_vector() == l.f_vector());
    for (const auto& s : k.simplices()) CHECK(f->apply(s).dim() == s.dim());
  }
}

TEST_CASE("least witness is returned") {
  auto d2 = full_simplex(2);
  auto all = enumerate_isomorphisms(d2.facet_complex(), d2.facet_complex());
  CHECK(all.size() == 6);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.forward() < b.forward();
  }));
  CHECK(find_isomorphism(d2, d2)->forward() == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("vertex bijections") {
  CHECK_THROWS_AS(VertexBijection({1, 0}, {1, 1}), InvalidIsomorphism);
  CHECK_THROWS_AS(VertexBijection::from_forward({0, 0}, 2), InvalidIsomorphism);
  auto f = VertexBijection::from_forward({2, 0, 1}, 3);
  CHECK(f.inverse(2) == 0);
  CHECK(f.apply(Simplex{0, 1}) == Simplex{0, 2});
}
