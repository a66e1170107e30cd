#include "dmt/corpus.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Vertex pairs of K_n in a fixed order, and the index of each pair.
struct PairIndex {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> at;

  explicit PairIndex(int n) : at(n, std::vector<int>(n, -1)) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        at[u][v] = at[v][u] = static_cast<int>(pairs.size());
        pairs.emplace_back(u, v);
      }
  }
};

bool mask_connected(int n, const PairIndex& idx, std::uint32_t edges) {
  std::uint32_t reached = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < idx.pairs.size(); ++i) {
      if (!(edges >> i & 1)) continue;
      auto [u, v] = idx.pairs[i];
      const bool a = reached >> u & 1, b = reached >> v & 1;
      if (a != b) {
        reached |= (1u << u) | (1u << v);
        grew = true;
      }
    }
  }
  return reached == (1u << n) - 1;
}

std::uint32_t canonical_graph(const PairIndex& idx, const std::vector<std::vector<int>>& perms,
                              std::uint32_t edges) {
  std::uint32_t best = edges;
  for (const auto& p : perms) {
    std::uint32_t img = 0;
    for (std::size_t i = 0; i < idx.pairs.size(); ++i)
      if (edges >> i & 1) img |= 1u << idx.at[p[idx.pairs[i].first]][p[idx.pairs[i].second]];
    best = std::min(best, img);
  }
  return best;
}

SimplicialComplex graph_from_mask(int n, const PairIndex& idx, std::uint32_t edges) {
  std::vector<Simplex> faces;
  for (int v = 0; v < n; ++v) faces.push_back(Simplex{v});
  for (std::size_t i = 0; i < idx.pairs.size(); ++i)
    if (edges >> i & 1) faces.push_back(Simplex{idx.pairs[i].first, idx.pairs[i].second});
  return closure(faces, letter_labels(n));
}

}  // namespace

std::vector<SimplicialComplex> connected_graphs(int n) {
  if (n < 1 || n > 6) throw PreconditionError("exhaustive graphs need 1 <= n <= 6");
  const PairIndex idx(n);
  const auto perms = permutations(n);
  std::set<std::uint32_t> seen;
  const std::uint32_t limit = 1u << idx.pairs.size();
  for (std::uint32_t m = 0; m < limit; ++m)
    if (mask_connected(n, idx, m)) seen.insert(canonical_graph(idx, perms, m));
  std::vector<SimplicialComplex> out;
  for (auto m : seen) out.push_back(graph_from_mask(n, idx, m));
  return out;
}

std::vector<SimplicialComplex> random_connected_graphs(int n, std::size_t count, Rng& rng) {
  if (n < 1 || n > 7) throw PreconditionError("random graphs need 1 <= n <= 7");
  const PairIndex idx(n);
  const auto perms = permutations(n);
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << idx.pairs.size()) - 1);
  std::set<std::uint32_t> seen;
  std::vector<SimplicialComplex> out;
  for (std::size_t tries = 0; out.size() < count && tries < 1000 * count; ++tries) {
    const auto m = pick(rng);
    if (!mask_connected(n, idx, m)) continue;
    if (seen.insert(canonical_graph(idx, perms, m)).second)
      out.push_back(graph_from_mask(n, idx, m));
  }
  return out;
}

std::vector<SimplicialComplex> complexes_on(int n, bool connected_only) {
  if (n < 1 || n > 5) throw PreconditionError("exhaustive complexes need 1 <= n <= 5");
  // Families are bit masks indexed by vertex subsets; singletons are implied.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) >= 2) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  const auto perms = permutations(n);
  auto image = [&](const std::vector<int>& p, std::uint32_t family) {
    std::uint64_t out = 0;
    for (std::uint32_t s : subsets)
      if (family >> s & 1) {
        std::uint32_t t = 0;
        for (int v = 0; v < n; ++v)
          if (s >> v & 1) t |= 1u << p[v];
        out |= std::uint64_t{1} << t;
      }
    return out;
  };
  const PairIndex idx(n);
  std::set<std::uint64_t> seen;
  std::vector<SimplicialComplex> out;
  std::uint32_t family = 0;
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (i == subsets.size()) {
      std::uint32_t edges = 0;
      for (std::size_t e = 0; e < idx.pairs.size(); ++e)
        if (family >> ((1u << idx.pairs[e].first) | (1u << idx.pairs[e].second)) & 1)
          edges |= 1u << e;
      if (connected_only && !mask_connected(n, idx, edges)) return;
      std::uint64_t best = ~std::uint64_t{0};
      for (const auto& p : perms) best = std::min(best, image(p, family));
      if (!seen.insert(best).second) return;
      std::vector<Simplex> faces;
      for (int v = 0; v < n; ++v) faces.push_back(Simplex{v});
      for (std::uint32_t s : subsets)
        if (family >> s & 1) {
          std::vector<Vertex> vs;
          for (int v = 0; v < n; ++v)
            if (s >> v & 1) vs.push_back(v);
          faces.push_back(Simplex::from_sorted(std::move(vs)));
        }
      out.push_back(closure(faces, letter_labels(n)));
      return;
    }
    const std::uint32_t s = subsets[i];
    grow(i + 1);
    bool faces_present = true;
    if (std::popcount(s) > 2)
      for (int v = 0; v < n && faces_present; ++v)
        if (s >> v & 1) faces_present = family >> (s & ~(1u << v)) & 1;
    if (faces_present) {
      family |= 1u << s;
      grow(i + 1);
      family &= ~(1u << s);
    }
  };
  grow(0);
  return out;
}

std::vector<SimplicialComplex> connected_complexes(int max_vertices) {
  std::vector<SimplicialComplex> out;
  for (int n = 1; n <= max_vertices; ++n)
    for (auto& k : complexes_on(n, true)) out.push_back(std::move(k));
  return out;
}

std::vector<Multigraph> connected_multigraphs(int max_vertices, int max_multiplicity) {
  if (max_vertices > 5) throw PreconditionError("exhaustive multigraphs need <= 5 vertices");
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    const PairIndex idx(n);
    const auto perms = permutations(n);
    const std::size_t slots = idx.pairs.size();
    const int base = max_multiplicity + 1;
    std::vector<int> mult(slots, 0);
    std::set<std::vector<int>> seen;
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == slots) {
        std::uint32_t support = 0;
        for (std::size_t e = 0; e < slots; ++e)
          if (mult[e]) support |= 1u << e;
        if (!mask_connected(n, idx, support)) return;
        std::vector<int> best = mult;
        for (const auto& p : perms) {
          std::vector<int> img(slots);
          for (std::size_t e = 0; e < slots; ++e)
            img[idx.at[p[idx.pairs[e].first]][p[idx.pairs[e].second]]] = mult[e];
          best = std::min(best, img);
        }
        if (!seen.insert(best).second) return;
        std::vector<std::string> el;
        std::vector<std::pair<Vertex, Vertex>> boundary;
        for (std::size_t e = 0; e < slots; ++e)
          for (int c = 0; c < mult[e]; ++c) {
            el.push_back("e" + std::to_string(el.size()));
            boundary.push_back(idx.pairs[e]);
          }
        out.emplace_back(letter_labels(n), std::move(el), std::move(boundary));
        return;
      }
      for (int c = 0; c < base; ++c) {
        mult[i] = c;
        fill(i + 1);
      }
      mult[i] = 0;
    };
    fill(0);
  }
  return out;
}

SimplicialComplex random_connected_complex(int max_vertices, Rng& rng) {
  const int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  const int facets = std::uniform_int_distribution<int>(1, n)(rng);
  std::vector<Simplex> faces;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < facets; ++i) {
    const int size = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
    std::shuffle(order.begin(), order.end(), rng);
    faces.push_back(Simplex(std::vector<Vertex>(order.begin(), order.begin() + size)));
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : faces)
    for (Vertex v : f) parent[find(v)] = find(f[0]);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) {
      const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
      parent[find(v)] = find(0);
      faces.push_back(Simplex{u, v});
    }
  return closure(faces, letter_labels(n));
}

std::pair<VertexBijection, SimplicialComplex> random_relabel(const SimplicialComplex& k,
                                                             Rng& rng) {
  std::vector<Vertex> forward(k.universe_size());
  std::iota(forward.begin(), forward.end(), 0);
  std::shuffle(forward.begin(), forward.end(), rng);
  auto h = VertexBijection::from_forward(std::move(forward), k.universe_size());
  auto l = relabel(k, h, k.labels());
  return {std::move(h), std::move(l)};
}

Multigraph random_relabel(const Multigraph& g, Rng& rng) {
  std::vector<Vertex> vp(g.num_vertices());
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::vector<EdgeId> ep(g.num_edges());
  std::iota(ep.begin(), ep.end(), 0);
  std::shuffle(ep.begin(), ep.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> boundary(g.num_edges());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    auto [u, v] = g.boundary(e);
    boundary[ep[e]] = {vp[u], vp[v]};
  }
  return Multigraph(g.vertex_labels(), g.edge_labels(), std::move(boundary));
}

bool multigraphs_isomorphic(const Multigraph& g, const Multigraph& h) {
  const int n = static_cast<int>(g.num_vertices());
  if (h.num_vertices() != g.num_vertices() || h.num_edges() != g.num_edges()) return false;
  auto matrix = [n](const Multigraph& x) {
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(x.num_edges()); ++e) {
      auto [u, v] = x.boundary(e);
      ++m[u * n + v];
      ++m[v * n + u];
    }
    return m;
  };
  const auto a = matrix(g);
  const auto b = matrix(h);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < n && same; ++u)
      for (int v = 0; v < n && same; ++v) same = a[u * n + v] == b[p[u] * n + p[v]];
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace dmt
