#include "dmt/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace dmt {

namespace {

// Column-reduction rank over Z/2 with packed columns.
std::size_t rank_mod2(std::vector<std::vector<std::uint64_t>> columns) {
  std::vector<long> pivot_owner;
  std::vector<std::vector<std::uint64_t>> pivots;
  std::size_t rank = 0;
  auto lowest = [](const std::vector<std::uint64_t>& c) -> long {
    for (std::size_t w = c.size(); w-- > 0;)
      if (c[w]) return static_cast<long>(w * 64 + 63 - __builtin_clzll(c[w]));
    return -1;
  };
  for (auto& col : columns) {
    if (pivot_owner.empty() && !col.empty()) pivot_owner.assign(col.size() * 64, -1);
    for (long low = lowest(col); low >= 0; low = lowest(col)) {
      const long owner = pivot_owner[low];
      if (owner < 0) {
        pivot_owner[low] = static_cast<long>(pivots.size());
        pivots.push_back(col);
        ++rank;
        break;
      }
      const auto& p = pivots[owner];
      for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= p[w];
    }
  }
  return rank;
}

}  // namespace

std::vector<std::size_t> boundary_ranks_mod2(const SimplicialComplex& k) {
  const int top = k.dim();
  if (top < 0) return {};
  std::vector<std::size_t> position(k.size());
  std::vector<std::size_t> count(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t i = 0; i < k.size(); ++i)
    position[i] = count[k.simplex(i).dim()]++;

  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
  for (int d = 1; d <= top; ++d) {
    const std::size_t words = (count[d - 1] + 63) / 64;
    std::vector<std::vector<std::uint64_t>> columns;
    columns.reserve(count[d]);
    for (const auto& s : k.simplices()) {
      if (s.dim() != d) continue;
      std::vector<std::uint64_t> col(words, 0);
      for (const auto& f : immediate_faces(s)) {
        const auto row = position[*k.index_of(f)];
        col[row / 64] |= std::uint64_t{1} << (row % 64);
      }
      columns.push_back(std::move(col));
    }
    ranks[d] = rank_mod2(std::move(columns));
  }
  return ranks;
}

std::size_t count_components(const SimplicialComplex& k) {
  std::vector<Vertex> parent(k.universe_size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = k.num_vertices();
  for (const auto& s : k.simplices()) {
    if (s.size() != 2) continue;
    Vertex a = find(s[0]), b = find(s[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

std::optional<std::vector<Collapse>> greedy_collapse(const SimplicialComplex& k) {
  const std::size_t n = k.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<std::size_t>> faces(n), cofaces(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& f : immediate_faces(k.simplex(i))) {
      const auto j = *k.index_of(f);
      faces[i].push_back(j);
      cofaces[j].push_back(i);
    }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = cofaces[i].size();

  auto partner = [&](std::size_t s) -> long {
    if (!alive[s] || up[s] != 1) return -1;
    for (std::size_t t : cofaces[s])
      if (alive[t]) return up[t] == 0 ? static_cast<long>(t) : -1;
    return -1;
  };
  // Simplex ids follow the lexicographic order, so the set yields the least.
  std::set<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i)
    if (partner(i) >= 0) candidates.insert(i);

  std::vector<Collapse> steps;
  std::size_t remaining = n;
  while (!candidates.empty()) {
    const std::size_t s = *candidates.begin();
    candidates.erase(candidates.begin());
    const long t = partner(s);
    if (t < 0) continue;
    steps.emplace_back(k.simplex(s), k.simplex(t));
    alive[s] = alive[t] = 0;
    remaining -= 2;
    std::vector<std::size_t> touched;
    for (std::size_t x : {s, static_cast<std::size_t>(t)})
      for (std::size_t f : faces[x]) {
        --up[f];
        touched.push_back(f);
        for (std::size_t g : faces[f]) touched.push_back(g);
      }
    for (std::size_t x : touched)
      if (partner(x) >= 0) candidates.insert(x);
  }
  if (remaining != 1) return std::nullopt;
  return steps;
}

InvariantReport invariants(const SimplicialComplex& k) {
  InvariantReport r;
  r.f_vector = k.f_vector();
  for (std::size_t d = 0; d < r.f_vector.size(); ++d)
    r.euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(r.f_vector[d]);
  r.components = count_components(k);
  const auto ranks = boundary_ranks_mod2(k);
  for (std::size_t d = 0; d < r.f_vector.size(); ++d) {
    const std::size_t above = d + 1 < ranks.size() ? ranks[d + 1] : 0;
    r.betti_mod2.push_back(r.f_vector[d] - ranks[d] - above);
  }
  r.collapsible = greedy_collapse(k).has_value();
  return r;
}

}  // namespace dmt
