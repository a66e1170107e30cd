#include "dmt/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

std::vector<std::string> decimal_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Calls `emit` on every nonempty subset of `s`.
template <class Emit>
void for_each_face(const Simplex& s, Emit&& emit) {
  const std::size_t k = s.size();
  std::vector<Vertex> buf;
  buf.reserve(k);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    buf.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) buf.push_back(s[i]);
    emit(Simplex::from_sorted(buf));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FacetComplex

FacetComplex::FacetComplex(std::size_t universe_size,
                           std::vector<Simplex> facets)
    : universe_(universe_size) {
  for (const auto& f : facets)
    for (Vertex v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        throw MalformedInput("facet vertex outside the vertex universe");
  // Larger simplices first so a candidate only needs checking against kept
  // facets.
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    bool maximal = std::none_of(facets_.begin(), facets_.end(),
                                [&](const Simplex& g) { return f.is_face_of(g); });
    if (maximal) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
  build_adjacency();
}

FacetComplex FacetComplex::from_maximal(
    std::size_t universe_size, std::vector<Simplex> facets,
    std::optional<std::vector<std::vector<Vertex>>> adjacency) {
  FacetComplex fc;
  fc.universe_ = universe_size;
  fc.facets_ = std::move(facets);
  if (adjacency) {
    fc.adj_ = std::move(*adjacency);
    fc.adj_.resize(universe_size);
  } else {
    fc.build_adjacency();
  }
  return fc;
}

void FacetComplex::build_adjacency() {
  std::vector<std::unordered_set<Vertex>> sets(universe_);
  for (const auto& f : facets_)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        sets[f[i]].insert(f[j]);
        sets[f[j]].insert(f[i]);
      }
  adj_.assign(universe_, {});
  for (std::size_t v = 0; v < universe_; ++v) {
    adj_[v].assign(sets[v].begin(), sets[v].end());
    std::sort(adj_[v].begin(), adj_[v].end());
  }
}

int FacetComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

std::vector<Vertex> FacetComplex::vertices() const {
  std::vector<char> seen(universe_, 0);
  for (const auto& f : facets_)
    for (Vertex v : f) seen[v] = 1;
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < universe_; ++v)
    if (seen[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool FacetComplex::has_vertex(Vertex v) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [v](const Simplex& f) { return f.contains(v); });
}

bool FacetComplex::contains(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return s.is_face_of(f); });
}

std::vector<Simplex> FacetComplex::link_facets(Vertex v) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_) {
    if (!f.contains(v) || f.size() == 1) continue;
    std::vector<Vertex> rest;
    rest.reserve(f.size() - 1);
    for (Vertex w : f)
      if (w != v) rest.push_back(w);
    out.push_back(Simplex::from_sorted(std::move(rest)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex FacetComplex::materialize(std::vector<std::string> labels,
                                            std::size_t max_simplices) const {
  std::unordered_set<Simplex, SimplexHash> all;
  for (const auto& f : facets_) {
    for_each_face(f, [&](Simplex s) { all.insert(std::move(s)); });
    if (all.size() > max_simplices)
      throw BudgetExceeded("materializing the complex needs more than " +
                           std::to_string(max_simplices) + " simplices");
  }
  if (labels.empty()) labels = decimal_labels(universe_);
  std::vector<Simplex> faces(all.begin(), all.end());
  return closure(faces, std::move(labels));
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex closure(std::span<const Simplex> faces,
                          std::vector<std::string> labels) {
  std::unordered_set<Simplex, SimplexHash> all;
  Vertex max_vertex = -1;
  for (const auto& s : faces) {
    if (s.empty()) throw MalformedInput("empty simplex");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] <= s[i - 1]) throw MalformedInput("duplicate vertex in simplex");
    max_vertex = std::max(max_vertex, s.vertices().back());
    if (s[0] < 0) throw MalformedInput("negative vertex id");
    if (all.contains(s)) continue;
    for_each_face(s, [&](Simplex f) { all.insert(std::move(f)); });
  }
  if (labels.empty()) labels = decimal_labels(static_cast<std::size_t>(max_vertex + 1));
  if (max_vertex >= static_cast<Vertex>(labels.size()))
    throw MalformedInput("vertex id has no label");

  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.simplices_.assign(all.begin(), all.end());
  std::sort(k.simplices_.begin(), k.simplices_.end());
  k.index_.reserve(k.simplices_.size());
  for (std::size_t i = 0; i < k.simplices_.size(); ++i)
    k.index_.emplace(k.simplices_[i], i);

  std::vector<char> maximal(k.simplices_.size(), 1);
  for (const auto& s : k.simplices_)
    for (const auto& f : immediate_faces(s)) maximal[k.index_.at(f)] = 0;
  for (std::size_t i = 0; i < k.simplices_.size(); ++i)
    if (maximal[i]) k.facets_.push_back(k.simplices_[i]);
  return k;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (s.dim() == d) out.push_back(s);
  return out;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices_)
    if (s.size() == 1) out.push_back(s[0]);
  return out;
}

std::size_t SimplicialComplex::num_vertices() const { return vertices().size(); }

std::optional<Vertex> SimplicialComplex::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 1), 0);
  for (const auto& s : simplices_) ++f[s.dim()];
  return f;
}

std::vector<std::vector<Vertex>> SimplicialComplex::adjacency() const {
  std::vector<std::vector<Vertex>> adj(labels_.size());
  for (const auto& s : simplices_)
    if (s.size() == 2) {
      adj[s[0]].push_back(s[1]);
      adj[s[1]].push_back(s[0]);
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

FacetComplex SimplicialComplex::facet_complex() const {
  return FacetComplex::from_maximal(labels_.size(), facets_, adjacency());
}

// ---------------------------------------------------------------------------
// Operations

SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
  std::vector<Simplex> kept;
  for (const auto& s : k.simplices())
    if (s.dim() <= dim) kept.push_back(s);
  return closure(kept, k.labels());
}

SimplicialComplex link(const Simplex& sigma, const SimplicialComplex& k) {
  if (!k.contains(sigma)) throw NotAFace("simplex is not a face of the complex");
  std::vector<Simplex> kept;
  for (const auto& tau : k.simplices())
    if (!tau.intersects(sigma) && k.contains(tau.united(sigma)))
      kept.push_back(tau);
  return closure(kept, k.labels());
}

bool is_connected(const SimplicialComplex& k) {
  const auto verts = k.vertices();
  if (verts.empty()) return false;
  const auto adj = k.adjacency();
  std::vector<char> seen(k.universe_size(), 0);
  std::queue<Vertex> queue;
  queue.push(verts.front());
  seen[verts.front()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
  }
  return reached == verts.size();
}

std::optional<int> is_boundary_simplex(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  if (n < 2 || n > 62) return std::nullopt;
  if (k.size() != (std::size_t{1} << n) - 2) return std::nullopt;
  if (k.dim() != static_cast<int>(n) - 2) return std::nullopt;
  return static_cast<int>(n) - 1;
}

bool is_cycle_graph(const SimplicialComplex& k) {
  if (k.dim() != 1 || !is_connected(k)) return false;
  const auto f = k.f_vector();
  if (f[0] < 3 || f[0] != f[1]) return false;
  const auto adj = k.adjacency();
  for (Vertex v : k.vertices())
    if (adj[v].size() != 2) return false;
  return true;
}

SimplicialComplex full_simplex(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Simplex> facets{Simplex(v)};
  return closure(facets);
}

SimplicialComplex simplex_boundary(int n) {
  const auto full = full_simplex(n);
  std::vector<Simplex> proper;
  for (const auto& s : full.simplices())
    if (s.dim() < n) proper.push_back(s);
  return closure(proper);
}

SimplicialComplex cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, edges);
}

SimplicialComplex path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return graph_from_edges(n, edges);
}

SimplicialComplex graph_from_edges(int num_vertices,
                                   std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Simplex> faces;
  for (Vertex v = 0; v < num_vertices; ++v) faces.push_back(Simplex{v});
  for (auto [u, v] : edges) faces.push_back(Simplex{u, v});
  return closure(faces);
}

}  // namespace dmt
