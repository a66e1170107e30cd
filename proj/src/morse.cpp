#include "dmt/morse.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "dmt/errors.hpp"

namespace dmt {

// ---------------------------------------------------------------------------
// Hasse diagram

HasseDiagram HasseDiagram::of(const SimplicialComplex& k) {
  HasseDiagram h;
  h.vertex_labels_ = k.labels();
  const auto n = k.size();
  h.cells_.reserve(n);
  for (const auto& s : k.simplices()) h.cells_.push_back(Cell{s, -1});
  h.faces_.assign(n, {});
  h.cofaces_.assign(n, {});
  for (std::size_t t = 0; t < n; ++t)
    for (const auto& f : immediate_faces(k.simplex(t))) {
      auto s = static_cast<CellId>(*k.index_of(f));
      h.faces_[t].push_back(s);
      h.cofaces_[s].push_back(static_cast<CellId>(t));
      h.covers_.push_back({s, static_cast<CellId>(t), k.simplex(s).dim()});
    }
  for (auto& c : h.cofaces_) std::sort(c.begin(), c.end());
  std::sort(h.covers_.begin(), h.covers_.end());
  return h;
}

HasseDiagram HasseDiagram::of(const Multigraph& g) {
  HasseDiagram h;
  h.multigraph_ = true;
  h.vertex_labels_ = g.vertex_labels();
  h.edge_labels_ = g.edge_labels();
  const auto nv = g.num_vertices();
  const auto ne = g.num_edges();
  for (std::size_t v = 0; v < nv; ++v)
    h.cells_.push_back(Cell{Simplex{static_cast<Vertex>(v)}, -1});
  for (std::size_t e = 0; e < ne; ++e) {
    auto [u, v] = g.boundary(static_cast<EdgeId>(e));
    h.cells_.push_back(Cell{Simplex{u, v}, static_cast<EdgeId>(e)});
  }
  h.faces_.assign(nv + ne, {});
  h.cofaces_.assign(nv + ne, {});
  for (std::size_t e = 0; e < ne; ++e) {
    const auto t = static_cast<CellId>(nv + e);
    auto [u, v] = g.boundary(static_cast<EdgeId>(e));
    for (Vertex x : {u, v}) {
      h.faces_[t].push_back(x);
      h.cofaces_[x].push_back(t);
      h.covers_.push_back({x, t, 0});
    }
  }
  std::sort(h.covers_.begin(), h.covers_.end());
  return h;
}

std::optional<std::size_t> HasseDiagram::pair_id(const RegularPair& p) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), p);
  if (it == covers_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::optional<CellId> HasseDiagram::cell_of(const Simplex& s) const {
  if (multigraph_) {
    if (s.size() != 1) return std::nullopt;
    if (s[0] < 0 || static_cast<std::size_t>(s[0]) >= vertex_labels_.size())
      return std::nullopt;
    return s[0];
  }
  auto it = std::lower_bound(cells_.begin(), cells_.end(), s,
                             [](const Cell& c, const Simplex& x) { return c.support < x; });
  if (it == cells_.end() || it->support != s) return std::nullopt;
  return static_cast<CellId>(it - cells_.begin());
}

std::optional<CellId> HasseDiagram::edge_cell(EdgeId e) const {
  if (!multigraph_ || e < 0 || static_cast<std::size_t>(e) >= edge_labels_.size())
    return std::nullopt;
  return static_cast<CellId>(vertex_labels_.size() + static_cast<std::size_t>(e));
}

std::string HasseDiagram::describe(CellId c) const {
  const Cell& cell = cells_[c];
  if (cell.edge >= 0) return edge_labels_[cell.edge];
  std::string out;
  for (Vertex v : cell.support) {
    if (!out.empty()) out += ',';
    out += vertex_labels_[v];
  }
  return out;
}

std::vector<RegularPair> primitive_pairs(const SimplicialComplex& k) {
  return HasseDiagram::of(k).covers();
}

std::vector<RegularPair> primitive_pairs(const Multigraph& g) {
  return HasseDiagram::of(g).covers();
}

// ---------------------------------------------------------------------------
// Matchings and acyclicity

bool is_matching(PairSet pairs) {
  std::set<CellId> used;
  for (const auto& p : pairs)
    if (!used.insert(p.source).second || !used.insert(p.target).second) return false;
  return true;
}

bool is_acyclic(const HasseDiagram& h, PairSet pairs) {
  if (!is_matching(pairs)) throw PreconditionError("pair set is not a matching");
  // V-path digraph on sources: sigma -> sigma' when sigma' is another face of
  // the target of sigma and is itself a source. Indices never mix.
  std::map<CellId, CellId> up;
  for (const auto& p : pairs) up.emplace(p.source, p.target);
  std::map<CellId, int> state;  // 1 on stack, 2 done
  std::function<bool(CellId)> has_cycle = [&](CellId s) {
    state[s] = 1;
    for (CellId next : h.faces(up.at(s))) {
      if (next == s || !up.contains(next)) continue;
      auto it = state.find(next);
      if (it != state.end() && it->second == 1) return true;
      if (it == state.end() && has_cycle(next)) return true;
    }
    state[s] = 2;
    return false;
  };
  for (const auto& [s, t] : up)
    if (!state.contains(s) && has_cycle(s)) return false;
  return true;
}

bool compatible(const HasseDiagram& h, const RegularPair& p, const RegularPair& q) {
  if (p == q) return true;
  const std::array<RegularPair, 2> both{p, q};
  return is_matching(both) && is_acyclic(h, both);
}

std::vector<FPath> find_f_cycles(const HasseDiagram& h, PairSet pairs) {
  std::vector<RegularPair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();

  // Arc p -> q: same index, s(q) a face of t(p) other than s(p).
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = sorted[i];
      const auto& q = sorted[j];
      if (p.index != q.index || q.source == p.source) continue;
      const auto& faces = h.faces(p.target);
      if (std::find(faces.begin(), faces.end(), q.source) != faces.end())
        next[i].push_back(j);
    }

  std::vector<FPath> cycles;
  std::vector<std::size_t> path;
  std::set<CellId> used;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start,
                                                              std::size_t at) {
    for (std::size_t j : next[at]) {
      if (j == start) {
        if (path.size() >= 2) {
          FPath cycle{sorted[start].index, {}, true};
          for (std::size_t k : path) cycle.steps.push_back(sorted[k]);
          cycles.push_back(std::move(cycle));
        }
        continue;
      }
      if (j < start) continue;
      const auto& q = sorted[j];
      if (used.contains(q.source) || used.contains(q.target)) continue;
      used.insert(q.source);
      used.insert(q.target);
      path.push_back(j);
      extend(start, j);
      path.pop_back();
      used.erase(q.source);
      used.erase(q.target);
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used = {sorted[s].source, sorted[s].target};
    path = {s};
    extend(s, s);
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Morse complex enumeration

MorseBudget MorseBudget::from_environment() {
  MorseBudget b;
  if (const char* s = std::getenv("MORSE_BUDGET_SECONDS")) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end != s && v > 0) b.max_seconds = std::chrono::duration<double>(v);
  }
  return b;
}

namespace {

class FacetEnumerator {
 public:
  FacetEnumerator(const HasseDiagram& h, const MorseBudget& budget)
      : h_(h), covers_(h.covers()), budget_(budget),
        match_(h.num_cells(), -1), stamp_(h.num_cells(), 0) {
    const std::size_t n = covers_.size();
    // A cover excluded while still addable is settled once every cover that
    // could block it has been decided: same index (matching or cycle), or an
    // index-up cover whose source is this target.
    std::map<int, std::size_t> last_of_index;
    std::vector<std::size_t> last_as_source(h.num_cells(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      last_of_index[covers_[i].index] = i;
      last_as_source[covers_[i].source] = i;
    }
    settled_at_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      settled_at_[i] = std::max(last_of_index[covers_[i].index],
                                last_as_source[covers_[i].target]);
    start_ = std::chrono::steady_clock::now();
  }

  std::vector<Simplex> run() {
    if (!covers_.empty()) descend(0);
    std::sort(facets_.begin(), facets_.end());
    return std::move(facets_);
  }

 private:
  bool up_matched(CellId c) const {
    return match_[c] >= 0 && h_.dim(match_[c]) > h_.dim(c);
  }

  // Would reversing sigma -> tau close a V-path cycle?
  bool closes_cycle(CellId sigma, CellId tau) {
    ++epoch_;
    stack_.clear();
    stack_.push_back(tau);
    stamp_[tau] = epoch_;
    while (!stack_.empty()) {
      CellId rho = stack_.back();
      stack_.pop_back();
      for (CellId face : h_.faces(rho)) {
        if (face == sigma) {
          if (rho != tau) return true;
          continue;
        }
        if (!up_matched(face) || match_[face] == rho) continue;
        CellId up = match_[face];
        if (stamp_[up] != epoch_) {
          stamp_[up] = epoch_;
          stack_.push_back(up);
        }
      }
    }
    return false;
  }

  bool addable(std::size_t c) {
    const auto& p = covers_[c];
    return match_[p.source] < 0 && match_[p.target] < 0 &&
           !closes_cycle(p.source, p.target);
  }

  void check_budget() {
    if ((++nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.max_seconds)
      throw BudgetExceeded("Morse complex enumeration exceeded " +
                           std::to_string(budget_.max_seconds.count()) + " s");
  }

  void descend(std::size_t i) {
    check_budget();
    if (i > 0)
      for (std::size_t c : pending_)
        if (settled_at_[c] == i - 1 && addable(c)) return;
    if (i == covers_.size()) {
      if (facets_.size() >= budget_.max_facets)
        throw BudgetExceeded("Morse complex has more than " +
                             std::to_string(budget_.max_facets) + " facets");
      facets_.push_back(Simplex::from_sorted(chosen_));
      return;
    }
    const auto& p = covers_[i];
    if (addable(i)) {
      match_[p.source] = p.target;
      match_[p.target] = p.source;
      chosen_.push_back(static_cast<Vertex>(i));
      descend(i + 1);
      chosen_.pop_back();
      match_[p.source] = match_[p.target] = -1;
      pending_.push_back(i);
      descend(i + 1);
      pending_.pop_back();
    } else {
      descend(i + 1);
    }
  }

  const HasseDiagram& h_;
  const std::vector<RegularPair>& covers_;
  MorseBudget budget_;
  std::vector<CellId> match_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<CellId> stack_;
  std::vector<std::size_t> settled_at_;
  std::vector<std::size_t> pending_;
  std::vector<Vertex> chosen_;
  std::vector<Simplex> facets_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

namespace {

std::vector<std::vector<Vertex>> compatibility_graph(const HasseDiagram& h) {
  const auto& covers = h.covers();
  const std::size_t n = covers.size();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (compatible(h, covers[i], covers[j])) {
        adjacency[i].push_back(static_cast<Vertex>(j));
        adjacency[j].push_back(static_cast<Vertex>(i));
      }
  return adjacency;
}

}  // namespace

std::vector<Simplex> chordless_f_cycles(const HasseDiagram& h,
                                        const MorseBudget& budget) {
  const auto& covers = h.covers();
  const std::size_t n = covers.size();
  // Pair digraph: p -> q when q continues a V-path through the target of p.
  std::vector<char> arc(n * n, 0);
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t i = 0; i < n; ++i)
    for (CellId face : h.faces(covers[i].target)) {
      if (face == covers[i].source) continue;
      for (CellId up : h.cofaces(face)) {
        auto j = h.pair_id({face, up, covers[i].index});
        if (!j) continue;
        arc[i * n + *j] = 1;
        next[i].push_back(*j);
      }
    }
  for (auto& nx : next) std::sort(nx.begin(), nx.end());

  const auto start = std::chrono::steady_clock::now();
  std::uint64_t steps = 0;
  std::vector<Simplex> out;
  std::vector<std::size_t> path;
  std::vector<char> used(h.num_cells(), 0);
  auto claim = [&](std::size_t p, char value) {
    used[covers[p].source] = used[covers[p].target] = value;
  };
  // Extends a chordless path; closing it back to its first pair records a
  // circuit. Paths start at their least pair so each circuit is found once
  // per orientation, and a set of pairs carries a single orientation.
  std::function<void()> extend = [&] {
    if ((++steps & 0xfff) == 0 &&
        std::chrono::steady_clock::now() - start > budget.max_seconds)
      throw BudgetExceeded("f-cycle enumeration exceeded the time budget");
    const std::size_t last = path.back();
    for (std::size_t q : next[last]) {
      if (q <= path.front()) continue;
      if (used[covers[q].source] || used[covers[q].target]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
        chord = arc[path[i] * n + q];
      for (std::size_t i = 1; i < path.size() && !chord; ++i)
        chord = arc[q * n + path[i]];
      if (chord) continue;
      if (arc[q * n + path.front()]) {
        if (path.size() >= 2) {
          std::vector<Vertex> ids(path.begin(), path.end());
          ids.push_back(static_cast<Vertex>(q));
          out.push_back(Simplex(std::move(ids)));
        }
        continue;
      }
      claim(q, 1);
      path.push_back(q);
      extend();
      path.pop_back();
      claim(q, 0);
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    claim(s, 1);
    extend();
    claim(s, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MorseComplex::MorseComplex(HasseDiagram hasse,
                           std::vector<std::vector<Vertex>> compatibility,
                           std::vector<Simplex> circuits,
                           std::optional<FacetComplex> complex)
    : hasse_(std::move(hasse)), compat_(std::move(compatibility)),
      circuits_(std::move(circuits)), complex_(std::move(complex)) {
  compat_.resize(hasse_.covers().size());
}

MorseComplex morse_structure(HasseDiagram h, const MorseBudget& budget) {
  auto compat = compatibility_graph(h);
  auto circuits = chordless_f_cycles(h, budget);
  return MorseComplex(std::move(h), std::move(compat), std::move(circuits));
}

MorseComplex morse_structure(const SimplicialComplex& k, const MorseBudget& budget) {
  return morse_structure(HasseDiagram::of(k), budget);
}

MorseComplex morse_structure(const Multigraph& g, const MorseBudget& budget) {
  return morse_structure(HasseDiagram::of(g), budget);
}

MorseComplex morse_complex(HasseDiagram h, const MorseBudget& budget) {
  auto facets = FacetEnumerator(h, budget).run();
  auto compat = compatibility_graph(h);
  auto circuits = chordless_f_cycles(h, budget);
  auto complex = FacetComplex::from_maximal(h.covers().size(), std::move(facets), compat);
  return MorseComplex(std::move(h), std::move(compat), std::move(circuits),
                      std::move(complex));
}

MorseComplex morse_complex(const SimplicialComplex& k, const MorseBudget& budget) {
  return morse_complex(HasseDiagram::of(k), budget);
}

MorseComplex morse_complex(const Multigraph& g, const MorseBudget& budget) {
  return morse_complex(HasseDiagram::of(g), budget);
}

const FacetComplex& MorseComplex::complex() const {
  if (!complex_) throw PreconditionError("Morse complex facets were not enumerated");
  return *complex_;
}

bool MorseComplex::compatible(std::size_t p, std::size_t q) const {
  if (p == q) return true;
  const auto& adj = compat_[p];
  return std::binary_search(adj.begin(), adj.end(), static_cast<Vertex>(q));
}

bool MorseComplex::is_simplex(const Simplex& pair_ids) const {
  std::vector<RegularPair> pairs;
  for (Vertex id : pair_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= num_pairs()) return false;
    pairs.push_back(pair(id));
  }
  return is_matching(pairs) && is_acyclic(hasse_, pairs);
}

ComplexDescription MorseComplex::description() const {
  std::vector<Vertex> all(num_pairs());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return {num_pairs(), std::move(all), &compat_, &circuits_};
}

std::string MorseComplex::describe(std::size_t id) const {
  const auto& p = pair(id);
  return hasse_.describe(p.source) + " -> " + hasse_.describe(p.target);
}

std::vector<VertexBijection> enumerate_isomorphisms(const MorseComplex& a,
                                                    const MorseComplex& b,
                                                    std::size_t limit) {
  return enumerate_isomorphisms(a.description(), b.description(), limit);
}

std::optional<VertexBijection> find_isomorphism(const MorseComplex& a,
                                                const MorseComplex& b) {
  auto all = enumerate_isomorphisms(a, b, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

bool is_isomorphism(const VertexBijection& f, const MorseComplex& a,
                    const MorseComplex& b) {
  const std::size_t n = a.num_pairs();
  if (b.num_pairs() != n || f.forward().size() != n || f.backward().size() != n ||
      f.size() != n || a.circuits().size() != b.circuits().size())
    return false;
  for (std::size_t p = 0; p < n; ++p) {
    if (a.compatibility()[p].size() != b.compatibility()[f(p)].size()) return false;
    for (Vertex q : a.compatibility()[p])
      if (!b.compatible(f(p), f(q))) return false;
  }
  std::set<Simplex> target(b.circuits().begin(), b.circuits().end());
  for (const auto& c : a.circuits())
    if (!target.contains(f.apply(c))) return false;
  return true;
}

std::vector<std::string> MorseComplex::pair_labels() const {
  const std::size_t n = num_pairs();
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    labels[i] = "p" + std::string(width - digits.size(), '0') + digits;
  }
  return labels;
}

std::vector<std::array<std::size_t, 3>> minimal_f_cycles(const MorseComplex& m) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = m.num_pairs();
  for (std::size_t a = 0; a < n; ++a)
    for (Vertex b : m.compatibility()[a]) {
      if (static_cast<std::size_t>(b) <= a) continue;
      for (Vertex c : m.compatibility()[a]) {
        if (c <= b || !m.compatible(b, c)) continue;
        const std::array<RegularPair, 3> trio{m.pair(a), m.pair(b), m.pair(c)};
        if (!is_acyclic(m.hasse(), trio))
          out.push_back({a, static_cast<std::size_t>(b), static_cast<std::size_t>(c)});
      }
    }
  return out;
}

bool adjacent_cycles(const std::array<std::size_t, 3>& a,
                     const std::array<std::size_t, 3>& b) {
  int shared = 0;
  for (auto x : a)
    for (auto y : b) shared += (x == y);
  return shared == 1;
}

// ---------------------------------------------------------------------------
// Directed forests

DirectedGraph double_graph(const Multigraph& g) {
  DirectedGraph d;
  d.num_vertices = g.num_vertices();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.boundary(static_cast<EdgeId>(e));
    d.arcs.push_back({u, v, static_cast<EdgeId>(e)});
    d.arcs.push_back({v, u, static_cast<EdgeId>(e)});
  }
  return d;
}

std::size_t arc_for_pair(const Multigraph& g, Vertex source, EdgeId edge) {
  auto [u, v] = g.boundary(edge);
  if (source != u && source != v)
    throw PreconditionError("vertex is not an endpoint of the edge");
  return 2 * static_cast<std::size_t>(edge) + (source == v ? 0 : 1);
}

FacetComplex directed_forest_complex(const DirectedGraph& d) {
  const std::size_t n = d.num_vertices;
  for (const auto& a : d.arcs)
    if (a.tail == a.head) throw PreconditionError("directed graph has a loop");

  std::vector<std::vector<std::size_t>> incoming(n);
  for (std::size_t i = 0; i < d.arcs.size(); ++i) incoming[d.arcs[i].head].push_back(i);

  // parent[v] is the chosen arc into v, or none. In-degree <= 1 holds by
  // construction; what remains is acyclicity and maximality.
  std::vector<long> parent(n, -1);
  auto ancestor = [&](Vertex from, Vertex target) {
    std::size_t steps = 0;
    for (Vertex x = from; steps <= n; ++steps) {
      if (x == target) return true;
      if (parent[x] < 0) return false;
      x = d.arcs[parent[x]].tail;
    }
    return true;  // ran around a cycle
  };
  auto acyclic = [&] {
    for (std::size_t v = 0; v < n; ++v)
      if (parent[v] >= 0 && ancestor(d.arcs[parent[v]].tail, static_cast<Vertex>(v)))
        return false;
    return true;
  };
  auto maximal = [&] {
    for (const auto& a : d.arcs)
      if (parent[a.head] < 0 && !ancestor(a.tail, a.head)) return false;
    return true;
  };

  std::vector<Simplex> facets;
  std::function<void(std::size_t)> choose = [&](std::size_t v) {
    if (v == n) {
      if (!acyclic() || !maximal()) return;
      std::vector<Vertex> arcs;
      for (long p : parent)
        if (p >= 0) arcs.push_back(static_cast<Vertex>(p));
      if (arcs.empty()) return;
      std::sort(arcs.begin(), arcs.end());
      facets.push_back(Simplex::from_sorted(std::move(arcs)));
      return;
    }
    parent[v] = -1;
    choose(v + 1);
    for (std::size_t a : incoming[v]) {
      parent[v] = static_cast<long>(a);
      choose(v + 1);
    }
    parent[v] = -1;
  };
  choose(0);
  return FacetComplex(d.arcs.size(), std::move(facets));
}

ForestComparison compare_with_forests(const Multigraph& g, const MorseBudget& budget) {
  const auto m = morse_complex(g, budget);
  std::vector<Simplex> mapped;
  for (const auto& facet : m.facets()) {
    std::vector<Vertex> arcs;
    for (Vertex p : facet) {
      const auto& rp = m.pair(p);
      arcs.push_back(static_cast<Vertex>(arc_for_pair(g, rp.source, m.hasse().cell(rp.target).edge)));
    }
    mapped.push_back(Simplex(std::move(arcs)));
  }
  std::sort(mapped.begin(), mapped.end());
  const auto forests = directed_forest_complex(double_graph(g));
  return {m.num_pairs(), forests.universe_size(), mapped.size(), forests.facets().size(),
          mapped == forests.facets() && forests.universe_size() == m.num_pairs()};
}

}  // namespace dmt
