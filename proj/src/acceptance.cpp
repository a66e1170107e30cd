#include "dmt/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "dmt/corpus.hpp"
#include "dmt/errors.hpp"
#include "dmt/invariants.hpp"
#include "dmt/reconstruction.hpp"

namespace dmt {

namespace {

// Cheap isomorphism invariant of a Morse complex: per pair, its degree and
// the sizes of the circuits through it.
std::vector<std::vector<std::size_t>> signature(const MorseComplex& m) {
  std::vector<std::vector<std::size_t>> per(m.num_pairs());
  for (std::size_t p = 0; p < m.num_pairs(); ++p) per[p].push_back(m.compatibility()[p].size());
  for (const auto& c : m.circuits())
    for (Vertex p : c) per[p].push_back(c.size());
  for (auto& s : per) std::sort(s.begin() + 1, s.end());
  std::sort(per.begin(), per.end());
  return per;
}

bool morse_isomorphic(const MorseComplex& a, const MorseComplex& b,
                      const std::vector<std::vector<std::size_t>>& sa,
                      const std::vector<std::vector<std::size_t>>& sb) {
  if (a.num_pairs() != b.num_pairs() || a.circuits().size() != b.circuits().size() || sa != sb)
    return false;
  return find_isomorphism(a, b).has_value();
}

std::vector<SimplicialComplex> small_graphs(int lo, int hi) {
  std::vector<SimplicialComplex> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

// Independent acyclicity oracle: flip the matched covers of the Hasse
// diagram and look for a directed cycle with Kahn's algorithm.
bool oracle_acyclic_matching(const HasseDiagram& h, const std::vector<RegularPair>& pairs) {
  std::vector<int> uses(h.num_cells(), 0);
  for (const auto& p : pairs)
    if (++uses[p.source] > 1 || ++uses[p.target] > 1) return false;
  std::set<std::pair<CellId, CellId>> matched;
  for (const auto& p : pairs) matched.insert({p.source, p.target});
  const std::size_t n = h.num_cells();
  std::vector<std::vector<CellId>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& c : h.covers()) {
    if (matched.contains({c.source, c.target})) {
      out[c.source].push_back(c.target);
      ++indeg[c.target];
    } else {
      out[c.target].push_back(c.source);
      ++indeg[c.source];
    }
  }
  std::vector<CellId> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(static_cast<CellId>(v));
  std::size_t seen = 0;
  while (!ready.empty()) {
    CellId v = ready.back();
    ready.pop_back();
    ++seen;
    for (CellId w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

std::vector<Simplex> oracle_facets(const HasseDiagram& h) {
  const auto& covers = h.covers();
  const std::size_t n = covers.size();
  std::vector<char> ok(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<RegularPair> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) chosen.push_back(covers[i]);
    ok[mask] = oracle_acyclic_matching(h, chosen);
  }
  std::vector<Simplex> facets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!ok[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(mask >> i & 1) && ok[mask | (1u << i)]) maximal = false;
    if (!maximal) continue;
    std::vector<Vertex> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) ids.push_back(static_cast<Vertex>(i));
    facets.push_back(Simplex::from_sorted(std::move(ids)));
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

template <class Body>
CriterionResult timed(int id, std::string name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "error: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string str(std::size_t n) { return std::to_string(n); }

}  // namespace

CriterionResult check_graph_lemma(const AcceptanceOptions& o) {
  return timed(1, "graph lemma", [&](CriterionResult& r) {
    auto graphs = small_graphs(3, 6);
    const std::size_t exhaustive = graphs.size();
    Rng rng(o.seed);
    auto sample = random_connected_graphs(7, o.random_graphs, rng);
    const std::size_t sampled = sample.size();
    for (auto& g : sample) graphs.push_back(std::move(g));
    std::size_t bad = 0;
    for (const auto& g : graphs) {
      const auto m = morse_complex(g, o.budget);
      const auto fv = g.f_vector();
      if (m.num_pairs() != 2 * fv[1] || m.dim() != static_cast<int>(fv[0]) - 2) ++bad;
    }
    r.passed = bad == 0 && sampled >= o.random_graphs;
    r.detail = str(exhaustive) + " graphs on 3-6 vertices, " + str(sampled) +
               " sampled on 7; " + str(bad) + " violate |V_M| = 2|E| or dim = |V| - 2";
  });
}

CriterionResult check_kozlov_identity(const AcceptanceOptions& o) {
  return timed(2, "directed forest identity", [&](CriterionResult& r) {
    const auto graphs = small_graphs(1, 6);
    std::size_t bad = 0;
    for (const auto& k : graphs)
      if (!compare_with_forests(as_multigraph(k), o.budget).equal) ++bad;
    r.passed = bad == 0;
    r.detail = str(graphs.size()) + " connected graphs on <= 6 vertices; " + str(bad) +
               " differ";
  });
}

CriterionResult check_leaf_characterization(const AcceptanceOptions& o) {
  return timed(3, "leaf characterization", [&](CriterionResult& r) {
    const auto graphs = small_graphs(2, 6);
    std::size_t bad = 0, checked = 0;
    for (const auto& g : graphs) {
      const auto m = morse_structure(g, o.budget);
      const auto adj = g.adjacency();
      const std::size_t edges = g.f_vector()[1];
      for (std::size_t p = 0; p < m.num_pairs(); ++p) {
        const Vertex v = m.hasse().cell(m.pair(p).source).support[0];
        const bool leaf = adj[v].size() == 1;
        const bool degree_says = m.compatibility()[p].size() == 2 * edges - 2;
        ++checked;
        if (leaf != degree_says) ++bad;
      }
    }
    r.passed = bad == 0;
    r.detail = str(checked) + " pairs over " + str(graphs.size()) + " graphs; " + str(bad) +
               " disagree";
  });
}

CriterionResult check_wedge_of_circles(const AcceptanceOptions& o) {
  return timed(4, "wedge of circles", [&](CriterionResult& r) {
    const auto two = invariants(morse_complex(full_simplex(2), o.budget).materialize());
    const auto one = invariants(morse_complex(full_simplex(1), o.budget).materialize());
    auto trimmed = two.betti_mod2;
    while (trimmed.size() > 1 && trimmed.back() == 0) trimmed.pop_back();
    const bool betti = trimmed == std::vector<std::size_t>{1, 4};
    r.passed = two.euler == -3 && betti && one.components == 2 && one.euler == 2;
    std::ostringstream d;
    d << "M(D2): euler=" << two.euler << " betti=(";
    for (std::size_t i = 0; i < two.betti_mod2.size(); ++i)
      d << (i ? "," : "") << two.betti_mod2[i];
    d << "); M(D1): components=" << one.components << " euler=" << one.euler;
    r.detail = d.str();
  });
}

CriterionResult check_homotopy_counterexample(const AcceptanceOptions& o) {
  return timed(5, "homotopy counterexample", [&](CriterionResult& r) {
    const std::vector<Simplex> g_edges{{0, 1}, {0, 2}};
    const std::vector<Simplex> h_edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
    const auto g = closure(g_edges, {"u", "v", "w"});
    const auto h = closure(h_edges, {"a", "b", "c", "d"});
    const auto mg = morse_complex(g, o.budget).materialize();
    const auto mh = morse_complex(h, o.budget).materialize();
    const bool cg = greedy_collapse(mg).has_value();
    const bool ch = greedy_collapse(mh).has_value();
    const bool iso = find_isomorphism(g, h).has_value();
    const long eg = invariants(g).euler;
    const long eh = invariants(h).euler;
    r.passed = cg && ch && !iso && eg == 1 && eh == 0;
    r.detail = std::string("collapse M(G)=") + (cg ? "yes" : "no") +
               " M(G')=" + (ch ? "yes" : "no") + "; G iso G'=" + (iso ? "yes" : "no") +
               "; euler " + std::to_string(eg) + " vs " + std::to_string(eh);
  });
}

CriterionResult check_complex_reconstruction(const AcceptanceOptions& o) {
  return timed(6, "complex reconstruction", [&](CriterionResult& r) {
    const auto corpus = connected_complexes(o.max_vertices);
    Rng rng(o.seed ^ 0x6a09e667f3bcc908ull);
    std::vector<MorseComplex> morse;
    std::vector<std::vector<std::vector<std::size_t>>> sig;
    for (const auto& k : corpus) {
      morse.push_back(morse_structure(k, o.budget));
      sig.push_back(signature(morse.back()));
    }
    std::size_t mismatches = 0, searched = 0, reconstructed = 0, anomalies = 0;
    std::string first_failure;
    auto fail = [&](const std::string& what) {
      ++mismatches;
      if (first_failure.empty()) first_failure = what;
    };
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      // Same class: a random relabelling must be recovered.
      const auto [h, l] = random_relabel(corpus[i], rng);
      const auto ml = morse_structure(l, o.budget);
      // Every isomorphism for the boundary of the tetrahedron, where indices
      // can mix; the first few elsewhere.
      const bool all = is_boundary_simplex(corpus[i]) == 3;
      const auto witnesses = enumerate_isomorphisms(morse[i], ml, all ? SIZE_MAX : 8);
      if (witnesses.empty() || !find_isomorphism(corpus[i], l)) {
        fail("no isomorphism found for complex #" + str(i) + " and its relabelling");
        continue;
      }
      for (const auto& f : witnesses) {
        if (detect_index_anomaly(corpus[i], l, f)) ++anomalies;
        const auto g = reconstruct_complex_iso(corpus[i], l, f, o.budget);
        if (!is_isomorphism(g, corpus[i], l))
          fail("reconstruction of complex #" + str(i) + " is not an isomorphism");
        ++reconstructed;
      }
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        const bool same_shape = sig[i] == sig[j];
        searched += same_shape;
        const bool m_iso = morse_isomorphic(morse[i], morse[j], sig[i], sig[j]);
        const bool k_iso = find_isomorphism(corpus[i], corpus[j]).has_value();
        if (m_iso != k_iso) fail("complexes #" + str(i) + ", #" + str(j) + " disagree");
        if (m_iso) {
          const auto f = *find_isomorphism(morse[i], morse[j]);
          const auto g = reconstruct_complex_iso(corpus[i], corpus[j], f, o.budget);
          if (!is_isomorphism(g, corpus[i], corpus[j])) fail("reconstruction failed");
          ++reconstructed;
        }
      }
    }
    const std::size_t pairs = corpus.size() * (corpus.size() + 1) / 2;
    r.passed = mismatches == 0;
    r.detail = str(corpus.size()) + " complexes on <= " + std::to_string(o.max_vertices) +
               " vertices, " + str(pairs) + " pairs (" + str(searched) +
               " distinct pairs needed a full search); " + str(reconstructed) +
               " isomorphisms reconstructed, " + str(anomalies) + " mixed indices; " +
               str(mismatches) + " failures" + (first_failure.empty() ? "" : ": " + first_failure);
  });
}

CriterionResult check_multigraph_reconstruction(const AcceptanceOptions& o) {
  return timed(7, "multigraph reconstruction", [&](CriterionResult& r) {
    const auto corpus = connected_multigraphs(o.max_multigraph_vertices, 3);
    Rng rng(o.seed ^ 0xbb67ae8584caa73bull);
    std::vector<MorseComplex> morse;
    std::vector<std::vector<std::vector<std::size_t>>> sig;
    for (const auto& g : corpus) {
      morse.push_back(morse_complex(g, o.budget));
      sig.push_back(signature(morse.back()));
    }
    std::size_t mismatches = 0, reconstructed = 0, parallel_checks = 0;
    std::string first_failure;
    auto fail = [&](const std::string& what) {
      ++mismatches;
      if (first_failure.empty()) first_failure = what;
    };
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& g = corpus[i];
      if (g.num_vertices() >= 3)
        for (std::size_t p = 0; p < morse[i].num_pairs(); ++p)
          for (std::size_t q = 0; q < morse[i].num_pairs(); ++q) {
            ++parallel_checks;
            if (parallel_pairs(morse[i], g, p, q) != literally_parallel(morse[i], g, p, q))
              fail("parallel pair test disagrees on multigraph #" + str(i));
          }
      const auto h = random_relabel(g, rng);
      const auto mh = morse_complex(h, o.budget);
      const auto witnesses = enumerate_isomorphisms(morse[i], mh, 8);
      if (witnesses.empty() || !multigraphs_isomorphic(g, h)) {
        fail("no isomorphism found for multigraph #" + str(i) + " and its relabelling");
        continue;
      }
      for (const auto& f : witnesses) {
        const auto iso = reconstruct_multigraph_iso(g, h, f, o.budget);
        if (!is_isomorphism(iso, g, h)) fail("reconstruction failed on #" + str(i));
        ++reconstructed;
      }
      for (std::size_t j = i + 1; j < corpus.size(); ++j) {
        const bool m_iso = morse_isomorphic(morse[i], morse[j], sig[i], sig[j]);
        const bool g_iso = multigraphs_isomorphic(g, corpus[j]);
        if (m_iso != g_iso) fail("multigraphs #" + str(i) + ", #" + str(j) + " disagree");
      }
    }
    r.passed = mismatches == 0;
    r.detail = str(corpus.size()) + " multigraphs on <= " +
               std::to_string(o.max_multigraph_vertices) + " vertices, multiplicity <= 3; " +
               str(reconstructed) + " isomorphisms reconstructed, " + str(parallel_checks) +
               " parallel-pair checks; " + str(mismatches) + " failures" +
               (first_failure.empty() ? "" : ": " + first_failure);
  });
}

CriterionResult check_functoriality(const AcceptanceOptions& o) {
  return timed(8, "functoriality roundtrip", [&](CriterionResult& r) {
    Rng rng(o.seed ^ 0x3c6ef372fe94f82bull);
    std::size_t done = 0, exact = 0, graphs = 0, skipped = 0;
    while (done < o.roundtrips) {
      const auto k = random_connected_complex(7, rng);
      if (is_boundary_simplex(k) || is_cycle_graph(skeleton(k, 1))) {
        ++skipped;
        continue;
      }
      const auto [h, l] = random_relabel(k, rng);
      const auto f = morse_map(k, l, h);
      bool ok = reconstruct_complex_iso(k, l, f, o.budget) == h;
      if (k.dim() == 1) {
        ++graphs;
        ok = ok && reconstruct_graph_iso(k, l, f) == h;
      }
      exact += ok;
      ++done;
    }
    r.passed = exact == done;
    r.detail = str(exact) + "/" + str(done) + " maps recovered exactly (" + str(graphs) +
               " graphs; " + str(skipped) + " excluded draws resampled)";
  });
}

CriterionResult check_oracle_equivalence(const AcceptanceOptions& o) {
  return timed(9, "oracle equivalence", [&](CriterionResult& r) {
    std::vector<HasseDiagram> cases;
    for (int n = 1; n <= 5; ++n)
      for (const auto& k : complexes_on(n, false)) {
        auto h = HasseDiagram::of(k);
        if (h.covers().size() <= 12) cases.push_back(std::move(h));
      }
    for (const auto& g : connected_multigraphs(4, 3)) {
      auto h = HasseDiagram::of(g);
      if (h.covers().size() <= 12) cases.push_back(std::move(h));
    }
    std::size_t bad = 0;
    for (const auto& h : cases)
      if (morse_complex(h, o.budget).facets() != oracle_facets(h)) ++bad;
    r.passed = bad == 0;
    r.detail = str(cases.size()) + " complexes and multigraphs with <= 12 covers; " +
               str(bad) + " differ from the power-set oracle";
  });
}

CriterionResult check_minimal_cycle(const AcceptanceOptions& o) {
  return timed(10, "minimal f-cycle", [&](CriterionResult& r) {
    const auto c3 = cycle_graph(3);
    const auto m = morse_complex(c3, o.budget);
    const auto cycles = minimal_f_cycles(m);
    bool ok = cycles.size() == 2;
    for (const auto& c : cycles) {
      std::vector<RegularPair> pairs;
      for (auto p : c) pairs.push_back(m.pair(p));
      ok = ok && m.compatible(c[0], c[1]) && m.compatible(c[0], c[2]) &&
           m.compatible(c[1], c[2]) && is_matching(pairs) && !is_acyclic(m.hasse(), pairs);
      // Induced subcomplex of M(C3) on the three pairs.
      std::vector<Simplex> traces;
      for (const auto& f : m.facets()) {
        std::vector<Vertex> t;
        for (auto p : c)
          if (f.contains(static_cast<Vertex>(p))) t.push_back(static_cast<Vertex>(p));
        if (!t.empty()) traces.push_back(Simplex::from_sorted(std::move(t)));
      }
      const FacetComplex spanned(m.num_pairs(), std::move(traces));
      std::vector<Simplex> boundary{
          Simplex{static_cast<Vertex>(c[0]), static_cast<Vertex>(c[1])},
          Simplex{static_cast<Vertex>(c[0]), static_cast<Vertex>(c[2])},
          Simplex{static_cast<Vertex>(c[1]), static_cast<Vertex>(c[2])}};
      ok = ok && spanned.facets() == boundary;
    }
    r.passed = ok;
    r.detail = str(cycles.size()) +
               " consistently oriented triples in M(C3); each pairwise compatible, jointly "
               "cyclic, spanning an empty triangle: " +
               (ok ? "yes" : "no");
  });
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& o, const std::function<void(const CriterionResult&)>& report) {
  using Check = CriterionResult (*)(const AcceptanceOptions&);
  const Check checks[] = {check_graph_lemma,           check_kozlov_identity,
                          check_leaf_characterization, check_wedge_of_circles,
                          check_homotopy_counterexample, check_complex_reconstruction,
                          check_multigraph_reconstruction, check_functoriality,
                          check_oracle_equivalence,    check_minimal_cycle};
  std::vector<CriterionResult> out;
  for (Check c : checks) {
    out.push_back(c(o));
    if (report) report(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  std::string out = std::string(r.passed ? "PASS" : "FAIL") + "  " + (r.id < 10 ? " " : "") +
                    std::to_string(r.id) + "  " + r.name + ": " + r.detail;
  if (with_time) {
    char time[32];
    std::snprintf(time, sizeof time, " (%.1f s)", r.seconds);
    out += time;
  }
  return out;
}

}  // namespace dmt
