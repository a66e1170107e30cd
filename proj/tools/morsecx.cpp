#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dmt/acceptance.hpp"
#include "dmt/errors.hpp"
#include "dmt/invariants.hpp"
#include "dmt/io.hpp"
#include "dmt/reconstruction.hpp"

using namespace dmt;

namespace {

enum Exit { kOk = 0, kNegative = 1, kBudget = 2, kHypothesis = 3 };

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void print_report(const InvariantReport& r) {
  std::cout << "f_vector=" << join(r.f_vector) << '\n'
            << "euler=" << r.euler << '\n'
            << "components=" << r.components << '\n'
            << "betti_mod2=" << join(r.betti_mod2) << '\n'
            << "collapsible=" << (r.collapsible ? "true" : "false") << '\n';
}

void print_map(const VertexBijection& f, const std::vector<std::string>& from,
               const std::vector<std::string>& to, const std::string& prefix = "") {
  for (std::size_t v = 0; v < f.forward().size(); ++v)
    if (f.forward()[v] != kNoVertex)
      std::cout << prefix << from[v] << " -> " << to[f.forward()[v]] << '\n';
}

SimplicialComplex load_complex(const std::string& path) {
  return parse_complex(read_file(path));
}

Multigraph load_multigraph(const std::string& path) {
  return parse_multigraph(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Morse complexes and reconstruction of complexes from them"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t budget_facets = MorseBudget{}.max_facets;
  std::optional<double> budget_seconds;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  int max_vertices = AcceptanceOptions{}.max_vertices;
  bool multigraph = false;
  bool of_morse = false;
  std::string a_path, b_path, target;

  app.add_option("--budget-facets", budget_facets, "facet limit for Morse complexes");
  app.add_option("--budget-seconds", budget_seconds,
                 "time limit per enumeration (default MORSE_BUDGET_SECONDS or 60)");
  app.add_option("--seed", seed, "seed for randomized corpora");
  app.add_option("--max-vertices", max_vertices, "vertex bound for exhaustive corpora");

  auto* build = app.add_subcommand("build", "print M(K) with its pair table");
  build->add_option("input", a_path)->required();
  build->add_flag("--multigraph", multigraph, "input is a multigraph file");

  auto* stats = app.add_subcommand("stats", "invariants as key=value lines");
  stats->add_option("input", a_path)->required();
  stats->add_flag("--multigraph", multigraph, "input is a multigraph file");
  stats->add_flag("--morse", of_morse, "report on M(K) instead of K");

  auto* iso = app.add_subcommand("iso", "isomorphism between two inputs");
  iso->add_option("a", a_path)->required();
  iso->add_option("b", b_path)->required();

  auto* rec = app.add_subcommand("reconstruct",
                                 "vertex map read off an isomorphism M(A) -> M(B)");
  rec->add_option("a", a_path)->required();
  rec->add_option("b", b_path)->required();
  rec->add_flag("--multigraph", multigraph, "inputs are multigraph files");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("target", target)->required()->check(CLI::IsMember({"corpus"}));

  auto* kozlov = app.add_subcommand("kozlov", "check M(G) against the directed forest complex");
  kozlov->add_option("input", a_path)->required();
  kozlov->add_flag("--multigraph", multigraph, "input is a multigraph file");

  CLI11_PARSE(app, argc, argv);

  MorseBudget budget = MorseBudget::from_environment();
  budget.max_facets = budget_facets;
  if (budget_seconds) budget.max_seconds = std::chrono::duration<double>(*budget_seconds);

  try {
    if (*build) {
      const auto m = multigraph ? morse_complex(load_multigraph(a_path), budget)
                                : morse_complex(load_complex(a_path), budget);
      std::cout << serialize_morse(m);
      return kOk;
    }

    if (*stats) {
      if (multigraph) {
        const auto g = load_multigraph(a_path);
        if (of_morse) {
          print_report(invariants(morse_complex(g, budget).materialize()));
        } else {
          const auto s = simplify(g);
          const std::size_t c = count_components(s.graph);
          std::cout << "f_vector=" << g.num_vertices() << ',' << g.num_edges() << '\n'
                    << "euler=" << static_cast<long>(g.num_vertices()) -
                                       static_cast<long>(g.num_edges())
                    << '\n'
                    << "components=" << c << '\n'
                    << "betti_mod2=" << c << ',' << g.num_edges() + c - g.num_vertices()
                    << '\n';
        }
        return kOk;
      }
      const auto k = load_complex(a_path);
      print_report(of_morse ? invariants(morse_complex(k, budget).materialize()) : invariants(k));
      return kOk;
    }

    if (*iso) {
      const auto k = load_complex(a_path);
      const auto l = load_complex(b_path);
      const auto f = find_isomorphism(k, l);
      if (!f) {
        std::cout << "no isomorphism\n";
        return kNegative;
      }
      print_map(*f, k.labels(), l.labels());
      return kOk;
    }

    if (*rec) {
      if (multigraph) {
        const auto g = load_multigraph(a_path);
        const auto h = load_multigraph(b_path);
        const auto mg = morse_complex(g, budget);
        const auto mh = morse_complex(h, budget);
        const auto f = find_isomorphism(mg, mh);
        if (!f) {
          std::cout << "no isomorphism of Morse complexes\n";
          return kNegative;
        }
        const auto r = reconstruct_multigraph_iso(g, h, *f, budget);
        print_map(r.vertices, g.vertex_labels(), h.vertex_labels());
        print_map(r.edges, g.edge_labels(), h.edge_labels(), "edge ");
        return kOk;
      }
      const auto k = load_complex(a_path);
      const auto l = load_complex(b_path);
      const auto f = find_isomorphism(morse_structure(k, budget), morse_structure(l, budget));
      if (!f) {
        std::cout << "no isomorphism of Morse complexes\n";
        return kNegative;
      }
      if (auto a = detect_index_anomaly(k, l, *f))
        std::cout << "# pair " << a->pair << " of index 0 maps to index " << a->image_index
                  << (a->inverse ? " under the inverse" : "") << '\n';
      print_map(reconstruct_complex_iso(k, l, *f, budget), k.labels(), l.labels());
      return kOk;
    }

    if (*verify) {
      AcceptanceOptions options;
      options.seed = seed;
      options.budget = budget;
      options.max_vertices = max_vertices;
      bool ok = true;
      run_acceptance(options, [&](const CriterionResult& r) {
        ok = ok && r.passed;
        std::cout << format_result(r, false) << std::endl;
      });
      return ok ? kOk : kNegative;
    }

    if (*kozlov) {
      const auto g = multigraph ? load_multigraph(a_path) : as_multigraph(load_complex(a_path));
      const auto c = compare_with_forests(g, budget);
      std::cout << "pairs=" << c.pairs << '\n'
                << "arcs=" << c.arcs << '\n'
                << "facets=" << c.morse_facets << '\n'
                << "forest_facets=" << c.forest_facets << '\n'
                << "identity=" << (c.equal ? "holds" : "fails") << '\n';
      return c.equal ? kOk : kNegative;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kOk;
}
