#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dmt/morse.hpp"

namespace dmt {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  MorseBudget budget;
  int max_vertices = 5;           // complexes in the exhaustive reconstruction run
  int max_multigraph_vertices = 4;
  std::size_t random_graphs = 200;
  std::size_t roundtrips = 1000;
};

CriterionResult check_graph_lemma(const AcceptanceOptions& o);
CriterionResult check_kozlov_identity(const AcceptanceOptions& o);
CriterionResult check_leaf_characterization(const AcceptanceOptions& o);
CriterionResult check_wedge_of_circles(const AcceptanceOptions& o);
CriterionResult check_homotopy_counterexample(const AcceptanceOptions& o);
CriterionResult check_complex_reconstruction(const AcceptanceOptions& o);
CriterionResult check_multigraph_reconstruction(const AcceptanceOptions& o);
CriterionResult check_functoriality(const AcceptanceOptions& o);
CriterionResult check_oracle_equivalence(const AcceptanceOptions& o);
CriterionResult check_minimal_cycle(const AcceptanceOptions& o);

// Runs every criterion in order; `report` sees each result as it finishes.
// A criterion that throws is reported as failed with the message.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& o,
    const std::function<void(const CriterionResult&)>& report = {});

// "PASS   3  name: detail (1.2 s)"; the time is left out for reproducible output.
std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace dmt
