#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpmtk/lpmfan.hpp"
#include "lpmtk/subdivision.hpp"

namespace lpmtk {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;  // documented exclusion, reported but not evaluated
  std::string details;
  double seconds = 0.0;

  bool ok() const { return pass || skipped; }
};

/// The bundled reference checks: exact reproductions of the documented
/// quantities for Delta(3,6) and Delta(4,8) plus the randomized equivalence
/// suites. Expensive intermediates (the LPMfan, volumes) are shared across
/// checks.
class ReferenceChecks {
 public:
  ReferenceChecks();
  ~ReferenceChecks();

  CheckResult split_sum_identity();         // 1
  CheckResult split_refinement_snakes();    // 2
  CheckResult finest_cell_count();          // 3
  CheckResult hypersimplex_split_census();  // 4
  CheckResult lpm_split_census_and_fan();   // 5
  CheckResult fan_weights_positive();       // 6
  CheckResult plucker_equivalences();       // 7
  CheckResult minor_recurrence();           // 8
  CheckResult certificate_matrices();       // 9
  CheckResult combinatorial_spot_values();  // 10
  CheckResult volume_oracle();              // 11
  CheckResult delta48_subdivision();        // 12
  CheckResult exclusions_note();            // 13

  std::vector<CheckResult> run_all();
  std::vector<CheckResult> run_delta36();
  std::vector<CheckResult> run_delta48();
  CheckResult bcfw_collection_report(int n, int k);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Permutations of [n] with exactly `descents` descents, counted directly.
/// Serves as the independent oracle for hypersimplex volumes.
long eulerian_number(int n, int descents);

std::string format_results(const std::vector<CheckResult>& results);

}  // namespace lpmtk
