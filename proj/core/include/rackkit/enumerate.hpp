#ifndef RACKKIT_ENUMERATE_HPP
#define RACKKIT_ENUMERATE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rackkit/classify.hpp"
#include "rackkit/invariants.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

enum class EnumMode { racks, quandles, pracks };

std::string to_string(EnumMode mode);

struct EnumerationBudgetExceeded : std::runtime_error {
  explicit EnumerationBudgetExceeded(long long budget)
      : std::runtime_error("enumeration node budget exceeded (" +
                           std::to_string(budget) + ")") {}
};

/// Every isomorphism class of the requested kind, represented by its
/// canonical form. classes are pairwise non-isomorphic and sorted.
struct EnumerationReport {
  int order = 0;
  EnumMode mode = EnumMode::racks;
  std::vector<Rack> classes;
  std::map<Profile, int> counts_by_profile;
  std::map<int, int> counts_by_k;
};

inline constexpr long long kDefaultEnumBudget = 200'000'000;

/// Exhaustive backtracking over the permutation sequence: columns are
/// assigned in increasing index order and the condition
/// mu[mu_j(i)] = mu_j mu_i mu_j^-1 is propagated as a constraint closure
/// after each assignment. Duplicates are removed by canonical form.
///
/// Every candidate assignment counts against node_budget; the search throws
/// EnumerationBudgetExceeded rather than running unbounded.
EnumerationReport enumerate_racks(int n, EnumMode mode,
                                  long long node_budget = kDefaultEnumBudget);

/// Variant restricting every mu_i to permutations whose pattern appears in
/// spec at some position; used to scan single profile families without the
/// cost of the full search. The report contains exactly the classes whose
/// profile matches spec.
EnumerationReport enumerate_racks_with_profile(const ProfileSpec& spec,
                                               EnumMode mode,
                                               long long node_budget = kDefaultEnumBudget);

/// Number of enumerated classes whose profile matches spec.
int count_with_profile(const EnumerationReport& report, const ProfileSpec& spec);

}  // namespace rackkit

#endif
