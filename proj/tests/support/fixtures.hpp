// Shared example racks used across the test suite.

#ifndef RACKKIT_TESTS_FIXTURES_HPP
#define RACKKIT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "rackkit/rack.hpp"

namespace rackkit::fixtures {

inline Rack from_cycles(int n, const std::vector<std::string>& lines) {
  std::vector<Perm> mu;
  mu.reserve(lines.size());
  for (const std::string& line : lines) mu.push_back(Perm::parse_cycles(n, line));
  return Rack::from_perms_checked(std::move(mu));
}

// Five order-4 racks sharing profiles pairwise in instructive ways: R and S
// have equal detail but different quandle defect counts; T, U, V share one
// constant profile with three different details.
inline Rack rack_R() { return from_cycles(4, {"()", "()", "(1 2)", "(1 2)"}); }
inline Rack rack_S() { return from_cycles(4, {"()", "()", "(3 4)", "(3 4)"}); }
inline Rack rack_T() {
  return from_cycles(4, {"(1 2 3)", "(1 2 3)", "(1 2 3)", "(1 2 3)"});
}
inline Rack rack_U() {
  return from_cycles(4, {"(1 2 3)", "(1 2 3)", "(1 2 3)", "(1 3 2)"});
}
inline Rack rack_V() {
  return from_cycles(4, {"(2 3 4)", "(1 4 3)", "(1 2 4)", "(1 3 2)"});
}

inline std::vector<Rack> builtin_racks() {
  return {
      trivial_rack(1),     trivial_rack(4),        dihedral_rack(3),
      dihedral_rack(5),    dihedral_rack(9),       cyclic_rack(2),
      cyclic_rack(5),      linear_alexander(5, 2), linear_alexander(5, 3),
      linear_alexander(5, 4), linear_alexander(7, 3),
      alexander_quotient(2, {1, 1, 1}),    // T^2+T+1 over Z_2
      alexander_quotient(2, {1, 1, 0, 1}), // T^3+T+1 over Z_2
      octahedron_quandle(), rack_R(), rack_S(), rack_T(), rack_U(), rack_V(),
  };
}

}  // namespace rackkit::fixtures

#endif
