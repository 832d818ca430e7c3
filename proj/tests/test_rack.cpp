#include <doctest.h>

#include <numeric>
#include <variant>

#include "rackkit/invariants.hpp"
#include "rackkit/iso.hpp"
#include "rackkit/rack.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rackkit;
using fixtures::from_cycles;

TEST_CASE("from_perms accepts exactly the sequences satisfying the condition") {
  auto r3 = Rack::from_perms(
      {Perm::parse_cycles(3, "(2 3)"), Perm::parse_cycles(3, "(1 3)"),
       Perm::parse_cycles(3, "(1 2)")});
  CHECK(std::holds_alternative<Rack>(r3));
  CHECK(std::get<Rack>(r3) == dihedral_rack(3));

  CHECK(std::holds_alternative<Rack>(
      Rack::from_perms(std::vector<Perm>(5, Perm::identity(5)))));

  auto bad = Rack::from_perms({Perm::parse_cycles(3, "(1 2)"), Perm::identity(3),
                               Perm::identity(3)});
  REQUIRE(std::holds_alternative<ValidationReport>(bad));
  const auto& report = std::get<ValidationReport>(bad);
  CHECK_FALSE(report.is_rack);
  REQUIRE_FALSE(report.violations.empty());
  const Violation& first = report.violations.front();
  CHECK(first.i == 1);
  CHECK(first.j == 1);
  CHECK(first.expected == Perm::parse_cycles(3, "(1 2)"));
  CHECK(first.found == Perm::identity(3));

  CHECK_THROWS_AS(Rack::from_perms({Perm::identity(2), Perm::identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("from_table") {
  auto r3 = Rack::from_table({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
  REQUIRE(std::holds_alternative<Rack>(r3));
  CHECK(std::get<Rack>(r3).mu(2) == Perm::parse_cycles(3, "(1 3)"));

  auto c3 = Rack::from_table({{2, 2, 2}, {3, 3, 3}, {1, 1, 1}});
  REQUIRE(std::holds_alternative<Rack>(c3));
  CHECK(kind(std::get<Rack>(c3)).k == 3);

  CHECK(is_quandle(octahedron_quandle()));
  CHECK(octahedron_quandle().order() == 6);

  // Constant rows: column 1 takes the value 1 twice.
  auto bad = Rack::from_table({{1, 1}, {1, 2}});
  REQUIRE(std::holds_alternative<ValidationReport>(bad));
  CHECK(std::get<ValidationReport>(bad).bad_columns == std::vector<int>{1});

  CHECK_THROWS_AS(Rack::from_table({{1, 2}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Rack::from_table({{1, 2}}), std::invalid_argument);
}

TEST_CASE("kind and quandle detection") {
  for (int n = 2; n <= 6; ++n) CHECK(kind(cyclic_rack(n)).k == n);
  CHECK(kind(fixtures::rack_R()).k == 0);
  CHECK(is_quandle(fixtures::rack_R()));
  CHECK(kind(fixtures::rack_S()).k == 2);
  CHECK(kind(dihedral_rack(5)).k == 0);
}

TEST_CASE("dual") {
  CHECK(dual(linear_alexander(5, 3)) == linear_alexander(5, 2));
  CHECK(dual(trivial_rack(4)) == trivial_rack(4));
  CHECK(dual(dihedral_rack(3)) == dihedral_rack(3));

  for (const Rack& r : fixtures::builtin_racks()) {
    Rack d = dual(r);
    CHECK(check_axioms(d.perms()).is_rack);
    CHECK(dual(d) == r);
    if (is_quandle(r)) CHECK(is_quandle(d));

    // i *bar j solves x * j = i.
    for (int i = 1; i <= r.order(); ++i)
      for (int j = 1; j <= r.order(); ++j) CHECK(r.op(d.op(i, j), j) == i);
  }
}

TEST_CASE("mixed distributivity of the operation and its dual") {
  for (const Rack& r : {trivial_rack(4), dihedral_rack(5), cyclic_rack(6),
                        octahedron_quandle(), linear_alexander(5, 2),
                        fixtures::rack_S(), fixtures::rack_U()}) {
    for (int i = 1; i <= r.order(); ++i)
      for (int j = 1; j <= r.order(); ++j)
        for (int k = 1; k <= r.order(); ++k) {
          CHECK(r.op_dual(r.op(i, j), k) == r.op(r.op_dual(i, k), r.op_dual(j, k)));
          CHECK(r.op(r.op_dual(i, j), k) == r.op_dual(r.op(i, k), r.op(j, k)));
        }
  }
}

TEST_CASE("opposite") {
  OppositeResult octa = opposite(octahedron_quandle());
  CHECK_FALSE(octa.self_distributive);
  CHECK_FALSE(octa.right_invertible);
  CHECK(octa.quandle_condition);
  REQUIRE(octa.sd_witness.has_value());
  {
    const Rack q = octahedron_quandle();
    CHECK(q.op(1, q.op(2, 3)) == 1);
    CHECK(q.op(q.op(1, 2), q.op(1, 3)) == 6);
  }

  OppositeResult sym = opposite(linear_alexander(5, 3));
  CHECK(sym.table == linear_alexander(5, 3).table());
  CHECK(sym.right_invertible);
  CHECK(sym.self_distributive);
  CHECK(sym.quandle_condition);

  OppositeResult triv = opposite(trivial_rack(3));
  CHECK_FALSE(triv.right_invertible);  // constant rows
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(triv.table[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] == j);
}

TEST_CASE("symmetry and quasigroups") {
  CHECK(is_symmetric(linear_alexander(5, 3)));
  CHECK_FALSE(is_symmetric(linear_alexander(5, 2)));
  CHECK(is_symmetric(trivial_rack(1)));

  CHECK(is_quasigroup(dihedral_rack(5)));
  CHECK(is_quasigroup(linear_alexander(5, 2)));
  CHECK_FALSE(is_quasigroup(trivial_rack(2)));
  CHECK_FALSE(is_quasigroup(trivial_rack(4)));

  for (const Rack& r : fixtures::builtin_racks()) {
    if (!is_symmetric(r)) continue;
    OppositeResult opp = opposite(r);
    CHECK(opp.table == r.table());
    CHECK(opp.right_invertible);
    CHECK(opp.self_distributive);
  }
}

TEST_CASE("builders match their defining formulas") {
  CHECK(dihedral_rack(3).table() ==
        std::vector<std::vector<int>>{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
  CHECK(dihedral_rack(3).op(1, 2) == 3);

  Perm c3 = Perm::parse_cycles(3, "(1 2 3)");
  CHECK(cyclic_rack(3).perms() == std::vector<Perm>{c3, c3, c3});
  CHECK(trivial_rack(3).perms() == std::vector<Perm>(3, Perm::identity(3)));

  CHECK(dihedral_rack(9).op(1, 2) == 3);  // 2*2-1 mod 9

  CHECK_THROWS_AS(dihedral_rack(2), std::invalid_argument);
  CHECK_THROWS_AS(trivial_rack(0), std::invalid_argument);
}

TEST_CASE("linear Alexander quandles") {
  Rack la2 = linear_alexander(5, 2);
  CHECK(la2.mu(1) == Perm::parse_cycles(5, "(2 3 5 4)"));
  CHECK(la2.mu(2) == Perm::parse_cycles(5, "(1 5 3 4)"));
  CHECK(la2.mu(5) == Perm::parse_cycles(5, "(1 2 4 3)"));
  CHECK(la2.op(2, 1) == 3);

  CHECK(linear_alexander(5, 3).mu(1) == Perm::parse_cycles(5, "(2 4 5 3)"));
  CHECK(linear_alexander(5, 4).mu(1) == Perm::parse_cycles(5, "(2 5)(3 4)"));

  CHECK(linear_alexander(7, 1) == trivial_rack(7));
  CHECK(is_quandle(linear_alexander(9, 2)));
  CHECK_THROWS_AS(linear_alexander(6, 3), std::invalid_argument);
}

TEST_CASE("Alexander quandles from polynomial quotients") {
  Rack s4 = alexander_quotient(2, {1, 1, 1});
  CHECK(s4.order() == 4);
  CHECK(is_quandle(s4));
  for (int i = 1; i <= 4; ++i) CHECK(s4.mu(i).pattern() == Pattern{{1, 3}});

  Rack q8 = alexander_quotient(2, {1, 1, 0, 1});
  CHECK(q8.order() == 8);
  CHECK(is_quandle(q8));

  // Degree-1 quotients are the linear quandles up to relabeling.
  CHECK(are_isomorphic(alexander_quotient(5, {3, 1}), linear_alexander(5, 2)).isomorphic);

  // Opposite of an Alexander quandle: self-distributive, quandle condition.
  for (const Rack& r : {alexander_quotient(2, {1, 1, 1}), alexander_quotient(2, {1, 1, 0, 1}),
                        alexander_quotient(2, {1, 1, 1, 1}), alexander_quotient(3, {1, 1, 1}),
                        alexander_quotient(4, {3, 1}), linear_alexander(5, 2),
                        linear_alexander(7, 5)}) {
    OppositeResult opp = opposite(r);
    CHECK(opp.self_distributive);
    CHECK(opp.quandle_condition);
  }

  CHECK_THROWS_AS(alexander_quotient(2, {0, 1}), std::invalid_argument);   // h(0) = 0
  CHECK_THROWS_AS(alexander_quotient(4, {2, 1}), std::invalid_argument);   // h(0) not a unit
  CHECK_THROWS_AS(alexander_quotient(2, {1}), std::invalid_argument);      // degree 0
}

TEST_CASE("octahedron quandle") {
  Rack octa = octahedron_quandle();
  CHECK(octa.mu(1) == Perm::parse_cycles(6, "(2 3 4 5)"));
  CHECK(octa.mu(2) == Perm::parse_cycles(6, "(1 5 6 3)"));
  CHECK(octa.mu(6) == Perm::parse_cycles(6, "(2 5 4 3)"));
  CHECK(is_quandle(octa));
  CHECK(kind(octa).k == 0);
}

TEST_CASE("every builder output passes validation and the power law") {
  for (const Rack& r : fixtures::builtin_racks()) {
    CHECK(check_axioms(r.perms()).is_rack);

    long long l = 1;
    for (const Perm& m : r.perms())
      for (int len : m.pattern().lengths) l = std::lcm(l, static_cast<long long>(len));
    for (const Perm& m : r.perms()) CHECK(m.power(l).is_identity());
  }
}
