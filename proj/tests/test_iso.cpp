#include <doctest.h>

#include <random>

#include "rackkit/enumerate.hpp"
#include "rackkit/invariants.hpp"
#include "rackkit/iso.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rackkit;

TEST_CASE("the five order-4 examples are pairwise non-isomorphic") {
  std::vector<Rack> racks = {fixtures::rack_R(), fixtures::rack_S(),
                             fixtures::rack_T(), fixtures::rack_U(),
                             fixtures::rack_V()};
  for (std::size_t a = 0; a < racks.size(); ++a)
    for (std::size_t b = 0; b < racks.size(); ++b) {
      IsoResult result = are_isomorphic(racks[a], racks[b]);
      CHECK(result.isomorphic == (a == b));
      if (result.isomorphic) CHECK(is_isomorphism(racks[a], racks[b], *result.witness));
    }
  // R and S share the detail; only the defect counts tell them apart.
  CHECK(detail(fixtures::rack_R()) == detail(fixtures::rack_S()));
}

TEST_CASE("relabel") {
  Rack r3 = dihedral_rack(3);
  CHECK(relabel(r3, Perm::identity(3)) == r3);
  // (1 2) is an automorphism of the order-3 dihedral rack.
  CHECK(relabel(r3, Perm::parse_cycles(3, "(1 2)")) == r3);

  Rack u = fixtures::rack_U();
  Perm alpha = Perm::parse_cycles(4, "(1 4 2)");
  Rack moved = relabel(u, alpha);
  CHECK(moved != u);
  CHECK(check_axioms(moved.perms()).is_rack);
  CHECK(are_isomorphic(u, moved).isomorphic);
  CHECK(relabel(moved, alpha.inverse()) == u);
  CHECK_THROWS_AS(relabel(u, Perm::identity(3)), std::invalid_argument);
}

TEST_CASE("random relabelings are detected with valid witnesses") {
  std::mt19937 rng(987123);
  for (const Rack& r : fixtures::builtin_racks()) {
    if (r.order() > 6) continue;
    for (int trial = 0; trial < 6; ++trial) {
      Perm alpha = oracles::random_perm(rng, r.order());
      Rack other = relabel(r, alpha);
      IsoResult result = are_isomorphic(r, other);
      REQUIRE(result.isomorphic);
      CHECK(is_isomorphism(r, other, *result.witness));

      // Invariants agree across the pair.
      CHECK(profile(r).sorted() == profile(other).sorted());
      CHECK(detail(r) == detail(other));
      CHECK(kind(r) == kind(other));
      CHECK(is_symmetric(r) == is_symmetric(other));
      CHECK(connectivity(r).connected == connectivity(other).connected);
      CHECK(connectivity(r).c == connectivity(other).c);
    }
  }
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(trivial_rack(4)) == trivial_rack(4));

  std::mt19937 rng(5150);
  for (const Rack& r : {dihedral_rack(3), fixtures::rack_U(), fixtures::rack_V(),
                        linear_alexander(5, 2), cyclic_rack(4)}) {
    Rack canon = canonical_form(r);
    CHECK(canonical_form(canon) == canon);
    CHECK(are_isomorphic(r, canon).isomorphic);
    for (int trial = 0; trial < 5; ++trial) {
      Perm alpha = oracles::random_perm(rng, r.order());
      CHECK(canonical_form(relabel(r, alpha)) == canon);
    }
  }

  CHECK(canonical_form(fixtures::rack_U()) != canonical_form(fixtures::rack_V()));
  CHECK_THROWS_AS(canonical_form(dihedral_rack(9), 8), std::domain_error);
}

TEST_CASE("agreement with brute force over all bijections") {
  auto racks3 = enumerate_racks(3, EnumMode::racks).classes;
  auto racks4 = enumerate_racks(4, EnumMode::racks).classes;

  std::mt19937 rng(777);
  std::vector<Rack> pool;
  for (const Rack& r : racks3) {
    pool.push_back(r);
    pool.push_back(relabel(r, oracles::random_perm(rng, 3)));
  }
  for (const Rack& r : racks4) {
    pool.push_back(r);
    pool.push_back(relabel(r, oracles::random_perm(rng, 4)));
  }

  for (const Rack& a : pool)
    for (const Rack& b : pool) {
      bool expected = oracles::brute_force_isomorphism(a, b).has_value();
      IsoResult got = are_isomorphic(a, b);
      CHECK(got.isomorphic == expected);
      if (got.isomorphic) CHECK(is_isomorphism(a, b, *got.witness));
      if (a.order() == b.order())
        CHECK((canonical_form(a) == canonical_form(b)) == expected);
    }
}
