#ifndef RACKKIT_RACK_HPP
#define RACKKIT_RACK_HPP

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "rackkit/perm.hpp"

namespace rackkit {

/// One failed instance of the sequence condition
/// mu[mu_j(i)] == mu_j * mu_i * mu_j^-1.
struct Violation {
  int i = 0;
  int j = 0;
  Perm expected;  // mu_j * mu_i * mu_j^-1
  Perm found;     // mu[mu_j(i)]

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool is_rack = false;
  std::vector<Violation> violations;
  std::vector<int> quandle_defects;  // elements i with mu_i(i) != i
  std::vector<int> bad_columns;      // non-bijective table columns (from_table)
};

/// k = number of elements violating the quandle condition; k == 0 means
/// the rack is a quandle, k >= 1 a k-prack.
struct RackKind {
  int k = 0;
  friend bool operator==(const RackKind&, const RackKind&) = default;
};

/// A finite rack of order n stored as its sequence of n permutations
/// (mu_1, ..., mu_n), where i * j = mu_j(i). Construction validates the
/// axioms, so a Rack value is always a valid rack.
class Rack {
 public:
  /// All permutations must have degree n = mu.size(); otherwise throws
  /// std::invalid_argument. Returns the Rack, or the report when the
  /// sequence condition fails somewhere.
  static std::variant<Rack, ValidationReport> from_perms(std::vector<Perm> mu);

  /// table[i-1][j-1] = i * j, entries in {1..n}. Column j must be a
  /// bijection (right-invertibility); failures are reported, out-of-range
  /// entries throw.
  static std::variant<Rack, ValidationReport> from_table(
      const std::vector<std::vector<int>>& table);

  /// from_perms, but throws std::invalid_argument on an invalid sequence.
  static Rack from_perms_checked(std::vector<Perm> mu);

  /// Skips validation; the caller guarantees the axioms hold.
  static Rack unchecked(std::vector<Perm> mu);

  int order() const { return static_cast<int>(mu_.size()); }

  /// mu_j, 1 <= j <= n.
  const Perm& mu(int j) const { return mu_[static_cast<std::size_t>(j) - 1]; }
  const std::vector<Perm>& perms() const { return mu_; }

  /// i * j = mu_j(i).
  int op(int i, int j) const { return mu(j)(i); }
  /// i *bar j = mu_j^-1(i), the dual operation.
  int op_dual(int i, int j) const;

  std::vector<std::vector<int>> table() const;

  friend bool operator==(const Rack&, const Rack&) = default;

 private:
  explicit Rack(std::vector<Perm> mu) : mu_(std::move(mu)) {}

  std::vector<Perm> mu_;
};

/// Checks the sequence condition for every pair (i, j) and collects the
/// quandle defects. Throws std::invalid_argument on degree mismatches.
ValidationReport check_axioms(const std::vector<Perm>& mu);

RackKind kind(const Rack& r);
bool is_quandle(const Rack& r);

/// The rack with operation i *bar j; its permutation sequence is the
/// sequence of inverses.
Rack dual(const Rack& r);

/// Outcome of forming i *o j := j * i. The opposite may fail the rack
/// axioms, so the table is returned together with which axioms hold.
struct OppositeResult {
  std::vector<std::vector<int>> table;  // table[i-1][j-1] = i *o j
  bool right_invertible = false;
  bool self_distributive = false;
  bool quandle_condition = false;
  /// First self-distributivity failure (i, j, k, lhs, rhs) where
  /// lhs = (i *o j) *o k and rhs = (i *o k) *o (j *o k).
  std::optional<std::array<int, 5>> sd_witness;
};

OppositeResult opposite(const Rack& r);

/// i * j == j * i for all i, j.
bool is_symmetric(const Rack& r);

/// Every row of the table is a bijection, i.e. for all i, j there is a
/// unique x with i * x = j.
bool is_quasigroup(const Rack& r);

// Builders. Each returns a validated rack.

/// Order n >= 3, i * j = 2j - i mod n.
Rack dihedral_rack(int n);
/// Order n >= 1, i * j = i.
Rack trivial_rack(int n);
/// Order n >= 1, i * j = i + 1 mod n.
Rack cyclic_rack(int n);

/// Z_p with a * b = m a + (1 - m) b mod p; requires gcd(m, p) = 1.
/// Element x stands for the residue x mod p (so p stands for 0).
Rack linear_alexander(int p, int m);

/// Z_nmod[T, T^-1] / (h(T)) with a * b = T a + (1 - T) b. h is given by its
/// coefficients, constant term first; the leading and the constant
/// coefficient must be units mod nmod. Elements are numbered
/// 1..nmod^deg(h) in lexicographic coefficient order, constant coefficient
/// varying fastest.
Rack alexander_quotient(int nmod, const std::vector<int>& h);

/// The order-6 quandle whose elements are the vertices of the octahedron,
/// acting on each other by quarter-turn rotation.
Rack octahedron_quandle();

}  // namespace rackkit

#endif
