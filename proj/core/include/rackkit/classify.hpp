#ifndef RACKKIT_CLASSIFY_HPP
#define RACKKIT_CLASSIFY_HPP

#include <string>
#include <vector>

#include "rackkit/invariants.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

long long euler_phi(long long n);

/// P_i(f): number of partitions of f into exactly i summands (each >= 1).
long long partitions_exact(int f, int i);

long long binom(int a, int b);

/// A requested profile: either one pattern repeated n times or an explicit
/// length-n sequence.
struct ProfileSpec {
  std::vector<Pattern> per_element;

  static ProfileSpec constant(Pattern p, int n);
  static ProfileSpec explicit_sequence(std::vector<Pattern> per_element);

  int order() const { return static_cast<int>(per_element.size()); }

  /// Label-independent match: the pattern multisets agree.
  bool matches(const Profile& p) const;
};

/// Parses a comma-separated constant-profile pattern such as "1,n-1" or
/// "2,3,4"; the token n (and n-<int>) is substituted with the order.
Pattern parse_constant_profile(const std::string& text, int order);

/// Representative racks for one profile family, together with the
/// closed-form class count the family realizes.
struct ClassificationResult {
  std::vector<Rack> representatives;
  long long predicted_count = 0;
  std::string formula_name;
};

/// Constant profile ({n}, ..., {n}): the cyclic rack is the only class.
ClassificationResult classify_full_cycle(int n);

/// Pracks of constant profile ({1, n-1}, ...), n > 2. Representatives
/// mu_1 = ... = mu_{n-1} = (1 2 ... n-1), mu_n = (1 2 ... n-1)^k with
/// gcd(k, n-1) = 1; phi(n-1) classes.
ClassificationResult classify_prack_1_nm1(int n);

/// Pracks of constant profile ({m, n-m}, ...), n > 3, 1 < m <= n-m.
/// Two-block cycle-power representatives; phi(m) phi(n-m) classes for
/// m < n-m, (1 + phi(m)) phi(m) / 2 classes for m = n-m (pairs k >= l).
ClassificationResult classify_prack_m_nm(int n, int m);

/// Pracks of constant profile ({1,...,1, n-f}, ...) with f ones, n > 3 and
/// 2 < f <= n-2. One representative per choice of i distinct exponent
/// values coprime to n-f and a partition of f into i multiplicities;
/// sum_{i=1}^{min(f, phi(n-f))} C(phi(n-f), i) P_i(f) classes, plus the
/// swapped-block prack when f = n-f.
ClassificationResult classify_prack_ones_block(int n, int f);

/// Pracks of constant profile ({m1, m2, m3}, ...), 1 < m1 < m2 < m3.
/// Three-block cycle-power representatives, one per exponent 6-tuple;
/// (phi(m1) phi(m2) phi(m3))^2 classes.
ClassificationResult classify_prack_three_blocks(int m1, int m2, int m3);

/// Quandles of constant profile ({1, n-1}, ...), n > 2, up to isomorphism.
/// Fixes mu_n = (1 2 ... n-1), searches the (n-1)-cycles fixing n-1 for
/// mu_{n-1}, keeps the solutions of the commutation equation system,
/// derives mu_k = mu_n^k mu_{n-1} mu_n^-k, validates fully and dedupes.
/// The necessary-condition rules in use_pruning only skip candidates; the
/// result set is identical with pruning on or off.
std::vector<Rack> quandle_search_1_nm1(int n, bool use_pruning = true);

}  // namespace rackkit

#endif
