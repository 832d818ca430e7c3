#ifndef RACKKIT_ISO_HPP
#define RACKKIT_ISO_HPP

#include <optional>

#include "rackkit/rack.hpp"

namespace rackkit {

/// When isomorphic, witness is a bijection alpha with
/// mu'_{alpha(j)} = alpha mu_j alpha^-1 for every j; it is re-verified
/// against that identity before being returned.
struct IsoResult {
  bool isomorphic = false;
  std::optional<Perm> witness;
};

/// Backtracking over bijections alpha, pruned by k-prack count, per-element
/// pattern, orbit size and Delta-orbit length. Racks of different orders
/// are never isomorphic.
IsoResult are_isomorphic(const Rack& a, const Rack& b);

/// Checks mu_b[alpha(j)] == alpha mu_a[j] alpha^-1 for every j.
bool is_isomorphism(const Rack& a, const Rack& b, const Perm& alpha);

/// The isomorphic copy of r under alpha: mu'_{alpha(j)} = alpha mu_j alpha^-1.
Rack relabel(const Rack& r, const Perm& alpha);

/// Minimum of relabel(r, alpha) over all alpha, under lexicographic order
/// of the concatenated one-line images. Exact; canonical_form(a) ==
/// canonical_form(b) iff a and b are isomorphic. Throws std::domain_error
/// above exact_limit (the search is over all n! relabelings).
Rack canonical_form(const Rack& r, int exact_limit = 8);

/// The concatenated one-line images, the key canonical_form minimizes.
std::vector<int> flat_images(const Rack& r);

}  // namespace rackkit

#endif
