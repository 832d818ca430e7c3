#ifndef RACKKIT_INVARIANTS_HPP
#define RACKKIT_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "rackkit/rack.hpp"

namespace rackkit {

/// The sequence of patterns of (mu_1, ..., mu_n). Invariant under rack
/// isomorphism as a multiset; per-position order follows element labels.
struct Profile {
  std::vector<Pattern> per_element;

  bool is_constant() const;
  /// Patterns sorted ascending, for label-independent comparison.
  std::vector<Pattern> sorted() const;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// One distinct pattern together with the sizes of the groups of identical
/// permutations realizing it. Multiplicities are sorted ascending and sum
/// to the number of elements carrying the pattern.
struct DetailEntry {
  Pattern pattern;
  std::vector<int> multiplicities;

  friend auto operator<=>(const DetailEntry&, const DetailEntry&) = default;
};

/// Entries sorted by (pattern, multiplicities); one entry per distinct
/// pattern. Invariant under rack isomorphism.
struct Detail {
  std::vector<DetailEntry> entries;

  friend auto operator<=>(const Detail&, const Detail&) = default;
};

struct AbsoluteGroup {
  int count = 0;
  Perm representative;

  friend auto operator<=>(const AbsoluteGroup&, const AbsoluteGroup&) = default;
};

/// Like DetailEntry but keeping the representative permutation of each
/// group; groups sorted by one-line image.
struct AbsoluteDetailEntry {
  Pattern pattern;
  std::vector<AbsoluteGroup> groups;

  friend auto operator<=>(const AbsoluteDetailEntry&,
                          const AbsoluteDetailEntry&) = default;
};

struct AbsoluteDetail {
  std::vector<AbsoluteDetailEntry> entries;

  friend auto operator<=>(const AbsoluteDetail&, const AbsoluteDetail&) = default;
};

Profile profile(const Rack& r);
Detail detail(const Rack& r);
AbsoluteDetail absolute_detail(const Rack& r);

/// Partition of {1..n} into orbits: each orbit is closed under x -> x * k
/// and x -> x *bar k for every k. Orbits are sorted, each listed ascending.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;
};

/// Computes the orbits by merging the supports of the non-trivial cycles of
/// the permutation sequence; elements moved by nothing become singletons.
OrbitPartition orbits(const Rack& r);

/// The periodic sequence i, i*i, (i*i)*(i*i), ... listed once around,
/// starting from the smallest member.
struct DeltaOrbit {
  std::vector<int> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  friend bool operator==(const DeltaOrbit&, const DeltaOrbit&) = default;
};

/// The distinct Delta-orbits; they partition {1..n}. In a quandle all of
/// them are singletons.
std::vector<DeltaOrbit> delta_orbits(const Rack& r);

/// connected means a single orbit; c is the maximum over ordered pairs
/// (i, j) of the minimal number of * / *bar moves taking i to j, and is
/// absent when the rack is not connected.
struct Connectivity {
  bool connected = false;
  std::optional<int> c;
};

Connectivity connectivity(const Rack& r);

/// True exactly when the rack has a single orbit.
bool is_indecomposable(const Rack& r);

/// subset must be a nonempty set of elements of r (throws otherwise).
bool is_subrack(const Rack& r, const std::vector<int>& subset);

/// Subrack with i * j inside the subset for every i in the subset and
/// every j in the whole rack.
bool is_stable_subrack(const Rack& r, const std::vector<int>& subset);

}  // namespace rackkit

#endif
