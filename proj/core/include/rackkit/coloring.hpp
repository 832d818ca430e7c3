#ifndef RACKKIT_COLORING_HPP
#define RACKKIT_COLORING_HPP

#include <map>
#include <string_view>
#include <vector>

#include "rackkit/rack.hpp"

namespace rackkit {

/// One crossing in terms of arc ids. At a positive crossing the under
/// strand picks up f(under_out) = f(under_in) * f(over); at a negative one
/// f(under_out) = f(under_in) *bar f(over).
struct Crossing {
  int under_in = 0;
  int over = 0;
  int under_out = 0;
  int sign = +1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A knot diagram with arcs numbered 1..arc_count. label_to_arc keeps the
/// mapping from the PD edge labels to arc ids (over-passes join the two
/// edge labels of the over strand into one arc).
struct KnotDiagram {
  int arc_count = 0;
  std::vector<Crossing> crossings;
  std::map<int, int> label_to_arc;

  friend bool operator==(const KnotDiagram&, const KnotDiagram&) = default;
};

/// Reads PD tuples such as "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)". Tuple
/// (a,b,c,d) lists the edges counterclockwise from the incoming under
/// edge a, so the under strand runs a -> c and the over strand occupies b
/// and d. The crossing is positive when the over strand runs b -> d
/// (d = b + 1 cyclically in the edge numbering) and negative the other way.
/// Empty input denotes the zero-crossing unknot diagram with one arc.
KnotDiagram parse_pd(std::string_view text);

/// Same diagram with every crossing sign flipped.
KnotDiagram mirror(const KnotDiagram& d);

struct ColoringCount {
  long long total = 0;
  int target_order = 0;
};

/// Number of maps f: arcs -> {1..n} satisfying the crossing relations, by
/// backtracking with unit propagation. Any rack target is accepted; counts
/// with prack targets depend on framing.
ColoringCount count_colorings(const KnotDiagram& d, const Rack& target);

}  // namespace rackkit

#endif
