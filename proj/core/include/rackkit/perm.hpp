#ifndef RACKKIT_PERM_HPP
#define RACKKIT_PERM_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rackkit {

/// Multiset of cycle lengths of a permutation, sorted ascending, 1-cycles
/// included. The lengths of a degree-n permutation sum to n.
struct Pattern {
  std::vector<int> lengths;

  int sum() const;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Disjoint cycles covering {1..n}, 1-cycles included. Each cycle starts at
/// its smallest element; cycles are ordered by first element.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  friend bool operator==(const CycleDecomposition&,
                         const CycleDecomposition&) = default;
};

/// A bijection of {1..n}. Elements are 1-based throughout the public API.
///
/// Immutable value type; all operations are pure.
class Perm {
 public:
  Perm() = default;  // degree 0

  static Perm identity(int degree);

  /// image[i-1] is the image of i. Throws std::invalid_argument unless the
  /// values are a bijection of {1..n}.
  static Perm from_image(std::vector<int> image);

  /// Cycles need not cover {1..degree}; omitted elements are fixed points.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1 2 3)(4)" or "()". Elements are
  /// whitespace-separated; omitted elements are fixed points.
  static Perm parse_cycles(int degree, std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of x, 1 <= x <= degree.
  int operator()(int x) const { return img_[static_cast<std::size_t>(x) - 1]; }

  /// The one-line image [p(1), p(2), ..., p(n)].
  const std::vector<int>& image() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  /// p^k; k may be zero or negative.
  Perm power(long long k) const;

  /// Order of the permutation: lcm of its cycle lengths.
  long long order() const;

  CycleDecomposition cycle_decomposition() const;
  Pattern pattern() const;

  /// Composition, apply b first: (a*b)(x) = a(b(x)). Degrees must match.
  friend Perm operator*(const Perm& a, const Perm& b);

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

/// g a g^-1: relabels the entries of a's cycles through g.
Perm conjugate(const Perm& a, const Perm& g);

/// Cycle notation. 1-cycles are omitted unless include_fixed is set; the
/// identity prints as "()".
std::string format_cycles(const Perm& p, bool include_fixed = false);

}  // namespace rackkit

#endif
