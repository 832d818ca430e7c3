// Test-only reference implementations, kept independent of the library
// code paths they check.

#ifndef RACKKIT_TESTS_ORACLES_HPP
#define RACKKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "rackkit/coloring.hpp"
#include "rackkit/rack.hpp"

namespace rackkit::oracles {

// Right-invertibility and self-distributivity checked directly on a
// multiplication table (1-based values in table[i-1][j-1] = i*j).
inline bool table_is_rack(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  auto op = [&](int i, int j) {
    return table[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
  };
  for (int j = 1; j <= n; ++j) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
      int v = op(i, j);
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (op(op(i, j), k) != op(op(i, k), op(j, k))) return false;
  return true;
}

// Every n x n table over {1..n} that satisfies the two rack axioms,
// as raw tables. Exponential; meant for n <= 3.
inline std::vector<std::vector<std::vector<int>>> all_rack_tables(int n) {
  std::vector<std::vector<std::vector<int>>> result;
  const int cells = n * n;
  std::vector<int> flat(static_cast<std::size_t>(cells), 1);
  while (true) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      table[static_cast<std::size_t>(i)] =
          std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(i) * n,
                           flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
    if (table_is_rack(table)) result.push_back(std::move(table));
    int pos = cells - 1;
    while (pos >= 0 && flat[static_cast<std::size_t>(pos)] == n) {
      flat[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++flat[static_cast<std::size_t>(pos)];
  }
  return result;
}

// Isomorphism by trying every bijection.
inline std::optional<Perm> brute_force_isomorphism(const Rack& a, const Rack& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    Perm alpha = Perm::from_image(image);
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j)
      ok = b.mu(alpha(j)) == conjugate(a.mu(j), alpha);
    if (ok) return alpha;
  } while (std::next_permutation(image.begin(), image.end()));
  return std::nullopt;
}

// Orbits by breadth-first closure of each element under every mu_k^(+-1).
inline std::vector<std::vector<int>> closure_orbits(const Rack& r) {
  const int n = r.order();
  std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> orbits;
  for (int start = 1; start <= n; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> queue{start};
    in[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int k = 1; k <= n; ++k)
        for (int y : {r.op(x, k), r.op_dual(x, k)})
          if (!in[static_cast<std::size_t>(y)]) {
            in[static_cast<std::size_t>(y)] = 1;
            queue.push_back(y);
          }
    }
    std::sort(queue.begin(), queue.end());
    for (int v : queue) done[static_cast<std::size_t>(v)] = 1;
    orbits.push_back(std::move(queue));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

// Coloring count by trying all n^arcs assignments.
inline long long naive_coloring_count(const KnotDiagram& d, const Rack& target) {
  const int n = target.order();
  const int arcs = d.arc_count;
  std::vector<int> color(static_cast<std::size_t>(arcs) + 1, 1);
  long long total = 0;
  while (true) {
    bool ok = true;
    for (const Crossing& crossing : d.crossings) {
      int in = color[static_cast<std::size_t>(crossing.under_in)];
      int over = color[static_cast<std::size_t>(crossing.over)];
      int out = color[static_cast<std::size_t>(crossing.under_out)];
      int want = crossing.sign > 0 ? target.op(in, over) : target.op_dual(in, over);
      if (out != want) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    int pos = arcs;
    while (pos >= 1 && color[static_cast<std::size_t>(pos)] == n) {
      color[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 1) break;
    ++color[static_cast<std::size_t>(pos)];
  }
  return total;
}

inline Perm random_perm(std::mt19937& rng, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return Perm::from_image(std::move(image));
}

}  // namespace rackkit::oracles

#endif
