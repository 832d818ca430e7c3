#include "rackkit/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace rackkit {

bool Profile::is_constant() const {
  for (const Pattern& p : per_element)
    if (p != per_element.front()) return false;
  return true;
}

std::vector<Pattern> Profile::sorted() const {
  std::vector<Pattern> out = per_element;
  std::sort(out.begin(), out.end());
  return out;
}

Profile profile(const Rack& r) {
  Profile p;
  p.per_element.reserve(static_cast<std::size_t>(r.order()));
  for (const Perm& m : r.perms()) p.per_element.push_back(m.pattern());
  return p;
}

namespace {

// Groups of identical permutations, keyed by pattern.
std::map<Pattern, std::vector<AbsoluteGroup>> grouped_perms(const Rack& r) {
  std::map<Perm, int> counts;
  for (const Perm& m : r.perms()) ++counts[m];
  std::map<Pattern, std::vector<AbsoluteGroup>> by_pattern;
  for (const auto& [perm, count] : counts)
    by_pattern[perm.pattern()].push_back({count, perm});
  for (auto& [pattern, groups] : by_pattern)
    std::sort(groups.begin(), groups.end(),
              [](const AbsoluteGroup& a, const AbsoluteGroup& b) {
                return a.representative < b.representative;
              });
  return by_pattern;
}

}  // namespace

Detail detail(const Rack& r) {
  Detail d;
  for (const auto& [pattern, groups] : grouped_perms(r)) {
    DetailEntry entry{pattern, {}};
    for (const AbsoluteGroup& g : groups) entry.multiplicities.push_back(g.count);
    std::sort(entry.multiplicities.begin(), entry.multiplicities.end());
    d.entries.push_back(std::move(entry));
  }
  std::sort(d.entries.begin(), d.entries.end());
  return d;
}

AbsoluteDetail absolute_detail(const Rack& r) {
  AbsoluteDetail d;
  for (const auto& [pattern, groups] : grouped_perms(r))
    d.entries.push_back({pattern, groups});
  std::sort(d.entries.begin(), d.entries.end());
  return d;
}

OrbitPartition orbits(const Rack& r) {
  const int n = r.order();

  // Supports s^k of the cycles of length > 1 across the whole sequence.
  std::vector<std::vector<char>> supports;
  for (const Perm& m : r.perms())
    for (const auto& cycle : m.cycle_decomposition().cycles) {
      if (cycle.size() <= 1) continue;
      std::vector<char> mask(static_cast<std::size_t>(n) + 1, 0);
      for (int v : cycle) mask[static_cast<std::size_t>(v)] = 1;
      supports.push_back(std::move(mask));
    }

  std::vector<char> moved(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& s : supports)
    for (int v = 1; v <= n; ++v)
      if (s[static_cast<std::size_t>(v)]) moved[static_cast<std::size_t>(v)] = 1;

  OrbitPartition partition;
  for (int v = 1; v <= n; ++v)
    if (!moved[static_cast<std::size_t>(v)]) partition.orbits.push_back({v});

  // Merge supports that intersect, walking the intersection graph from the
  // lowest unused support.
  std::vector<char> used(supports.size(), 0);
  for (std::size_t seed = 0; seed < supports.size(); ++seed) {
    if (used[seed]) continue;
    std::vector<char> orbit(static_cast<std::size_t>(n) + 1, 0);
    std::deque<std::size_t> queue{seed};
    used[seed] = 1;
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      for (int v = 1; v <= n; ++v)
        if (supports[k][static_cast<std::size_t>(v)]) orbit[static_cast<std::size_t>(v)] = 1;
      for (std::size_t other = 0; other < supports.size(); ++other) {
        if (used[other]) continue;
        bool intersects = false;
        for (int v = 1; v <= n && !intersects; ++v)
          intersects = supports[k][static_cast<std::size_t>(v)] &&
                       supports[other][static_cast<std::size_t>(v)];
        if (intersects) {
          used[other] = 1;
          queue.push_back(other);
        }
      }
    }
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if (orbit[static_cast<std::size_t>(v)]) members.push_back(v);
    partition.orbits.push_back(std::move(members));
  }

  std::sort(partition.orbits.begin(), partition.orbits.end());
  return partition;
}

std::vector<DeltaOrbit> delta_orbits(const Rack& r) {
  const int n = r.order();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<DeltaOrbit> result;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    // The sequence i, i*i, ... is periodic and returns to its start.
    std::vector<int> cycle;
    int x = start;
    do {
      visited[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
      x = r.op(x, x);
    } while (x != start && static_cast<int>(cycle.size()) <= n);
    if (x != start) throw std::logic_error("Delta-orbit sequence failed to close");
    result.push_back({std::move(cycle)});
  }
  return result;
}

namespace {

// Shortest * / *bar move counts from one source element.
std::vector<int> move_distances(const Rack& r, int source) {
  const int n = r.order();
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int k = 1; k <= n; ++k) {
      for (int y : {r.op(x, k), r.op_dual(x, k)}) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

}  // namespace

Connectivity connectivity(const Rack& r) {
  const int n = r.order();
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> dist = move_distances(r, i);
    for (int j = 1; j <= n; ++j) {
      if (dist[static_cast<std::size_t>(j)] < 0) return {false, std::nullopt};
      c = std::max(c, dist[static_cast<std::size_t>(j)]);
    }
  }
  return {true, c};
}

bool is_indecomposable(const Rack& r) { return orbits(r).orbits.size() == 1; }

namespace {

std::vector<char> subset_mask(const Rack& r, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
  std::vector<char> in(static_cast<std::size_t>(r.order()) + 1, 0);
  for (int v : subset) {
    if (v < 1 || v > r.order())
      throw std::invalid_argument("subset element out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace

bool is_subrack(const Rack& r, const std::vector<int>& subset) {
  std::vector<char> in = subset_mask(r, subset);
  for (int i : subset)
    for (int j : subset)
      if (!in[static_cast<std::size_t>(r.op(i, j))] ||
          !in[static_cast<std::size_t>(r.op_dual(i, j))])
        return false;
  return true;
}

bool is_stable_subrack(const Rack& r, const std::vector<int>& subset) {
  if (!is_subrack(r, subset)) return false;
  std::vector<char> in = subset_mask(r, subset);
  for (int i : subset)
    for (int j = 1; j <= r.order(); ++j)
      if (!in[static_cast<std::size_t>(r.op(i, j))]) return false;
  return true;
}

}  // namespace rackkit
