#include "rackkit/iso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rackkit/invariants.hpp"

namespace rackkit {

bool is_isomorphism(const Rack& a, const Rack& b, const Perm& alpha) {
  if (a.order() != b.order() || alpha.degree() != a.order()) return false;
  for (int j = 1; j <= a.order(); ++j)
    if (b.mu(alpha(j)) != conjugate(a.mu(j), alpha)) return false;
  return true;
}

Rack relabel(const Rack& r, const Perm& alpha) {
  if (alpha.degree() != r.order())
    throw std::invalid_argument("relabeling degree mismatch");
  std::vector<Perm> mu(static_cast<std::size_t>(r.order()), Perm());
  for (int j = 1; j <= r.order(); ++j)
    mu[static_cast<std::size_t>(alpha(j)) - 1] = conjugate(r.mu(j), alpha);
  return Rack::unchecked(std::move(mu));
}

namespace {

// Per-element fingerprint used to restrict candidate images: an
// isomorphism preserves the pattern of mu_i, the size of the orbit of i
// and the length of the Delta-orbit of i.
struct ElementKeys {
  std::vector<Pattern> pattern;     // 1-based
  std::vector<int> orbit_size;      // 1-based
  std::vector<int> delta_length;    // 1-based
};

ElementKeys element_keys(const Rack& r) {
  const int n = r.order();
  ElementKeys keys;
  keys.pattern.resize(static_cast<std::size_t>(n) + 1);
  keys.orbit_size.assign(static_cast<std::size_t>(n) + 1, 0);
  keys.delta_length.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    keys.pattern[static_cast<std::size_t>(i)] = r.mu(i).pattern();
  for (const auto& orbit : orbits(r).orbits)
    for (int v : orbit)
      keys.orbit_size[static_cast<std::size_t>(v)] = static_cast<int>(orbit.size());
  for (const auto& delta : delta_orbits(r))
    for (int v : delta.cycle)
      keys.delta_length[static_cast<std::size_t>(v)] = delta.length();
  return keys;
}

template <typename T>
std::vector<T> sorted_copy(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct IsoSearch {
  const Rack& a;
  const Rack& b;
  int n;
  std::vector<std::vector<char>> allowed;  // allowed[i][v]: v is a candidate for alpha(i)
  std::vector<int> alpha;                  // 0 = unassigned
  std::vector<int> beta;                   // inverse of alpha, 0 = unassigned
  std::vector<int> order_of_assignment;    // positions sorted by candidate count

  bool enforce(int u, int v, std::vector<int>& trail) {
    if (alpha[static_cast<std::size_t>(u)] != 0)
      return alpha[static_cast<std::size_t>(u)] == v;
    if (beta[static_cast<std::size_t>(v)] != 0) return false;
    if (!allowed[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
    alpha[static_cast<std::size_t>(u)] = v;
    beta[static_cast<std::size_t>(v)] = u;
    trail.push_back(u);
    return true;
  }

  // Closes the partial map under alpha(mu_x(j)) = mu'_{alpha(x)}(alpha(j)),
  // for the newly assigned elements against every assigned one.
  bool propagate(std::vector<int>& trail) {
    for (std::size_t head = trail.size() - 1; head < trail.size(); ++head) {
      int x = trail[head];
      int xi = alpha[static_cast<std::size_t>(x)];
      for (int j = 1; j <= n; ++j) {
        int ji = alpha[static_cast<std::size_t>(j)];
        if (ji == 0) continue;
        if (!enforce(a.mu(x)(j), b.mu(xi)(ji), trail)) return false;
        if (!enforce(a.mu(j)(x), b.mu(ji)(xi), trail)) return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth, Perm& out) {
    while (depth < order_of_assignment.size() &&
           alpha[static_cast<std::size_t>(order_of_assignment[depth])] != 0)
      ++depth;
    if (depth == order_of_assignment.size()) {
      std::vector<int> image(alpha.begin() + 1, alpha.end());
      Perm candidate = Perm::from_image(std::move(image));
      if (!is_isomorphism(a, b, candidate)) return false;
      out = std::move(candidate);
      return true;
    }
    int pos = order_of_assignment[depth];
    for (int v = 1; v <= n; ++v) {
      if (!allowed[static_cast<std::size_t>(pos)][static_cast<std::size_t>(v)]) continue;
      if (beta[static_cast<std::size_t>(v)] != 0) continue;
      std::vector<int> trail;
      if (enforce(pos, v, trail) && propagate(trail) && search(depth + 1, out))
        return true;
      for (int u : trail) {
        beta[static_cast<std::size_t>(alpha[static_cast<std::size_t>(u)])] = 0;
        alpha[static_cast<std::size_t>(u)] = 0;
      }
    }
    return false;
  }
};

}  // namespace

IsoResult are_isomorphic(const Rack& a, const Rack& b) {
  if (a.order() != b.order()) return {false, std::nullopt};
  const int n = a.order();
  if (kind(a) != kind(b)) return {false, std::nullopt};

  ElementKeys ka = element_keys(a);
  ElementKeys kb = element_keys(b);
  if (sorted_copy(ka.pattern) != sorted_copy(kb.pattern) ||
      sorted_copy(ka.orbit_size) != sorted_copy(kb.orbit_size) ||
      sorted_copy(ka.delta_length) != sorted_copy(kb.delta_length))
    return {false, std::nullopt};
  if (detail(a) != detail(b)) return {false, std::nullopt};

  IsoSearch search{a, b, n, {}, {}, {}, {}};
  search.allowed.assign(static_cast<std::size_t>(n) + 1,
                        std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> candidate_count(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int v = 1; v <= n; ++v) {
      bool ok = ka.pattern[static_cast<std::size_t>(i)] == kb.pattern[static_cast<std::size_t>(v)] &&
                ka.orbit_size[static_cast<std::size_t>(i)] == kb.orbit_size[static_cast<std::size_t>(v)] &&
                ka.delta_length[static_cast<std::size_t>(i)] == kb.delta_length[static_cast<std::size_t>(v)];
      search.allowed[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = ok;
      candidate_count[static_cast<std::size_t>(i)] += ok;
    }
    if (candidate_count[static_cast<std::size_t>(i)] == 0) return {false, std::nullopt};
  }
  search.alpha.assign(static_cast<std::size_t>(n) + 1, 0);
  search.beta.assign(static_cast<std::size_t>(n) + 1, 0);
  search.order_of_assignment.resize(static_cast<std::size_t>(n));
  std::iota(search.order_of_assignment.begin(), search.order_of_assignment.end(), 1);
  std::sort(search.order_of_assignment.begin(), search.order_of_assignment.end(),
            [&](int x, int y) {
              return candidate_count[static_cast<std::size_t>(x)] <
                     candidate_count[static_cast<std::size_t>(y)];
            });

  Perm witness;
  if (search.search(0, witness)) return {true, std::move(witness)};
  return {false, std::nullopt};
}

std::vector<int> flat_images(const Rack& r) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(r.order()) * static_cast<std::size_t>(r.order()));
  for (const Perm& m : r.perms())
    flat.insert(flat.end(), m.image().begin(), m.image().end());
  return flat;
}

Rack canonical_form(const Rack& r, int exact_limit) {
  const int n = r.order();
  if (n > exact_limit)
    throw std::domain_error("canonical_form is exact only up to order " +
                            std::to_string(exact_limit));
  const std::size_t nn = static_cast<std::size_t>(n);

  std::vector<int> alpha(nn);
  std::iota(alpha.begin(), alpha.end(), 1);  // alpha[i-1] = image of i

  std::vector<int> best;
  std::vector<int> candidate(nn * nn);
  std::vector<int> best_alpha;
  do {
    // candidate[(alpha(j)-1)*n + (alpha(i)-1)] = alpha(mu_j(i))
    for (int j = 1; j <= n; ++j) {
      const Perm& mj = r.mu(j);
      std::size_t row = static_cast<std::size_t>(alpha[static_cast<std::size_t>(j) - 1] - 1) * nn;
      for (int i = 1; i <= n; ++i)
        candidate[row + static_cast<std::size_t>(alpha[static_cast<std::size_t>(i) - 1]) - 1] =
            alpha[static_cast<std::size_t>(mj(i)) - 1];
    }
    if (best.empty() || candidate < best) {
      best = candidate;
      best_alpha = alpha;
    }
  } while (std::next_permutation(alpha.begin(), alpha.end()));

  std::vector<Perm> mu;
  mu.reserve(nn);
  for (int j = 1; j <= n; ++j) {
    auto row = best.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(j) - 1) * nn);
    mu.push_back(Perm::from_image(std::vector<int>(row, row + n)));
  }
  return Rack::unchecked(std::move(mu));
}

}  // namespace rackkit
