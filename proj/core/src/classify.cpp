#include "rackkit/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rackkit/iso.hpp"

namespace rackkit {

long long euler_phi(long long n) {
  if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long long partitions_exact(int f, int i) {
  if (f < 0 || i < 0) throw std::invalid_argument("partitions_exact needs f, i >= 0");
  if (i == 0) return f == 0 ? 1 : 0;
  if (i > f) return 0;
  // P(f, i) = P(f-1, i-1) + P(f-i, i)
  std::vector<std::vector<long long>> table(static_cast<std::size_t>(f) + 1,
                                            std::vector<long long>(static_cast<std::size_t>(i) + 1, 0));
  table[0][0] = 1;
  for (int ff = 1; ff <= f; ++ff)
    for (int ii = 1; ii <= std::min(ff, i); ++ii)
      table[static_cast<std::size_t>(ff)][static_cast<std::size_t>(ii)] =
          table[static_cast<std::size_t>(ff) - 1][static_cast<std::size_t>(ii) - 1] +
          (ff - ii >= 0 ? table[static_cast<std::size_t>(ff - ii)][static_cast<std::size_t>(ii)] : 0);
  return table[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)];
}

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long result = 1;
  for (int t = 1; t <= b; ++t) result = result * (a - b + t) / t;
  return result;
}

ProfileSpec ProfileSpec::constant(Pattern p, int n) {
  if (n < 1) throw std::invalid_argument("profile needs order >= 1");
  return ProfileSpec{std::vector<Pattern>(static_cast<std::size_t>(n), std::move(p))};
}

ProfileSpec ProfileSpec::explicit_sequence(std::vector<Pattern> per_element) {
  return ProfileSpec{std::move(per_element)};
}

bool ProfileSpec::matches(const Profile& p) const {
  if (p.per_element.size() != per_element.size()) return false;
  std::vector<Pattern> want = per_element;
  std::sort(want.begin(), want.end());
  return want == p.sorted();
}

Pattern parse_constant_profile(const std::string& text, int order) {
  Pattern pattern;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    // strip blanks
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw std::invalid_argument("empty token in profile");
    int value = 0;
    if (token == "n") {
      value = order;
    } else if (token.rfind("n-", 0) == 0) {
      value = order - std::stoi(token.substr(2));
    } else {
      value = std::stoi(token);
    }
    if (value < 1) throw std::invalid_argument("profile entry out of range");
    pattern.lengths.push_back(value);
  }
  std::sort(pattern.lengths.begin(), pattern.lengths.end());
  if (pattern.sum() != order)
    throw std::invalid_argument("profile entries must sum to the order");
  return pattern;
}

namespace {

// Residues coprime to m in [1, m).
std::vector<int> coprime_residues(int m) {
  std::vector<int> out;
  for (int k = 1; k < m; ++k)
    if (std::gcd(k, m) == 1) out.push_back(k);
  return out;
}

// The cycle (lo lo+1 ... hi) as a permutation of degree n.
Perm block_cycle(int n, int lo, int hi) {
  std::vector<int> cycle;
  for (int v = lo; v <= hi; ++v) cycle.push_back(v);
  return Perm::from_cycles(n, {cycle});
}

Rack constant_blocks_rack(int n, const std::vector<Perm>& per_block,
                          const std::vector<int>& block_sizes) {
  std::vector<Perm> mu;
  mu.reserve(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < block_sizes.size(); ++b)
    for (int t = 0; t < block_sizes[b]; ++t) mu.push_back(per_block[b]);
  return Rack::from_perms_checked(std::move(mu));
}

}  // namespace

ClassificationResult classify_full_cycle(int n) {
  if (n < 1) throw std::invalid_argument("full-cycle profile needs n >= 1");
  return {{cyclic_rack(n)}, 1, "full_cycle"};
}

ClassificationResult classify_prack_1_nm1(int n) {
  if (n <= 2) throw std::invalid_argument("profile {1, n-1} needs n > 2");
  const Perm c = block_cycle(n, 1, n - 1);
  ClassificationResult result;
  result.formula_name = "phi(n-1)";
  result.predicted_count = euler_phi(n - 1);
  for (int k : coprime_residues(n - 1))
    result.representatives.push_back(
        constant_blocks_rack(n, {c, c.power(k)}, {n - 1, 1}));
  return result;
}

ClassificationResult classify_prack_m_nm(int n, int m) {
  if (n <= 3 || m <= 1 || m > n - m)
    throw std::invalid_argument("profile {m, n-m} needs n > 3 and 1 < m <= n-m");
  const Perm c1 = block_cycle(n, 1, m);
  const Perm c2 = block_cycle(n, m + 1, n);
  ClassificationResult result;
  if (m < n - m) {
    result.formula_name = "phi(m)*phi(n-m)";
    result.predicted_count = euler_phi(m) * euler_phi(n - m);
    for (int k : coprime_residues(m))
      for (int l : coprime_residues(n - m))
        result.representatives.push_back(constant_blocks_rack(
            n, {c1 * c2.power(l), c1.power(k) * c2}, {m, n - m}));
  } else {
    // Swapping the equal-size blocks identifies (k, l) with (l, k).
    result.formula_name = "(1+phi(m))*phi(m)/2";
    result.predicted_count = (1 + euler_phi(m)) * euler_phi(m) / 2;
    for (int k : coprime_residues(m))
      for (int l : coprime_residues(m)) {
        if (l > k) continue;
        result.representatives.push_back(constant_blocks_rack(
            n, {c1 * c2.power(l), c1.power(k) * c2}, {m, m}));
      }
  }
  return result;
}

ClassificationResult classify_prack_ones_block(int n, int f) {
  if (n <= 3 || f <= 2 || f > n - 2)
    throw std::invalid_argument("profile {1,..,1, n-f} needs n > 3 and 2 < f <= n-2");
  const int nf = n - f;
  const Perm c = block_cycle(n, 1, nf);
  const std::vector<int> residues = coprime_residues(nf);
  const int phi = static_cast<int>(residues.size());
  const int max_distinct = std::min(f, phi);

  ClassificationResult result;
  result.formula_name = "sum_i C(phi(n-f),i)*P_i(f)";
  result.predicted_count = 0;
  for (int i = 1; i <= max_distinct; ++i)
    result.predicted_count += binom(phi, i) * partitions_exact(f, i);

  // One representative per choice of i distinct residues and a partition of
  // f into i multiplicities: the largest multiplicity goes to the smallest
  // chosen residue.
  std::vector<int> chosen;
  std::vector<int> parts;
  auto emit = [&] {
    std::vector<Perm> mu(static_cast<std::size_t>(nf), c);
    for (std::size_t t = 0; t < chosen.size(); ++t)
      for (int rep = 0; rep < parts[t]; ++rep)
        mu.push_back(c.power(chosen[t]));
    result.representatives.push_back(Rack::from_perms_checked(std::move(mu)));
  };
  auto pick_parts = [&](auto&& self, int remaining, int slots, int limit) -> void {
    if (slots == 0) {
      if (remaining == 0) emit();
      return;
    }
    for (int part = std::min(remaining - slots + 1, limit); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, slots - 1, part);
      parts.pop_back();
    }
  };
  auto pick_residues = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      pick_parts(pick_parts, f, static_cast<int>(chosen.size()), f);
      return;
    }
    for (std::size_t t = from; t < residues.size(); ++t) {
      chosen.push_back(residues[t]);
      self(self, t + 1, left - 1);
      chosen.pop_back();
    }
  };
  for (int i = 1; i <= max_distinct; ++i) pick_residues(pick_residues, 0, i);

  if (f == nf) {
    // The remaining class: both blocks cycle themselves.
    result.predicted_count += 1;
    result.formula_name = "1+" + result.formula_name;
    result.representatives.push_back(
        constant_blocks_rack(n, {c, block_cycle(n, nf + 1, n)}, {nf, f}));
  }
  return result;
}

ClassificationResult classify_prack_three_blocks(int m1, int m2, int m3) {
  if (!(1 < m1 && m1 < m2 && m2 < m3))
    throw std::invalid_argument("block sizes need 1 < m1 < m2 < m3");
  const int n = m1 + m2 + m3;
  const Perm c1 = block_cycle(n, 1, m1);
  const Perm c2 = block_cycle(n, m1 + 1, m1 + m2);
  const Perm c3 = block_cycle(n, m1 + m2 + 1, n);

  ClassificationResult result;
  result.formula_name = "(phi(m1)*phi(m2)*phi(m3))^2";
  long long phis = euler_phi(m1) * euler_phi(m2) * euler_phi(m3);
  result.predicted_count = phis * phis;

  for (int k21 : coprime_residues(m2))
    for (int k31 : coprime_residues(m3))
      for (int k12 : coprime_residues(m1))
        for (int k32 : coprime_residues(m3))
          for (int k13 : coprime_residues(m1))
            for (int k23 : coprime_residues(m2))
              result.representatives.push_back(constant_blocks_rack(
                  n,
                  {c1 * c2.power(k21) * c3.power(k31),
                   c1.power(k12) * c2 * c3.power(k32),
                   c1.power(k13) * c2.power(k23) * c3},
                  {m1, m2, m3}));
  return result;
}

namespace {

// All (n-1)-cycles fixing n-1, i.e. cycling {1..n-2, n}; each candidate is
// produced once, anchored at its smallest element.
std::vector<Perm> mu_nm1_candidates(int n) {
  std::vector<int> rest;
  for (int v = 2; v <= n; ++v)
    if (v != n - 1) rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  std::vector<Perm> out;
  do {
    std::vector<int> cycle{1};
    cycle.insert(cycle.end(), rest.begin(), rest.end());
    out.push_back(Perm::from_cycles(n, {cycle}));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Necessary conditions on mu_{n-1}; candidates violating them cannot solve
// the equation system, so they may be skipped.
bool passes_pruning(const Perm& s, int n) {
  for (int i = 1; i <= n - 2; ++i)
    if (s(i) == i + 1) return false;
  const Perm s_inv = s.inverse();
  if (s(n - 2) == n && !(n % 2 == 1 && s(n) == (n - 1) / 2)) return false;
  if (s(n) == n - 2 && s_inv(n) != 1) return false;
  if (s(n) == 1 && !(n % 2 == 1 && s_inv(n) == (n - 1) / 2)) return false;
  if (s_inv(n) == 1 && s(n) != n - 2) return false;
  return true;
}

bool satisfies_equations(const Perm& s, const Perm& c, int n) {
  const Perm s_inv = s.inverse();
  if (s * c * s_inv != c.power(s(n)) * s * c.power(-s(n))) return false;
  if (s_inv * c * s != c.power(s_inv(n)) * s * c.power(-s_inv(n))) return false;
  for (int l = 1; l <= n - 2; ++l) {
    if (l == s_inv(n)) continue;
    Perm lhs = c.power(-s(l)) * s * c.power(l);
    bool is_power = false;
    for (int k = 1; k <= n - 2 && !is_power; ++k) is_power = lhs == s.power(k);
    if (!is_power) return false;
  }
  return true;
}

}  // namespace

std::vector<Rack> quandle_search_1_nm1(int n, bool use_pruning) {
  if (n <= 2) throw std::invalid_argument("profile {1, n-1} needs n > 2");
  const Perm c = block_cycle(n, 1, n - 1);  // mu_n
  const Pattern wanted{std::vector<int>{1, n - 1}};

  std::vector<Rack> classes;
  for (const Perm& s : mu_nm1_candidates(n)) {
    if (use_pruning && !passes_pruning(s, n)) continue;
    if (!satisfies_equations(s, c, n)) continue;

    std::vector<Perm> mu;
    mu.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n - 2; ++k) mu.push_back(c.power(k) * s * c.power(-k));
    mu.push_back(s);
    mu.push_back(c);

    // The equation system is necessary, not sufficient; keep only candidates
    // passing the full rack check with the right profile and quandle kind.
    auto built = Rack::from_perms(std::move(mu));
    Rack* rack = std::get_if<Rack>(&built);
    if (rack == nullptr || !is_quandle(*rack)) continue;
    Profile prof = profile(*rack);
    if (!prof.is_constant() || prof.per_element.front() != wanted) continue;

    bool duplicate = false;
    for (const Rack& seen : classes)
      if (are_isomorphic(seen, *rack).isomorphic) {
        duplicate = true;
        break;
      }
    if (!duplicate) classes.push_back(std::move(*rack));
  }
  return classes;
}

}  // namespace rackkit
