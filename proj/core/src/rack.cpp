#include "rackkit/rack.hpp"

#include <numeric>
#include <stdexcept>

namespace rackkit {

ValidationReport check_axioms(const std::vector<Perm>& mu) {
  const int n = static_cast<int>(mu.size());
  for (const Perm& p : mu)
    if (p.degree() != n)
      throw std::invalid_argument("sequence needs n permutations of degree n");

  ValidationReport report;
  for (int j = 1; j <= n; ++j) {
    const Perm& mj = mu[static_cast<std::size_t>(j) - 1];
    for (int i = 1; i <= n; ++i) {
      const Perm& mi = mu[static_cast<std::size_t>(i) - 1];
      Perm expected = mj * mi * mj.inverse();
      const Perm& found = mu[static_cast<std::size_t>(mj(i)) - 1];
      if (found != expected)
        report.violations.push_back({i, j, std::move(expected), found});
    }
  }
  for (int i = 1; i <= n; ++i)
    if (mu[static_cast<std::size_t>(i) - 1](i) != i)
      report.quandle_defects.push_back(i);
  report.is_rack = report.violations.empty();
  return report;
}

std::variant<Rack, ValidationReport> Rack::from_perms(std::vector<Perm> mu) {
  ValidationReport report = check_axioms(mu);
  if (!report.is_rack) return report;
  return Rack(std::move(mu));
}

std::variant<Rack, ValidationReport> Rack::from_table(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("table must be square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 1 || v > n) throw std::invalid_argument("table entry out of range");

  // Column j is the image of mu_j; right-invertibility says it is a bijection.
  ValidationReport column_report;
  std::vector<Perm> mu;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      int v = table[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
      image[static_cast<std::size_t>(i) - 1] = v;
      if (seen[static_cast<std::size_t>(v) - 1]) ok = false;
      seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    if (!ok)
      column_report.bad_columns.push_back(j);
    else if (column_report.bad_columns.empty())
      mu.push_back(Perm::from_image(std::move(image)));
  }
  if (!column_report.bad_columns.empty()) return column_report;
  return from_perms(std::move(mu));
}

Rack Rack::from_perms_checked(std::vector<Perm> mu) {
  auto result = from_perms(std::move(mu));
  if (auto* rack = std::get_if<Rack>(&result)) return std::move(*rack);
  throw std::invalid_argument("permutation sequence is not a rack");
}

Rack Rack::unchecked(std::vector<Perm> mu) { return Rack(std::move(mu)); }

int Rack::op_dual(int i, int j) const { return mu(j).inverse()(i); }

std::vector<std::vector<int>> Rack::table() const {
  const int n = order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      t[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = op(i, j);
  return t;
}

RackKind kind(const Rack& r) {
  int k = 0;
  for (int i = 1; i <= r.order(); ++i)
    if (r.op(i, i) != i) ++k;
  return RackKind{k};
}

bool is_quandle(const Rack& r) { return kind(r).k == 0; }

Rack dual(const Rack& r) {
  std::vector<Perm> inv;
  inv.reserve(static_cast<std::size_t>(r.order()));
  for (const Perm& p : r.perms()) inv.push_back(p.inverse());
  // The dual of a rack is a rack; no re-validation needed.
  return Rack::unchecked(std::move(inv));
}

OppositeResult opposite(const Rack& r) {
  const int n = r.order();
  OppositeResult result;
  result.table.assign(static_cast<std::size_t>(n),
                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      result.table[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
          r.op(j, i);

  auto op = [&](int i, int j) {
    return result.table[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
  };

  result.right_invertible = true;
  for (int j = 1; j <= n && result.right_invertible; ++j) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
      int v = op(i, j);
      if (seen[static_cast<std::size_t>(v) - 1]) {
        result.right_invertible = false;
        break;
      }
      seen[static_cast<std::size_t>(v) - 1] = 1;
    }
  }

  result.self_distributive = true;
  for (int i = 1; i <= n && result.self_distributive; ++i)
    for (int j = 1; j <= n && result.self_distributive; ++j)
      for (int k = 1; k <= n; ++k) {
        int lhs = op(op(i, j), k);
        int rhs = op(op(i, k), op(j, k));
        if (lhs != rhs) {
          result.self_distributive = false;
          result.sd_witness = {i, j, k, lhs, rhs};
          break;
        }
      }

  result.quandle_condition = true;
  for (int i = 1; i <= n; ++i)
    if (op(i, i) != i) {
      result.quandle_condition = false;
      break;
    }
  return result;
}

bool is_symmetric(const Rack& r) {
  for (int i = 1; i <= r.order(); ++i)
    for (int j = 1; j < i; ++j)
      if (r.op(i, j) != r.op(j, i)) return false;
  return true;
}

bool is_quasigroup(const Rack& r) {
  const int n = r.order();
  for (int i = 1; i <= n; ++i) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
      int v = r.op(i, j);
      if (seen[static_cast<std::size_t>(v) - 1]) return false;
      seen[static_cast<std::size_t>(v) - 1] = 1;
    }
  }
  return true;
}

namespace {

int mod1(long long v, int n) {  // representative of v in {1..n}
  long long m = v % n;
  if (m <= 0) m += n;
  return static_cast<int>(m);
}

}  // namespace

Rack dihedral_rack(int n) {
  if (n < 3) throw std::invalid_argument("dihedral rack needs n >= 3");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      table[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
          mod1(2LL * j - i, n);
  return std::get<Rack>(Rack::from_table(table));
}

Rack trivial_rack(int n) {
  if (n < 1) throw std::invalid_argument("trivial rack needs n >= 1");
  return Rack::from_perms_checked(
      std::vector<Perm>(static_cast<std::size_t>(n), Perm::identity(n)));
}

Rack cyclic_rack(int n) {
  if (n < 1) throw std::invalid_argument("cyclic rack needs n >= 1");
  std::vector<int> full(static_cast<std::size_t>(n));
  std::iota(full.begin(), full.end(), 1);
  Perm cycle = Perm::from_cycles(n, {full});
  return Rack::from_perms_checked(
      std::vector<Perm>(static_cast<std::size_t>(n), cycle));
}

Rack linear_alexander(int p, int m) {
  if (p < 1) throw std::invalid_argument("linear Alexander quandle needs p >= 1");
  if (std::gcd(mod1(m, p), p) != 1)
    throw std::invalid_argument("m must be a unit mod p");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(p),
                                      std::vector<int>(static_cast<std::size_t>(p)));
  for (int a = 1; a <= p; ++a)
    for (int b = 1; b <= p; ++b)
      table[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] =
          mod1(static_cast<long long>(m) * a + static_cast<long long>(1 - m) * b, p);
  return std::get<Rack>(Rack::from_table(table));
}

namespace {

// Arithmetic in Z_nmod[T]/(h) with h monic of degree d; elements are
// coefficient vectors of length d, constant term first.
struct QuotientRing {
  int nmod;
  std::vector<int> h_low;  // h's coefficients below the leading one

  int degree() const { return static_cast<int>(h_low.size()); }

  std::vector<int> times_t(const std::vector<int>& a) const {
    const int d = degree();
    std::vector<int> out(static_cast<std::size_t>(d), 0);
    int top = a[static_cast<std::size_t>(d) - 1];
    for (int t = d - 1; t >= 1; --t) out[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t) - 1];
    // T^d = -(h_0 + h_1 T + ... + h_{d-1} T^{d-1})
    for (int t = 0; t < d; ++t) {
      long long v = out[static_cast<std::size_t>(t)] -
                    static_cast<long long>(top) * h_low[static_cast<std::size_t>(t)];
      out[static_cast<std::size_t>(t)] = static_cast<int>(((v % nmod) + nmod) % nmod);
    }
    return out;
  }
};

int modular_inverse(int a, int n) {
  a = ((a % n) + n) % n;
  for (int x = 1; x < n; ++x)
    if (static_cast<long long>(a) * x % n == 1) return x;
  throw std::invalid_argument("not a unit in Z_n");
}

}  // namespace

Rack alexander_quotient(int nmod, const std::vector<int>& h) {
  if (nmod < 2) throw std::invalid_argument("coefficient modulus must be >= 2");
  if (h.size() < 2 || h.back() % nmod == 0)
    throw std::invalid_argument("h must have degree >= 1 with unit leading coefficient");
  if (std::gcd(((h[0] % nmod) + nmod) % nmod, nmod) != 1)
    throw std::invalid_argument("h(0) must be a unit mod n, or T is not invertible");
  if (std::gcd(((h.back() % nmod) + nmod) % nmod, nmod) != 1)
    throw std::invalid_argument("leading coefficient of h must be a unit mod n");

  // Normalize h to a monic generator of the same ideal.
  const int d = static_cast<int>(h.size()) - 1;
  const int lead_inv = modular_inverse(h.back(), nmod);
  QuotientRing ring{nmod, {}};
  ring.h_low.resize(static_cast<std::size_t>(d));
  for (int t = 0; t < d; ++t)
    ring.h_low[static_cast<std::size_t>(t)] =
        static_cast<int>((static_cast<long long>(((h[static_cast<std::size_t>(t)] % nmod) + nmod) % nmod) *
                          lead_inv) % nmod);

  long long count = 1;
  for (int t = 0; t < d; ++t) {
    count *= nmod;
    if (count > 4096) throw std::invalid_argument("quotient order too large");
  }
  const int n = static_cast<int>(count);

  auto coeffs_of = [&](int element) {  // 1-based element -> coefficient vector
    std::vector<int> c(static_cast<std::size_t>(d));
    int v = element - 1;
    for (int t = 0; t < d; ++t) {
      c[static_cast<std::size_t>(t)] = v % nmod;
      v /= nmod;
    }
    return c;
  };
  auto element_of = [&](const std::vector<int>& c) {
    int v = 0;
    for (int t = d - 1; t >= 0; --t) v = v * nmod + c[static_cast<std::size_t>(t)];
    return v + 1;
  };

  // a * b = T a + (1 - T) b = T (a - b) + b.
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 1; a <= n; ++a) {
    std::vector<int> ca = coeffs_of(a);
    for (int b = 1; b <= n; ++b) {
      std::vector<int> cb = coeffs_of(b);
      std::vector<int> diff(static_cast<std::size_t>(d));
      for (int t = 0; t < d; ++t)
        diff[static_cast<std::size_t>(t)] =
            ((ca[static_cast<std::size_t>(t)] - cb[static_cast<std::size_t>(t)]) % nmod + nmod) % nmod;
      std::vector<int> res = ring.times_t(diff);
      for (int t = 0; t < d; ++t)
        res[static_cast<std::size_t>(t)] =
            (res[static_cast<std::size_t>(t)] + cb[static_cast<std::size_t>(t)]) % nmod;
      table[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] = element_of(res);
    }
  }
  return std::get<Rack>(Rack::from_table(table));
}

Rack octahedron_quandle() {
  static const std::vector<std::vector<int>> table = {
      {1, 5, 2, 3, 4, 1},
      {3, 2, 6, 2, 1, 5},
      {4, 1, 3, 6, 3, 2},
      {5, 4, 1, 4, 6, 3},
      {2, 6, 5, 1, 5, 4},
      {6, 3, 4, 5, 2, 6},
  };
  return std::get<Rack>(Rack::from_table(table));
}

}  // namespace rackkit
