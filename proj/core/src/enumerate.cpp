#include "rackkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rackkit/iso.hpp"

namespace rackkit {

std::string to_string(EnumMode mode) {
  switch (mode) {
    case EnumMode::racks: return "racks";
    case EnumMode::quandles: return "quandles";
    case EnumMode::pracks: return "pracks";
  }
  return "racks";
}

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Backtracking over the sequence (mu_1, ..., mu_n). Fixing mu_x forces
// mu at index mu_j(i) to equal mu_j mu_i mu_j^-1 for every assigned pair
// involving x; the closure either contradicts (prune) or pins later
// columns down to a single candidate.
struct SequenceSearch {
  int n;
  long long budget;
  long long nodes = 0;
  std::vector<std::vector<const Perm*>> candidates;  // per position, 1-based
  std::vector<const Perm*> known;                    // 1-based, nullptr = open
  std::vector<Rack> found;

  void run() {
    known.assign(static_cast<std::size_t>(n) + 1, nullptr);
    extend();
  }

  bool enforce(int index, const Perm& value, std::vector<int>& trail) {
    const Perm*& slot = known[static_cast<std::size_t>(index)];
    if (slot != nullptr) return *slot == value;
    for (const Perm* candidate : candidates[static_cast<std::size_t>(index)])
      if (*candidate == value) {
        slot = candidate;
        trail.push_back(index);
        return true;
      }
    return false;
  }

  bool propagate(std::vector<int>& trail) {
    for (std::size_t head = 0; head < trail.size(); ++head) {
      int x = trail[head];
      const Perm& mx = *known[static_cast<std::size_t>(x)];
      for (int j = 1; j <= n; ++j) {
        const Perm* mj = known[static_cast<std::size_t>(j)];
        if (mj == nullptr) continue;
        if (!enforce((*mj)(x), *mj * mx * mj->inverse(), trail)) return false;
        if (x != j && !enforce(mx(j), mx * *mj * mx.inverse(), trail)) return false;
      }
    }
    return true;
  }

  void extend() {
    int pos = 0;
    for (int i = 1; i <= n; ++i)
      if (known[static_cast<std::size_t>(i)] == nullptr) {
        pos = i;
        break;
      }
    if (pos == 0) {
      std::vector<Perm> mu;
      mu.reserve(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) mu.push_back(*known[static_cast<std::size_t>(i)]);
      found.push_back(Rack::from_perms_checked(std::move(mu)));
      return;
    }
    for (const Perm* candidate : candidates[static_cast<std::size_t>(pos)]) {
      if (++nodes > budget) throw EnumerationBudgetExceeded(budget);
      std::vector<int> trail;
      if (enforce(pos, *candidate, trail) && propagate(trail)) extend();
      for (int index : trail) known[static_cast<std::size_t>(index)] = nullptr;
    }
  }
};

EnumerationReport build_report(int n, EnumMode mode, std::vector<Rack> labeled) {
  // Dedupe by canonical form; classes are kept in canonical-key order.
  std::map<std::vector<int>, Rack> classes;
  for (Rack& rack : labeled) {
    Rack canon = canonical_form(rack);
    classes.emplace(flat_images(canon), std::move(canon));
  }

  EnumerationReport report;
  report.order = n;
  report.mode = mode;
  for (auto& [key, rack] : classes) {
    if (mode == EnumMode::quandles && !is_quandle(rack)) continue;
    if (mode == EnumMode::pracks && is_quandle(rack)) continue;
    report.counts_by_profile[profile(rack)] += 1;
    report.counts_by_k[kind(rack).k] += 1;
    report.classes.push_back(std::move(rack));
  }
  return report;
}

EnumerationReport enumerate_with_candidates(
    int n, EnumMode mode, const std::vector<Perm>& pool,
    const std::vector<std::vector<const Perm*>>& per_position, long long budget) {
  (void)pool;  // keeps the candidate pointers alive for the search
  SequenceSearch search{n, budget, 0, per_position, {}, {}};
  search.run();
  return build_report(n, mode, std::move(search.found));
}

}  // namespace

EnumerationReport enumerate_racks(int n, EnumMode mode, long long node_budget) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > 7) throw std::invalid_argument("enumeration supports n <= 7");
  std::vector<Perm> pool = all_perms(n);
  std::vector<std::vector<const Perm*>> per_position(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    for (const Perm& p : pool) {
      if (mode == EnumMode::quandles && p(i) != i) continue;
      per_position[static_cast<std::size_t>(i)].push_back(&p);
    }
  return enumerate_with_candidates(n, mode, pool, per_position, node_budget);
}

EnumerationReport enumerate_racks_with_profile(const ProfileSpec& spec, EnumMode mode,
                                               long long node_budget) {
  const int n = spec.order();
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > 8) throw std::invalid_argument("profile-constrained enumeration supports n <= 8");
  std::vector<Pattern> allowed = spec.per_element;
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());

  std::vector<Perm> pool;
  for (const Perm& p : all_perms(n))
    if (std::binary_search(allowed.begin(), allowed.end(), p.pattern()))
      pool.push_back(p);

  std::vector<std::vector<const Perm*>> per_position(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    for (const Perm& p : pool) {
      if (mode == EnumMode::quandles && p(i) != i) continue;
      per_position[static_cast<std::size_t>(i)].push_back(&p);
    }

  EnumerationReport report =
      enumerate_with_candidates(n, mode, pool, per_position, node_budget);

  // Patterns may mix between positions during the search; keep only the
  // classes realizing the requested profile.
  EnumerationReport filtered;
  filtered.order = report.order;
  filtered.mode = report.mode;
  for (Rack& rack : report.classes) {
    Profile prof = profile(rack);
    if (!spec.matches(prof)) continue;
    filtered.counts_by_profile[prof] += 1;
    filtered.counts_by_k[kind(rack).k] += 1;
    filtered.classes.push_back(std::move(rack));
  }
  return filtered;
}

int count_with_profile(const EnumerationReport& report, const ProfileSpec& spec) {
  if (spec.order() != report.order)
    throw std::invalid_argument("profile order does not match the report");
  int count = 0;
  for (const auto& [prof, c] : report.counts_by_profile)
    if (spec.matches(prof)) count += c;
  return count;
}

}  // namespace rackkit
