#include "rackkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rackkit {

int Pattern::sum() const {
  return std::accumulate(lengths.begin(), lengths.end(), 0);
}

Perm Perm::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  Perm p;
  p.img_.resize(static_cast<std::size_t>(degree));
  std::iota(p.img_.begin(), p.img_.end(), 1);
  return p;
}

Perm Perm::from_image(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : image) {
    if (v < 1 || v > n) throw std::invalid_argument("image value out of range");
    if (seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("image value repeated; not a bijection");
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
  Perm p;
  p.img_ = std::move(image);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle element out of range");
      if (used[static_cast<std::size_t>(v) - 1])
        throw std::invalid_argument("element appears in two cycles");
      used[static_cast<std::size_t>(v) - 1] = 1;
    }
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      int from = cycle[t];
      int to = cycle[(t + 1) % cycle.size()];
      p.img_[static_cast<std::size_t>(from) - 1] = to;
    }
  }
  return p;
}

Perm Perm::parse_cycles(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected element or ')' in cycle notation");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      cycle.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {  // tolerate comma separators
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw std::invalid_argument("unclosed cycle");
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.img_.resize(img_.size());
  for (int i = 1; i <= degree(); ++i)
    p.img_[static_cast<std::size_t>((*this)(i)) - 1] = i;
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("permutation degree mismatch in composition");
  Perm p;
  p.img_.resize(a.img_.size());
  for (int i = 1; i <= a.degree(); ++i)
    p.img_[static_cast<std::size_t>(i) - 1] = a(b(i));
  return p;
}

Perm Perm::power(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Perm acc = identity(degree());
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycleDecomposition Perm::cycle_decomposition() const {
  CycleDecomposition dec;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i) - 1]) continue;
    std::vector<int> cycle;
    int x = i;
    do {
      seen[static_cast<std::size_t>(x) - 1] = 1;
      cycle.push_back(x);
      x = (*this)(x);
    } while (x != i);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

Pattern Perm::pattern() const {
  Pattern pat;
  for (const auto& cycle : cycle_decomposition().cycles)
    pat.lengths.push_back(static_cast<int>(cycle.size()));
  std::sort(pat.lengths.begin(), pat.lengths.end());
  return pat;
}

long long Perm::order() const {
  long long l = 1;
  for (int len : pattern().lengths) l = std::lcm(l, static_cast<long long>(len));
  return l;
}

Perm conjugate(const Perm& a, const Perm& g) {
  if (a.degree() != g.degree())
    throw std::invalid_argument("permutation degree mismatch in conjugation");
  // g a g^-1 evaluated directly: x -> g(a(g^-1(x))).
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x)
    img[static_cast<std::size_t>(g(x)) - 1] = g(a(x));
  return Perm::from_image(std::move(img));
}

std::string format_cycles(const Perm& p, bool include_fixed) {
  std::string out;
  for (const auto& cycle : p.cycle_decomposition().cycles) {
    if (cycle.size() == 1 && !include_fixed) continue;
    out += '(';
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (t > 0) out += ' ';
      out += std::to_string(cycle[t]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace rackkit
