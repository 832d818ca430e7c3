#include "rackkit/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace rackkit {

namespace {

struct RawCrossing {
  int a, b, c, d;  // counterclockwise from the incoming under edge
};

std::vector<RawCrossing> parse_tuples(std::string_view text) {
  std::vector<RawCrossing> tuples;
  std::size_t pos = 0;
  auto skip_filler = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == 'X' ||
            text[pos] == 'x' || text[pos] == ','))
      ++pos;
  };
  skip_filler();
  while (pos < text.size()) {
    char open = text[pos];
    if (open != '(' && open != '[')
      throw std::invalid_argument("expected a PD tuple");
    char close = open == '(' ? ')' : ']';
    ++pos;
    std::vector<int> entries;
    while (true) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos >= text.size()) throw std::invalid_argument("unterminated PD tuple");
      if (text[pos] == close) {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected an edge label in PD tuple");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      entries.push_back(v);
    }
    if (entries.size() != 4)
      throw std::invalid_argument("PD tuple must have exactly 4 entries");
    tuples.push_back({entries[0], entries[1], entries[2], entries[3]});
    skip_filler();
  }
  return tuples;
}

}  // namespace

KnotDiagram parse_pd(std::string_view text) {
  std::vector<RawCrossing> tuples = parse_tuples(text);

  KnotDiagram diagram;
  if (tuples.empty()) {
    // Zero-crossing unknot.
    diagram.arc_count = 1;
    return diagram;
  }

  int max_label = 0;
  for (const RawCrossing& t : tuples)
    for (int v : {t.a, t.b, t.c, t.d}) {
      if (v < 1) throw std::invalid_argument("edge labels must be positive");
      max_label = std::max(max_label, v);
    }

  // Each edge joins exactly two crossing ends, and the under strand leaves
  // on the successor edge.
  std::vector<int> uses(static_cast<std::size_t>(max_label) + 1, 0);
  for (const RawCrossing& t : tuples)
    for (int v : {t.a, t.b, t.c, t.d}) ++uses[static_cast<std::size_t>(v)];
  for (int v = 1; v <= max_label; ++v)
    if (uses[static_cast<std::size_t>(v)] != 0 && uses[static_cast<std::size_t>(v)] != 2)
      throw std::invalid_argument("edge label " + std::to_string(v) +
                                  " does not appear exactly twice");
  for (const RawCrossing& t : tuples)
    if (t.a % max_label + 1 != t.c)
      throw std::invalid_argument("under strand edges are not consecutive");

  // Union-find over edge labels; the over strand's two edges are one arc.
  std::vector<int> parent(static_cast<std::size_t>(max_label) + 1);
  for (int v = 0; v <= max_label; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };

  std::vector<char> seen(static_cast<std::size_t>(max_label) + 1, 0);
  for (const RawCrossing& t : tuples) {
    for (int v : {t.a, t.b, t.c, t.d}) seen[static_cast<std::size_t>(v)] = 1;
    unite(t.b, t.d);
  }

  // Arc ids by first appearance of each class representative, 1-based.
  for (int v = 1; v <= max_label; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) continue;
    int root = find(v);
    if (!diagram.label_to_arc.contains(root))
      diagram.label_to_arc.emplace(root, static_cast<int>(diagram.label_to_arc.size()) + 1);
  }
  for (int v = 1; v <= max_label; ++v)
    if (seen[static_cast<std::size_t>(v)])
      diagram.label_to_arc.emplace(v, diagram.label_to_arc.at(find(v)));
  diagram.arc_count = 0;
  for (const auto& [label, arc] : diagram.label_to_arc)
    diagram.arc_count = std::max(diagram.arc_count, arc);

  // Sign from the orientation of the over strand: edge numbers advance by
  // one (cyclically) along the knot, so the over strand runs b -> d when
  // d = b + 1 and d -> b when b = d + 1.
  auto next_label = [&](int v) { return v == max_label ? 1 : v + 1; };
  for (const RawCrossing& t : tuples) {
    Crossing crossing;
    crossing.under_in = diagram.label_to_arc.at(t.a);
    crossing.under_out = diagram.label_to_arc.at(t.c);
    crossing.over = diagram.label_to_arc.at(t.b);
    if (next_label(t.b) == t.d)
      crossing.sign = +1;
    else if (next_label(t.d) == t.b)
      crossing.sign = -1;
    else
      throw std::invalid_argument("over strand edges are not consecutive");
    diagram.crossings.push_back(crossing);
  }
  return diagram;
}

KnotDiagram mirror(const KnotDiagram& d) {
  KnotDiagram out = d;
  for (Crossing& crossing : out.crossings) crossing.sign = -crossing.sign;
  return out;
}

ColoringCount count_colorings(const KnotDiagram& d, const Rack& target) {
  const int n = target.order();
  const int arcs = d.arc_count;
  for (const Crossing& crossing : d.crossings)
    for (int arc : {crossing.under_in, crossing.over, crossing.under_out})
      if (arc < 1 || arc > arcs)
        throw std::invalid_argument("crossing references an unknown arc");

  std::vector<int> color(static_cast<std::size_t>(arcs) + 1, 0);  // 0 = unassigned

  // Unit propagation: a crossing with the over arc and one of the under
  // arcs colored determines the other under arc.
  auto propagate = [&](std::vector<int>& trail) -> bool {
    for (bool changed = true; changed;) {
      changed = false;
      for (const Crossing& crossing : d.crossings) {
        int over = color[static_cast<std::size_t>(crossing.over)];
        if (over == 0) continue;
        int in = color[static_cast<std::size_t>(crossing.under_in)];
        int out = color[static_cast<std::size_t>(crossing.under_out)];
        int want_out = in == 0 ? 0
                               : (crossing.sign > 0 ? target.op(in, over)
                                                    : target.op_dual(in, over));
        if (in != 0 && out == 0) {
          color[static_cast<std::size_t>(crossing.under_out)] = want_out;
          trail.push_back(crossing.under_out);
          changed = true;
        } else if (in != 0 && out != want_out) {
          return false;
        } else if (in == 0 && out != 0) {
          int want_in = crossing.sign > 0 ? target.op_dual(out, over)
                                          : target.op(out, over);
          color[static_cast<std::size_t>(crossing.under_in)] = want_in;
          trail.push_back(crossing.under_in);
          changed = true;
        }
      }
    }
    return true;
  };

  long long total = 0;
  auto assign = [&](auto&& self, int arc) -> void {
    while (arc <= arcs && color[static_cast<std::size_t>(arc)] != 0) ++arc;
    if (arc > arcs) {
      ++total;
      return;
    }
    for (int value = 1; value <= n; ++value) {
      std::vector<int> trail{arc};
      color[static_cast<std::size_t>(arc)] = value;
      if (propagate(trail)) self(self, arc + 1);
      for (int touched : trail) color[static_cast<std::size_t>(touched)] = 0;
    }
  };
  assign(assign, 1);
  return {total, n};
}

}  // namespace rackkit
