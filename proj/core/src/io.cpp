#include "rackkit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rackkit/invariants.hpp"

namespace rackkit {

using nlohmann::json;

std::string perm_to_json(const Perm& p) { return json(p.image()).dump(); }

Perm perm_from_json(std::string_view text) {
  json parsed = json::parse(text);
  if (!parsed.is_array()) throw std::invalid_argument("expected a JSON array");
  return Perm::from_image(parsed.get<std::vector<int>>());
}

std::string rack_to_json(const Rack& r) {
  json doc;
  doc["order"] = r.order();
  json perms = json::array();
  for (const Perm& m : r.perms()) perms.push_back(m.image());
  doc["perms"] = perms;
  return doc.dump();
}

std::string rack_to_table_text(const Rack& r) {
  std::string out;
  for (const auto& row : r.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string rack_to_cycles_text(const Rack& r) {
  std::string out;
  for (const Perm& m : r.perms()) {
    out += format_cycles(m);
    out += '\n';
  }
  return out;
}

std::string rack_to_text(const Rack& r, RackFormat format) {
  switch (format) {
    case RackFormat::json: return rack_to_json(r) + "\n";
    case RackFormat::table: return rack_to_table_text(r);
    case RackFormat::cycles: return rack_to_cycles_text(r);
  }
  throw std::invalid_argument("unknown rack format");
}

std::variant<Rack, ValidationReport> rack_from_json(std::string_view text) {
  json doc = json::parse(text);
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("perms"))
    throw std::invalid_argument("rack JSON needs \"order\" and \"perms\"");
  const int n = doc["order"].get<int>();
  std::vector<Perm> mu;
  for (const auto& image : doc["perms"])
    mu.push_back(Perm::from_image(image.get<std::vector<int>>()));
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("rack JSON order does not match the sequence length");
  return Rack::from_perms(std::move(mu));
}

std::variant<Rack, ValidationReport> rack_from_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> values;
  int v = 0;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw std::invalid_argument("table must contain only integers");
  int n = 0;
  while (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) < values.size()) ++n;
  if (values.empty() || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != values.size())
    throw std::invalid_argument("table must hold n*n entries");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    table[static_cast<std::size_t>(i)] =
        std::vector<int>(values.begin() + static_cast<std::ptrdiff_t>(i) * n,
                         values.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
  return Rack::from_table(table);
}

std::variant<Rack, ValidationReport> rack_from_cycles_text(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(line);
  }
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw std::invalid_argument("cycles input is empty");
  std::vector<Perm> mu;
  for (const std::string& line : lines) mu.push_back(Perm::parse_cycles(n, line));
  return Rack::from_perms(std::move(mu));
}

std::variant<Rack, ValidationReport> rack_from_text(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return rack_from_json(text);
    if (c == '(') return rack_from_cycles_text(text);
    return rack_from_table_text(text);
  }
  throw std::invalid_argument("empty rack input");
}

Rack rack_from_text_checked(std::string_view text) {
  auto result = rack_from_text(text);
  if (auto* rack = std::get_if<Rack>(&result)) return std::move(*rack);
  throw std::invalid_argument("input is not a rack:\n" +
                              describe(std::get<ValidationReport>(result)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string info_json(const Rack& r) {
  json doc;
  Profile prof = profile(r);
  json profile_json = json::array();
  for (const Pattern& p : prof.per_element) profile_json.push_back(p.lengths);
  doc["profile"] = profile_json;

  json detail_json = json::array();
  for (const DetailEntry& entry : detail(r).entries)
    detail_json.push_back(
        {{"pattern", entry.pattern.lengths}, {"multiplicities", entry.multiplicities}});
  doc["detail"] = detail_json;

  doc["k"] = kind(r).k;
  doc["orbits"] = orbits(r).orbits;

  json deltas = json::array();
  for (const DeltaOrbit& delta : delta_orbits(r)) deltas.push_back(delta.cycle);
  doc["delta_orbits"] = deltas;

  Connectivity conn = connectivity(r);
  doc["connected"] = conn.connected;
  doc["c"] = conn.c.has_value() ? json(*conn.c) : json(nullptr);
  doc["symmetric"] = is_symmetric(r);
  doc["quasigroup"] = is_quasigroup(r);
  return doc.dump();
}

std::string describe(const ValidationReport& report) {
  std::string out;
  if (report.is_rack) {
    out = "valid rack";
    return out;
  }
  for (int j : report.bad_columns)
    out += "column " + std::to_string(j) + " is not a bijection\n";
  for (const Violation& v : report.violations)
    out += "(i=" + std::to_string(v.i) + ", j=" + std::to_string(v.j) +
           "): found " + format_cycles(v.found) + ", expected " +
           format_cycles(v.expected) + "\n";
  return out;
}

}  // namespace rackkit
