#ifndef RACKKIT_IO_HPP
#define RACKKIT_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "rackkit/rack.hpp"

namespace rackkit {

/// One-line image form, e.g. [3,2,1] for 1->3, 2->2, 3->1.
std::string perm_to_json(const Perm& p);
Perm perm_from_json(std::string_view text);

/// {"order": n, "perms": [[...images...], ...]}, compact, sorted keys.
std::string rack_to_json(const Rack& r);

/// The n x n multiplication table, one row per line, entries separated by
/// single spaces, trailing newline. Row i column j holds i * j.
std::string rack_to_table_text(const Rack& r);

/// One permutation per line in cycle notation.
std::string rack_to_cycles_text(const Rack& r);

enum class RackFormat { json, table, cycles };

std::string rack_to_text(const Rack& r, RackFormat format);

/// Parsers return the validation report instead of a Rack when the input
/// spells a well-formed sequence that fails the rack axioms; malformed
/// input throws std::invalid_argument.
std::variant<Rack, ValidationReport> rack_from_json(std::string_view text);
std::variant<Rack, ValidationReport> rack_from_table_text(std::string_view text);
std::variant<Rack, ValidationReport> rack_from_cycles_text(std::string_view text);

/// Auto-detects the format: '{' starts JSON, '(' cycle notation, a digit
/// the table format.
std::variant<Rack, ValidationReport> rack_from_text(std::string_view text);

/// rack_from_text, but throws std::invalid_argument (with the first
/// violation in the message) when the input is not a rack.
Rack rack_from_text_checked(std::string_view text);

std::string read_file(const std::string& path);

/// The JSON document emitted by the info command: profile, detail, k,
/// orbits, delta_orbits, connected, c, symmetric, quasigroup.
std::string info_json(const Rack& r);

/// Summary of a ValidationReport, one finding per line.
std::string describe(const ValidationReport& report);

}  // namespace rackkit

#endif
