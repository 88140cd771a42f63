/** @file json_io.hpp
 *  @brief JSON encodings of systems, sets and reports.
 *
 *  Wire conventions: rationals are always strings ("p/q" or "p"); a PointSet
 *  is an array of integer indices; systems carry a "type" discriminator,
 *  either "permutation" (weights + map) or "iet" (lengths + permutation).
 *  Emission uses a fixed key order and canonical rational strings, so output
 *  is deterministic for fixed input.
 */
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "recur/iet.hpp"
#include "recur/recurrence.hpp"

namespace recur {

using Json = nlohmann::ordered_json;

/// {"type":"permutation","weights":[...],"map":[...]}
Json system_to_json(const FiniteMeasureSpace& space, const Transformation& map);

/// {"type":"iet","lengths":[...],"permutation":[...]}
Json iet_to_json(const Iet& iet);

Json point_set_to_json(const PointSet& s);

/// {"lhs":...,"rhs":...,"equal":...,"invariant_closure":[...]} plus
/// "normalized_lhs" when requested and defined.
Json verification_to_json(const VerificationReport& report, bool include_normalized);

Json series_to_json(const SeriesReport& report);
Json tower_to_json(const Tower& tower);
Json distribution_to_json(const std::vector<std::pair<long long, Rational>>& distribution);

/// Induced permutation system; "points" lists the original indices.
Json induced_to_json(const InducedSystem& induced);

/// A parsed system: either a finite permutation system or an exchange that
/// compiles on demand.
using ParsedSystem = std::variant<System, Iet>;

/// Parses and fully validates a system document, dispatching on "type".
ParsedSystem parse_system(const std::string& text);

/// {"points":[...]} against a space of the given size.
PointSet parse_point_set(const nlohmann::json& doc, int space_size);

/// {"intervals":[["a","b"],...]} within [0, total).
IntervalSet parse_interval_set(const nlohmann::json& doc, const Rational& total);

/// Parses a JSON document, mapping syntax errors to ParseError.
nlohmann::json parse_json(const std::string& text, const std::string& what);

}  // namespace recur
