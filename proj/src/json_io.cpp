#include "recur/json_io.hpp"

namespace recur {

namespace {

Json rational_strings(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& v : values) out.push_back(v.str());
    return out;
}

std::vector<Rational> parse_rational_array(const nlohmann::json& doc, const std::string& field) {
    if (!doc.is_array()) {
        throw ParseError("field '" + field + "' must be an array of rational strings");
    }
    std::vector<Rational> out;
    out.reserve(doc.size());
    for (size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_string()) {
            throw ParseError("field '" + field + "[" + std::to_string(i) +
                             "]' must be a rational string");
        }
        out.push_back(Rational::parse(doc[i].get<std::string>()));
    }
    return out;
}

std::vector<int> parse_int_array(const nlohmann::json& doc, const std::string& field) {
    if (!doc.is_array()) {
        throw ParseError("field '" + field + "' must be an array of integers");
    }
    std::vector<int> out;
    out.reserve(doc.size());
    for (size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_number_integer()) {
            throw ParseError("field '" + field + "[" + std::to_string(i) +
                             "]' must be an integer");
        }
        out.push_back(doc[i].get<int>());
    }
    return out;
}

const nlohmann::json& require_field(const nlohmann::json& doc, const std::string& field) {
    const auto it = doc.find(field);
    if (it == doc.end()) {
        throw ParseError("missing field '" + field + "'");
    }
    return *it;
}

}  // namespace

Json system_to_json(const FiniteMeasureSpace& space, const Transformation& map) {
    Json out;
    out["type"] = "permutation";
    out["weights"] = rational_strings(space.weights());
    out["map"] = map.forward();
    return out;
}

Json iet_to_json(const Iet& iet) {
    Json out;
    out["type"] = "iet";
    out["lengths"] = rational_strings(iet.lengths());
    out["permutation"] = iet.arrangement();
    return out;
}

Json point_set_to_json(const PointSet& s) {
    return Json(s.members());
}

Json verification_to_json(const VerificationReport& report, bool include_normalized) {
    Json out;
    out["lhs"] = report.lhs.str();
    out["rhs"] = report.rhs.str();
    out["equal"] = report.equal;
    out["invariant_closure"] = point_set_to_json(report.rhs_set);
    if (include_normalized && report.normalized_lhs) {
        out["normalized_lhs"] = report.normalized_lhs->str();
    }
    return out;
}

Json series_to_json(const SeriesReport& report) {
    Json out;
    out["mu_E"] = report.mu_E.str();
    out["terms_a"] = rational_strings(report.terms_a);
    out["terms_b"] = rational_strings(report.terms_b);
    out["partial_sums"] = rational_strings(report.partial_sums);
    return out;
}

Json tower_to_json(const Tower& tower) {
    Json columns = Json::array();
    for (const TowerColumn& column : tower.columns) {
        Json c;
        c["return_time"] = column.return_time;
        c["base"] = point_set_to_json(column.base);
        Json levels = Json::array();
        for (const PointSet& level : column.levels) levels.push_back(point_set_to_json(level));
        c["levels"] = std::move(levels);
        columns.push_back(std::move(c));
    }
    Json out;
    out["columns"] = std::move(columns);
    return out;
}

Json distribution_to_json(const std::vector<std::pair<long long, Rational>>& distribution) {
    Json out = Json::array();
    for (const auto& [k, mass] : distribution) {
        Json entry;
        entry["return_time"] = k;
        entry["mass"] = mass.str();
        out.push_back(std::move(entry));
    }
    return out;
}

Json induced_to_json(const InducedSystem& induced) {
    Json out = system_to_json(induced.space, induced.map);
    out["points"] = induced.points;
    return out;
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON in " + what + ": " + e.what());
    }
}

ParsedSystem parse_system(const std::string& text) {
    const nlohmann::json doc = parse_json(text, "system document");
    if (!doc.is_object()) {
        throw ParseError("system document must be a JSON object");
    }
    const nlohmann::json& type = require_field(doc, "type");
    if (!type.is_string()) {
        throw ParseError("field 'type' must be a string");
    }
    const std::string kind = type.get<std::string>();
    if (kind == "permutation") {
        FiniteMeasureSpace space(parse_rational_array(require_field(doc, "weights"), "weights"));
        Transformation map =
            make_transformation(space, parse_int_array(require_field(doc, "map"), "map"));
        return System{std::move(space), std::move(map)};
    }
    if (kind == "iet") {
        return Iet(parse_rational_array(require_field(doc, "lengths"), "lengths"),
                   parse_int_array(require_field(doc, "permutation"), "permutation"));
    }
    throw ParseError("unknown system type '" + kind + "'");
}

PointSet parse_point_set(const nlohmann::json& doc, int space_size) {
    if (!doc.is_object()) {
        throw ParseError("set document must be a JSON object");
    }
    return PointSet(parse_int_array(require_field(doc, "points"), "points"), space_size);
}

IntervalSet parse_interval_set(const nlohmann::json& doc, const Rational& total) {
    if (!doc.is_object()) {
        throw ParseError("set document must be a JSON object");
    }
    const nlohmann::json& intervals = require_field(doc, "intervals");
    if (!intervals.is_array()) {
        throw ParseError("field 'intervals' must be an array of [\"a\",\"b\"] pairs");
    }
    std::vector<std::pair<Rational, Rational>> parsed;
    parsed.reserve(intervals.size());
    for (size_t i = 0; i < intervals.size(); ++i) {
        const nlohmann::json& pair = intervals[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string()) {
            throw ParseError("field 'intervals[" + std::to_string(i) +
                             "]' must be a pair of rational strings");
        }
        parsed.emplace_back(Rational::parse(pair[0].get<std::string>()),
                            Rational::parse(pair[1].get<std::string>()));
    }
    return IntervalSet(std::move(parsed), total);
}

}  // namespace recur
