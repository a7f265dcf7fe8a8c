// SPDX-License-Identifier: MIT
#include "temporeach/scheme_io.hpp"

#include <json.hpp>

#include "temporeach/errors.hpp"

namespace temporeach {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    json doc = json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ParseError("scheme is not valid JSON");
    return doc;
}

int int_field(const json& obj, const char* key, const char* context) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(std::string(context) + ": missing integer field '" + key + "'");
    return obj[key].get<int>();
}

std::string string_field(const json& obj, const char* key, const char* context) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw ParseError(std::string(context) + ": missing string field '" + key + "'");
    return obj[key].get<std::string>();
}

}  // namespace

SchemeKind detect_scheme_kind(std::string_view json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object()) throw ParseError("scheme must be a JSON object");
    const bool has_merges = doc.contains("merges");
    const bool has_delays = doc.contains("delays");
    if (has_merges == has_delays)
        throw ParseError("scheme must have exactly one of 'merges' or 'delays'");
    return has_merges ? SchemeKind::Merging : SchemeKind::Delay;
}

MergingScheme parse_merging_scheme(std::string_view json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("merges") || !doc["merges"].is_array())
        throw ParseError("merging scheme must be an object with a 'merges' array");
    MergingScheme scheme;
    for (const auto& item : doc["merges"]) {
        if (!item.is_object()) throw ParseError("merge entry must be an object");
        scheme.merges.push_back(
            {int_field(item, "start", "merge entry"), int_field(item, "len", "merge entry")});
    }
    return scheme;
}

DelayScheme parse_delay_scheme(std::string_view json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("delays") || !doc["delays"].is_array())
        throw ParseError("delay scheme must be an object with a 'delays' array");
    DelayScheme scheme;
    for (const auto& item : doc["delays"]) {
        if (!item.is_object()) throw ParseError("delay entry must be an object");
        scheme.delays.push_back({string_field(item, "u", "delay entry"),
                                 string_field(item, "v", "delay entry"),
                                 int_field(item, "from", "delay entry"),
                                 int_field(item, "to", "delay entry")});
    }
    return scheme;
}

std::string serialize_merging_scheme(const MergingScheme& scheme) {
    json arr = json::array();
    for (const auto& m : scheme.merges) arr.push_back({{"start", m.start}, {"len", m.length}});
    return json{{"merges", arr}}.dump();
}

std::string serialize_delay_scheme(const DelayScheme& scheme) {
    json arr = json::array();
    for (const auto& d : scheme.delays)
        arr.push_back({{"u", d.u}, {"v", d.v}, {"from", d.from}, {"to", d.to}});
    return json{{"delays", arr}}.dump();
}

}  // namespace temporeach
