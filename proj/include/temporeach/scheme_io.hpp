// SPDX-License-Identifier: MIT
// JSON (de)serialization for merging and delay schemes.
//
//   {"merges": [{"start": 1, "len": 2}, ...]}
//   {"delays": [{"u": "a", "v": "b", "from": 1, "to": 2}, ...]}
//
// Schemes carry no lambda/mu/delta/kappa; those are instance parameters.
#pragma once

#include <string>
#include <string_view>

#include "temporeach/delay.hpp"
#include "temporeach/merge.hpp"

namespace temporeach {

enum class SchemeKind { Merging, Delay };

// Peeks at the top-level key. Throws ParseError when the document is not an
// object with exactly one of "merges"/"delays".
SchemeKind detect_scheme_kind(std::string_view json_text);

MergingScheme parse_merging_scheme(std::string_view json_text);  // throws ParseError
DelayScheme parse_delay_scheme(std::string_view json_text);      // throws ParseError

std::string serialize_merging_scheme(const MergingScheme& scheme);
std::string serialize_delay_scheme(const DelayScheme& scheme);

}  // namespace temporeach
