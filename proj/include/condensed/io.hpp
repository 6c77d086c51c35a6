#pragma once

// JSON encoding of sites and presheaves, and the version constant shared by
// all reports.
//
// Format:
//   {
//     "site": {"max_card": M, "max_cover_size": N},
//     "values": {"0": [labels], "1": [labels], ...},
//     "restrictions": {"a->b:k": [cod-indices in dom order], ...}
//   }
// A restriction key "a->b:k" names the k-th canonical map from the
// cardinality-a object to the cardinality-b object; the table is the
// index-level map F(b) -> F(a).

#include <string>

#include "json.hpp"

#include "condensed/presheaf.hpp"

namespace condensed {

inline constexpr const char* kVersion = "0.1.0";

nlohmann::ordered_json serialize_presheaf(const Presheaf& f);

// Throws ParseError on malformed documents; functor-law violations from
// Presheaf::make propagate unchanged.
Presheaf parse_presheaf(const nlohmann::json& doc);

}  // namespace condensed
