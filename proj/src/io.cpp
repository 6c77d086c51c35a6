#include "condensed/io.hpp"

namespace condensed {

nlohmann::ordered_json serialize_presheaf(const Presheaf& f) {
  const Site& site = *f.site();
  nlohmann::ordered_json doc;
  doc["site"] = {{"max_card", site.max_card()}, {"max_cover_size", site.max_cover_size()}};
  nlohmann::ordered_json values;
  for (std::size_t n = 0; n < site.num_objects(); ++n) {
    values[std::to_string(n)] = f.at(n).elems();
  }
  doc["values"] = std::move(values);
  nlohmann::ordered_json restrictions;
  for (std::size_t a = 0; a < site.num_objects(); ++a) {
    for (std::size_t b = 0; b < site.num_objects(); ++b) {
      for (std::size_t k = 0; k < site.hom(a, b).size(); ++k) {
        std::string key =
            std::to_string(a) + "->" + std::to_string(b) + ":" + std::to_string(k);
        restrictions[key] = f.rtab(a, b, k);
      }
    }
  }
  doc["restrictions"] = std::move(restrictions);
  return doc;
}

Presheaf parse_presheaf(const nlohmann::json& doc) {
  auto malformed = [](const std::string& what) {
    return Error(ErrorCode::ParseError, what);
  };
  if (!doc.is_object() || !doc.contains("site") || !doc.contains("values") ||
      !doc.contains("restrictions")) {
    throw malformed("document needs site, values, and restrictions");
  }
  const auto& s = doc["site"];
  if (!s.is_object() || !s.contains("max_card") || !s.contains("max_cover_size") ||
      !s["max_card"].is_number_unsigned() || !s["max_cover_size"].is_number_unsigned()) {
    throw malformed("site needs numeric max_card and max_cover_size");
  }
  SitePtr site = Site::make(s["max_card"].get<std::size_t>(),
                            s["max_cover_size"].get<std::size_t>());

  std::vector<FinSet> values(site->num_objects());
  for (std::size_t n = 0; n < site->num_objects(); ++n) {
    std::string key = std::to_string(n);
    if (!doc["values"].contains(key) || !doc["values"][key].is_array()) {
      throw malformed("missing value set for cardinality " + key);
    }
    std::vector<Label> labels;
    for (const auto& l : doc["values"][key]) {
      if (!l.is_string()) throw malformed("labels must be strings");
      labels.push_back(l.get<Label>());
    }
    values[n] = FinSet::of(std::move(labels));
  }

  std::vector<std::vector<std::vector<Table>>> restr(site->num_objects());
  for (std::size_t a = 0; a < site->num_objects(); ++a) {
    restr[a].resize(site->num_objects());
    for (std::size_t b = 0; b < site->num_objects(); ++b) {
      for (std::size_t k = 0; k < site->hom(a, b).size(); ++k) {
        std::string key =
            std::to_string(a) + "->" + std::to_string(b) + ":" + std::to_string(k);
        if (!doc["restrictions"].contains(key) || !doc["restrictions"][key].is_array()) {
          throw malformed("missing restriction table " + key);
        }
        Table tab;
        for (const auto& v : doc["restrictions"][key]) {
          if (!v.is_number_unsigned()) throw malformed("table entries must be indices");
          tab.push_back(v.get<std::size_t>());
        }
        if (tab.size() != values[b].size()) {
          throw malformed("table " + key + " has wrong length");
        }
        for (std::size_t v : tab) {
          if (v >= values[a].size()) throw malformed("table " + key + " index out of range");
        }
        restr[a][b].push_back(std::move(tab));
      }
    }
  }
  return Presheaf::make(std::move(site), std::move(values), std::move(restr));
}

}  // namespace condensed
