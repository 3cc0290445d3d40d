#pragma once

// Profile document ingestion. The on-disk format is JSON: a top-level array
// of entries
//
//   { "series": "D", "rank": 4, "p": 2, "r": 3,
//     "degrees": [1, 1, 3], "bounds": [2, 2, 1] }
//
// For type-D entries at p = 2 the leading bound k_1 is pinned to v_2(n), so
// the "bounds" list may alternatively carry r - 1 entries (k_2, ..., k_r)
// and k_1 is derived.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "jinv/jprofile.hpp"

namespace jinv {

inline JProfile profile_from_json(const nlohmann::json& entry) {
    if (!entry.is_object()) throw SchemaError("profile entry must be an object");
    for (const char* key : {"series", "rank", "p", "r", "degrees", "bounds"})
        if (!entry.contains(key))
            throw SchemaError(std::string("profile entry missing field '") + key + "'");
    if (!entry["series"].is_string() || entry["series"].get<std::string>().size() != 1)
        throw SchemaError("profile field 'series' must be a one-letter string");
    for (const char* key : {"rank", "p", "r"})
        if (!entry[key].is_number_integer())
            throw SchemaError(std::string("profile field '") + key + "' must be an integer");
    for (const char* key : {"degrees", "bounds"})
        if (!entry[key].is_array())
            throw SchemaError(std::string("profile field '") + key + "' must be a list");

    const std::string series_str = entry["series"].get<std::string>();
    const int rank = entry["rank"].get<int>();
    const int p = entry["p"].get<int>();
    const int r = entry["r"].get<int>();

    std::optional<DynkinType> type;
    try {
        type = DynkinType(series_from_char(series_str[0]), rank);
    } catch (const InvalidInputError& e) {
        throw ConsistencyError(e.what());
    }

    auto int_list = [](const nlohmann::json& arr, const char* what) {
        std::vector<int> out;
        for (const auto& v : arr) {
            if (!v.is_number_integer())
                throw SchemaError(std::string("profile field '") + what +
                                  "' must contain integers");
            out.push_back(v.get<int>());
        }
        return out;
    };
    std::vector<int> degrees = int_list(entry["degrees"], "degrees");
    std::vector<int> bounds = int_list(entry["bounds"], "bounds");

    if (degrees.size() != static_cast<std::size_t>(r))
        throw SchemaError("profile field 'degrees' must have length r");
    if (type->series == Series::D && p == 2 &&
        bounds.size() == static_cast<std::size_t>(r) - 1) {
        bounds.insert(bounds.begin(), v2(static_cast<std::uint64_t>(rank)));
    }
    if (bounds.size() != static_cast<std::size_t>(r))
        throw SchemaError("profile field 'bounds' must have length r");

    return make_profile(type, p, std::move(degrees), std::move(bounds));
}

inline ProfileRegistry registry_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("profile document is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw SchemaError("profile document must be a top-level list");
    ProfileRegistry registry;
    for (const auto& entry : doc) registry.insert(profile_from_json(entry));
    return registry;
}

inline ProfileRegistry registry_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open profile file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return registry_from_json_text(buf.str());
}

// Bundled defaults.
//
// A-series: the profile of the adjoint group of type A_{n-1} (inner forms
// PGL_1(A), deg A = n) at a prime p | n is r = 1, d = [1], k = [v_p(n)]:
// the upper motive over the generic form is the motive of the Severi-Brauer
// variety of a division algebra of degree p^{v_p(n)}, whose dimension series
// (1 - t^{p^k})/(1 - t) pins the profile.
//
// D-series (p = 2): r = m + 1, d_1 = 1 and k_1 = v_2(n) are pinned; the tail
// degrees are d_i = 2i - 3 and the tail bounds follow the standard height
// table k_i = floor(log2((2n - 2)/d_i)).
inline const char* bundled_profiles_text() {
    return R"json([
  {"series": "A", "rank": 1,  "p": 2,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 2,  "p": 3,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 3,  "p": 2,  "r": 1, "degrees": [1], "bounds": [2]},
  {"series": "A", "rank": 4,  "p": 5,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 5,  "p": 2,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 5,  "p": 3,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 6,  "p": 7,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 7,  "p": 2,  "r": 1, "degrees": [1], "bounds": [3]},
  {"series": "A", "rank": 8,  "p": 3,  "r": 1, "degrees": [1], "bounds": [2]},
  {"series": "A", "rank": 9,  "p": 2,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 9,  "p": 5,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 10, "p": 11, "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 11, "p": 2,  "r": 1, "degrees": [1], "bounds": [2]},
  {"series": "A", "rank": 11, "p": 3,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 12, "p": 13, "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 13, "p": 2,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 13, "p": 7,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 14, "p": 3,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 14, "p": 5,  "r": 1, "degrees": [1], "bounds": [1]},
  {"series": "A", "rank": 15, "p": 2,  "r": 1, "degrees": [1], "bounds": [4]},

  {"series": "D", "rank": 4,  "p": 2, "r": 3, "degrees": [1, 1, 3],
   "bounds": [2, 2, 1]},
  {"series": "D", "rank": 5,  "p": 2, "r": 3, "degrees": [1, 1, 3],
   "bounds": [0, 3, 1]},
  {"series": "D", "rank": 6,  "p": 2, "r": 4, "degrees": [1, 1, 3, 5],
   "bounds": [1, 3, 1, 1]},
  {"series": "D", "rank": 7,  "p": 2, "r": 4, "degrees": [1, 1, 3, 5],
   "bounds": [0, 3, 2, 1]},
  {"series": "D", "rank": 8,  "p": 2, "r": 5, "degrees": [1, 1, 3, 5, 7],
   "bounds": [3, 3, 2, 1, 1]},
  {"series": "D", "rank": 9,  "p": 2, "r": 5, "degrees": [1, 1, 3, 5, 7],
   "bounds": [0, 4, 2, 1, 1]},
  {"series": "D", "rank": 10, "p": 2, "r": 6, "degrees": [1, 1, 3, 5, 7, 9],
   "bounds": [1, 4, 2, 1, 1, 1]},
  {"series": "D", "rank": 11, "p": 2, "r": 6, "degrees": [1, 1, 3, 5, 7, 9],
   "bounds": [0, 4, 2, 2, 1, 1]},
  {"series": "D", "rank": 12, "p": 2, "r": 7, "degrees": [1, 1, 3, 5, 7, 9, 11],
   "bounds": [2, 4, 2, 2, 1, 1, 1]}
])json";
}

inline const ProfileRegistry& bundled_profiles() {
    static const ProfileRegistry registry = registry_from_json_text(bundled_profiles_text());
    return registry;
}

}  // namespace jinv
