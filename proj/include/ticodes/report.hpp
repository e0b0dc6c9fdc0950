// Copyright 2026 The ticodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Report records. The JSON form is canonical (sorted keys); the human form is
// a flattened rendering of the same tree.

#ifndef TICODES_REPORT_HPP
#define TICODES_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ticodes/bitmatrix.hpp"
#include "ticodes/spec_file.hpp"

namespace ticodes {

using Json = nlohmann::json;

inline constexpr const char *kReportSchema = "ticodes-report/1";

struct Report {
    std::string command;
    Json spec;        // null when the command takes no spec
    Json parameters;  // object
    Json result;      // object
    double seconds = 0;
    bool cache_hit = false;

    Json to_json() const {
        Json j;
        j["schema"] = kReportSchema;
        j["command"] = command;
        j["spec"] = spec;
        j["parameters"] = parameters.is_null() ? Json::object() : parameters;
        j["result"] = result.is_null() ? Json::object() : result;
        j["timing"] = {{"seconds", seconds}, {"cache_hit", cache_hit}};
        return j;
    }
};

inline Json support_json(const BitVector &v) {
    Json out = Json::array();
    for (size_t i : v.support()) {
        out.push_back(i);
    }
    return out;
}

inline Json spec_json(const CodeSpec &s) {
    Json j;
    j["name"] = s.name;
    if (!s.description.empty()) {
        j["description"] = s.description;
    }
    j["variables"] = s.context->names();
    j["f"] = s.f.to_string();
    j["g"] = s.g ? Json(s.g->to_string()) : Json(nullptr);
    if (s.boundary) {
        Json rels = Json::array();
        for (const auto &r : s.presentation().relations) {
            rels.push_back(relation_to_string(r, *s.context));
        }
        j["boundary"] = rels;
    } else {
        j["boundary"] = nullptr;
    }
    j["has_lift"] = s.lift.has_value();
    return j;
}

namespace detail {

inline std::string scalar_text(const Json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    if (v.is_number_float()) {
        return format_number(v.get<double>());
    }
    return v.dump();
}

inline bool is_scalar_array(const Json &v) {
    if (!v.is_array()) {
        return false;
    }
    for (const auto &e : v) {
        if (e.is_object() || e.is_array()) {
            return false;
        }
    }
    return true;
}

inline void flatten(const Json &v, const std::string &prefix, std::ostream &os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
        }
    } else if (v.is_array() && (!is_scalar_array(v) || (!v.empty() && v[0].is_string() && v.size() > 1 &&
                                                        v[0].get<std::string>().find(' ') != std::string::npos))) {
        for (size_t i = 0; i < v.size(); i++) {
            flatten(v[i], prefix + "[" + std::to_string(i) + "]", os);
        }
    } else if (v.is_array()) {
        os << prefix << ": ";
        for (size_t i = 0; i < v.size(); i++) {
            os << (i ? ", " : "") << scalar_text(v[i]);
        }
        os << "\n";
    } else {
        os << prefix << ": " << scalar_text(v) << "\n";
    }
}

}  // namespace detail

/// One `key: value` line per leaf, in the same order as the JSON keys.
inline std::string render_human(const Report &r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    if (!r.spec.is_null()) {
        os << "spec: " << r.spec.value("name", std::string("?")) << "\n";
    }
    detail::flatten(r.parameters, "parameters", os);
    detail::flatten(r.result, "", os);
    os << "time: " << format_number(r.seconds) << " s" << (r.cache_hit ? " (cached)" : "") << "\n";
    return os.str();
}

/// 64-bit FNV-1a.
inline uint64_t fnv1a(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Disk cache of result objects keyed by a content hash.
class ResultCache {
  public:
    explicit ResultCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

    /// TICODES_CACHE_DIR, then $XDG_CACHE_HOME/ticodes, then ~/.cache/ticodes.
    static std::optional<std::filesystem::path> default_directory() {
        if (const char *d = std::getenv("TICODES_CACHE_DIR"); d && *d) {
            return std::filesystem::path(d);
        }
        if (const char *x = std::getenv("XDG_CACHE_HOME"); x && *x) {
            return std::filesystem::path(x) / "ticodes";
        }
        if (const char *h = std::getenv("HOME"); h && *h) {
            return std::filesystem::path(h) / ".cache" / "ticodes";
        }
        return std::nullopt;
    }

    static std::string key(const std::string &command, const std::string &spec_text, const Json &parameters) {
        std::string material = std::string(kReportSchema) + "\n" + command + "\n" + spec_text + "\n" + parameters.dump();
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(material)));
        return buf;
    }

    bool enabled() const {
        return dir_.has_value();
    }

    std::optional<Json> load(const std::string &key) const {
        if (!dir_) {
            return std::nullopt;
        }
        std::ifstream in(*dir_ / (key + ".json"));
        if (!in) {
            return std::nullopt;
        }
        try {
            Json j = Json::parse(in);
            if (j.value("schema", std::string()) != kReportSchema || !j.contains("result")) {
                return std::nullopt;
            }
            return j["result"];
        } catch (const Json::exception &) {
            return std::nullopt;
        }
    }

    /// Best effort: an unwritable cache directory only disables caching.
    void store(const std::string &key, const Json &result) const {
        if (!dir_) {
            return;
        }
        std::error_code ec;
        std::filesystem::create_directories(*dir_, ec);
        if (ec) {
            return;
        }
        auto final_path = *dir_ / (key + ".json");
        auto tmp = *dir_ / (key + ".json.tmp");
        {
            std::ofstream out(tmp);
            if (!out) {
                return;
            }
            out << Json{{"schema", kReportSchema}, {"result", result}}.dump();
        }
        std::filesystem::rename(tmp, final_path, ec);
    }

  private:
    std::optional<std::filesystem::path> dir_;
};

}  // namespace ticodes

#endif
