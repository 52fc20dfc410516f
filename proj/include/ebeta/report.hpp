#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ebeta/rational.hpp"
#include "ebeta/symbolic.hpp"

namespace ebeta {

inline constexpr char kToolVersion[] = "1.0.0";

/// Machine-readable run report. Keys are emitted sorted, rationals as exact
/// "p/q" strings, numeric estimates as {"value", "err"} pairs; identical
/// invocations produce byte-identical JSON (timestamps are opt-in).
struct Report {
    std::string beta;     // "p/q", or "" for β-independent commands
    std::string command;
    nlohmann::json results = nlohmann::json::object();
    std::string status = "pass";  // "pass" | "fail" | "partial"
    std::optional<std::string> timestamp;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["beta"] = beta;
        j["command"] = command;
        j["results"] = results;
        j["status"] = status;
        if (timestamp) j["timestamp"] = *timestamp;
        return j;
    }
    std::string dump() const { return to_json().dump(2) + "\n"; }
};

inline nlohmann::json rat_json(const Rat& r) { return r.str(); }

inline nlohmann::json enclosure_json(const Enclosure& e) {
    return nlohmann::json{{"value", e.value}, {"err", e.err}};
}

inline nlohmann::json interval_json(const Interval& iv) {
    return nlohmann::json::array({iv.lo.str(), iv.hi.str()});
}

}  // namespace ebeta
