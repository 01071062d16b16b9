#pragma once

// Minimal ordered JSON value for reports. Integers are arbitrary precision and
// written as bare number tokens. dump() uses the same layout as
// nlohmann::json::dump(2), so reports survive a parse/dump round trip.

#include "tightsf/arith.hpp"
#include "tightsf/slope.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tightsf {

class Json {
public:
    using Array = std::vector<Json>;
    using Object = std::vector<std::pair<std::string, Json>>;

    Json() : value_(nullptr) {}
    Json(std::nullptr_t) : value_(nullptr) {}
    Json(bool b) : value_(b) {}
    Json(int x) : value_(Int(x)) {}
    Json(long x) : value_(Int(x)) {}
    Json(const Int& x) : value_(x) {}
    Json(const char* s) : value_(std::string(s)) {}
    Json(std::string s) : value_(std::move(s)) {}
    Json(Array a) : value_(std::move(a)) {}
    Json(Object o) : value_(std::move(o)) {}

    static Json array() { return Json(Array{}); }
    static Json object() { return Json(Object{}); }

    /// Append to an object (keys keep insertion order).
    Json& set(std::string key, Json value);
    /// Append to an array.
    Json& push(Json value);

    std::string dump(int indent = 2) const;

private:
    void write(std::string& out, int indent, int depth) const;

    std::variant<std::nullptr_t, bool, Int, std::string, Array, Object> value_;
};

/// {"num": n, "den": d}
Json to_json(const Rational& x);
/// {"num": n, "den": d}; inf is {"num": 1, "den": 0}.
Json to_json(const Slope& s);

}  // namespace tightsf
