#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "frontrun/numfmt.hpp"

namespace clijson {

inline std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 8);
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

// Minimal ordered JSON object builder. Numbers are emitted with 17
// significant digits (round-trip exact); non-finite values become null.
class Object {
public:
    Object& add(std::string_view key, double value) {
        open(key);
        body_ += std::isfinite(value) ? frontrun::format_g17(value) : "null";
        return *this;
    }

    Object& add(std::string_view key, std::uint64_t value) {
        open(key);
        body_ += std::to_string(value);
        return *this;
    }

    Object& add(std::string_view key, int value) {
        open(key);
        body_ += std::to_string(value);
        return *this;
    }

    Object& add(std::string_view key, bool value) {
        open(key);
        body_ += value ? "true" : "false";
        return *this;
    }

    Object& add(std::string_view key, std::string_view value) {
        open(key);
        body_ += '"';
        body_ += escape(value);
        body_ += '"';
        return *this;
    }

    Object& add(std::string_view key, const char* value) {
        return add(key, std::string_view(value));
    }

    Object& add_object(std::string_view key, const Object& value) {
        open(key);
        body_ += value.str();
        return *this;
    }

    [[nodiscard]] std::string str() const { return "{" + body_ + "}"; }

private:
    void open(std::string_view key) {
        if (!body_.empty()) {
            body_ += ',';
        }
        body_ += '"';
        body_ += escape(key);
        body_ += "\":";
    }

    std::string body_;
};

} // namespace clijson
