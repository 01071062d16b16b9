#include "tightsf/json_writer.hpp"

#include <cstdio>

namespace tightsf {

Json& Json::set(std::string key, Json value)
{
    std::get<Object>(value_).emplace_back(std::move(key), std::move(value));
    return *this;
}

Json& Json::push(Json value)
{
    std::get<Array>(value_).push_back(std::move(value));
    return *this;
}

namespace {

void write_string(std::string& out, const std::string& s)
{
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\b':
            out += "\\b";
            break;
        case '\f':
            out += "\\f";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\r':
            out += "\\r";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
}

void newline(std::string& out, int indent, int depth)
{
    if (indent < 0)
        return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * depth), ' ');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const
{
    const char* colon = indent < 0 ? ":" : ": ";
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (auto b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (auto i = std::get_if<Int>(&value_)) {
        out += i->get_str();
    } else if (auto s = std::get_if<std::string>(&value_)) {
        write_string(out, *s);
    } else if (auto a = std::get_if<Array>(&value_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (std::size_t k = 0; k < a->size(); ++k) {
            if (k)
                out += ',';
            newline(out, indent, depth + 1);
            (*a)[k].write(out, indent, depth + 1);
        }
        newline(out, indent, depth);
        out += ']';
    } else {
        const auto& o = std::get<Object>(value_);
        if (o.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        for (std::size_t k = 0; k < o.size(); ++k) {
            if (k)
                out += ',';
            newline(out, indent, depth + 1);
            write_string(out, o[k].first);
            out += colon;
            o[k].second.write(out, indent, depth + 1);
        }
        newline(out, indent, depth);
        out += '}';
    }
}

std::string Json::dump(int indent) const
{
    std::string out;
    write(out, indent, 0);
    return out;
}

Json to_json(const Rational& x)
{
    Rational c = x;
    c.canonicalize();
    return Json::object().set("num", c.get_num()).set("den", c.get_den());
}

Json to_json(const Slope& s)
{
    return Json::object().set("num", s.num()).set("den", s.den());
}

}  // namespace tightsf
