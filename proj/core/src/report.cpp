#include "abc/report.hpp"

#include <charconv>
#include <cstdio>

namespace abc {

const char* to_string(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::confirmed: return "confirmed";
        case VerificationReport::Status::confirmed_marginal: return "confirmed-marginal";
        case VerificationReport::Status::violated: return "violated";
        case VerificationReport::Status::inapplicable: return "inapplicable";
    }
    return "unknown";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string format_double_17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_double_shortest(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

void JsonWriter::separator() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (need_comma_) out_ += ',';
}

void JsonWriter::raw(const std::string& s) {
    separator();
    out_ += s;
    need_comma_ = true;
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += '{';
    stack_.push_back('o');
    need_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    stack_.pop_back();
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += '[';
    stack_.push_back('a');
    need_comma_ = false;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    stack_.pop_back();
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    if (need_comma_) out_ += ',';
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    need_comma_ = false;
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    raw('"' + json_escape(v) + '"');
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(double v) {
    raw(format_double_17(v));
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    raw(std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(bool v) {
    raw(v ? "true" : "false");
    return *this;
}

namespace {

void write_report(JsonWriter& w, const VerificationReport& r) {
    w.begin_object();
    w.key("claim").value(r.claim);
    w.key("status").value(to_string(r.status));
    w.key("margin").value(r.min_margin);
    w.key("tolerance").value(r.tolerance);
    w.key("witnesses").begin_array();
    for (const auto& g6 : r.witnesses) w.value(g6);
    w.end_array();
    w.key("params").begin_object();
    for (const auto& [k, v] : r.params) w.key(k).value(v);
    w.end_object();
    w.end_object();
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    JsonWriter w;
    write_report(w, r);
    return w.take();
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
    JsonWriter w;
    w.begin_array();
    for (const auto& r : rs) write_report(w, r);
    w.end_array();
    return w.take();
}

std::string report_to_text(const VerificationReport& r) {
    std::string out = r.claim;
    out += ": ";
    out += to_string(r.status);
    out += " (margin=" + format_double_shortest(r.min_margin) +
           ", tol=" + format_double_shortest(r.tolerance) + ")";
    for (const auto& [k, v] : r.params) out += "\n  " + k + " = " + v;
    for (const auto& g6 : r.witnesses) out += "\n  witness " + g6;
    return out;
}

}  // namespace abc
