#pragma once

#include <string>
#include <utility>
#include <vector>

namespace abc {

/// Per-claim verification record.
struct VerificationReport {
    enum class Status { confirmed, confirmed_marginal, violated, inapplicable };

    std::string claim;
    Status status = Status::inapplicable;
    double min_margin = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> witnesses;  // graph6 of extremes / violations
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    double runtime_seconds = 0.0;  // informational; not serialized

    bool passed() const {
        return status == Status::confirmed || status == Status::confirmed_marginal;
    }
    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
};

const char* to_string(VerificationReport::Status s);

/// Minimal deterministic JSON writer: insertion-ordered keys, doubles with
/// 17 significant digits, no whitespace variance. Identical inputs give
/// byte-identical output.
class JsonWriter {
public:
    std::string take() { return std::move(out_); }

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(double v);
    JsonWriter& value(long long v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);

private:
    void separator();
    void raw(const std::string& s);

    std::string out_;
    std::vector<char> stack_;  // 'o' or 'a'
    bool need_comma_ = false;
    bool after_key_ = false;
};

std::string json_escape(const std::string& s);
std::string format_double_17(double v);        // JSON convention
std::string format_double_shortest(double v);  // CSV convention

/// {claim, status, margin, tolerance, witnesses:[graph6], params}
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
std::string report_to_text(const VerificationReport& r);

}  // namespace abc
