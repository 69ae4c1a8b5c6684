#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuchsian/errors.hpp"

namespace fuchsian {

// Line-delimited key/value document with a versioned header line. Keys are
// single tokens; values run to the end of the line. Field order is part of
// the document, so print/parse round-trips byte-identically.
class Report {
public:
    static constexpr const char* kHeader = "format fuchsian.report.v1";

    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, const char* value) { put(key, std::string(value)); }
    void put(const std::string& key, long value) { put(key, std::to_string(value)); }
    void put(const std::string& key, unsigned long value) { put(key, std::to_string(value)); }
    void put(const std::string& key, bool value) { put(key, std::string(value ? "yes" : "no")); }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
    // First value for key, or empty string.
    std::string get(const std::string& key) const;
    bool has(const std::string& key) const;

    std::string print() const;
    static Report parse(const std::string& text);

    friend bool operator==(const Report& a, const Report& b) { return a.fields_ == b.fields_; }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace fuchsian
