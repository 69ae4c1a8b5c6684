#include "fuchsian/report.hpp"

#include <sstream>

namespace fuchsian {

void Report::put(const std::string& key, const std::string& value) {
    if (key.empty() || key.find_first_of(" \n") != std::string::npos)
        throw Error("report key must be a single token");
    if (value.find('\n') != std::string::npos)
        throw Error("report value must not contain newlines");
    fields_.emplace_back(key, value);
}

std::string Report::get(const std::string& key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return v;
    return "";
}

bool Report::has(const std::string& key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return true;
    return false;
}

std::string Report::print() const {
    std::string out = kHeader;
    out += '\n';
    for (const auto& [k, v] : fields_) {
        out += k;
        if (!v.empty()) {
            out += ' ';
            out += v;
        }
        out += '\n';
    }
    return out;
}

Report Report::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw ParseError(0, "missing or unsupported report header");
    Report r;
    std::size_t pos = line.size() + 1;
    while (std::getline(in, line)) {
        if (line.empty()) throw ParseError(pos, "blank line in report");
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos)
            r.put(line, "");
        else
            r.put(line.substr(0, sp), line.substr(sp + 1));
        pos += line.size() + 1;
    }
    return r;
}

}  // namespace fuchsian
