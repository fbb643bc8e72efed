#include "cupqec/report.hpp"

namespace cupqec {

Report& Report::kv(const std::string& key, const std::string& value) {
    text_ += key;
    text_ += '=';
    text_ += value;
    text_ += '\n';
    return *this;
}

Report& Report::kv(const std::string& key, const char* value) {
    return kv(key, std::string(value));
}

Report& Report::kv(const std::string& key, std::uint64_t value) {
    return kv(key, std::to_string(value));
}

Report& Report::line(const std::string& raw) {
    text_ += raw;
    text_ += '\n';
    return *this;
}

} // namespace cupqec
