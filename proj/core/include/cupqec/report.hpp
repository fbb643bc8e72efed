#pragma once

#include <cstdint>
#include <string>

namespace cupqec {

// Accumulates key=value scalars and raw table lines in insertion order,
// so equal inputs always serialize to equal bytes.
class Report {
public:
    Report& kv(const std::string& key, const std::string& value);
    Report& kv(const std::string& key, const char* value);
    Report& kv(const std::string& key, std::uint64_t value);
    Report& line(const std::string& raw);

    const std::string& text() const { return text_; }

private:
    std::string text_;
};

} // namespace cupqec
