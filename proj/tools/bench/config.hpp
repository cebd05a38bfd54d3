#pragma once

#include <map>
#include <string>
#include <vector>

namespace isfsf::bench {

// Key-value text configuration: one `key = value` pair per line, `#` starts a
// comment. Values keep their raw text; typed getters parse on access.
class Config {
public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;

    // comma-separated lists
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<long long> get_int_list(const std::string& key) const;
    std::vector<std::string> get_string_list(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

}  // namespace isfsf::bench
