#pragma once

#include <map>
#include <string>
#include <vector>

namespace tansurf::toml {

/// Value of the TOML subset used by scene files: strings, numbers,
/// booleans, and flat homogeneous arrays.
struct Value {
    enum class Kind { String, Number, Boolean, NumberArray, StringArray };
    Kind kind = Kind::Number;
    std::string str;
    double num = 0.0;
    bool boolean = false;
    std::vector<double> nums;
    std::vector<std::string> strs;
    int line = 0;
};

/// Flattened table: fully dotted key paths (section headers included).
using Table = std::map<std::string, Value>;

Table parse_string(const std::string& text);
Table parse_file(const std::string& path);

} // namespace tansurf::toml
