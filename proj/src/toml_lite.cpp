#include "tansurf/toml_lite.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tansurf/errors.hpp"

namespace tansurf::toml {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Removes a trailing comment, respecting quoted strings.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

bool bare_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

// Key: dotted sequence of bare or quoted segments, joined back with dots.
std::string parse_key(const std::string& s, int line) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '"') {
            const std::size_t end = s.find('"', i + 1);
            if (end == std::string::npos) fail(line, "unterminated quoted key");
            out += s.substr(i + 1, end - i - 1);
            i = end + 1;
        } else {
            const std::size_t start = i;
            while (i < s.size() && bare_key_char(s[i])) ++i;
            if (i == start) fail(line, "empty key segment");
            out += s.substr(start, i - start);
        }
        if (i < s.size()) {
            if (s[i] != '.') fail(line, "unexpected character in key");
            out += '.';
            ++i;
        }
    }
    if (out.empty() || out.back() == '.') fail(line, "malformed key");
    return out;
}

double parse_number(const std::string& s, int line) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size() || s.empty()) fail(line, "malformed number '" + s + "'");
    return v;
}

// Splits an array body at top-level commas (no nesting in this subset).
std::vector<std::string> split_array(const std::string& body, int line) {
    std::vector<std::string> items;
    std::string cur;
    bool quoted = false;
    for (char c : body) {
        if (c == '"') quoted = !quoted;
        if (c == ',' && !quoted) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) fail(line, "unterminated string in array");
    const std::string last = trim(cur);
    if (!last.empty()) items.push_back(last);
    return items;
}

Value parse_value(const std::string& raw, int line) {
    Value v;
    v.line = line;
    if (raw.empty()) fail(line, "missing value");
    if (raw.front() == '"') {
        if (raw.size() < 2 || raw.back() != '"') fail(line, "unterminated string");
        v.kind = Value::Kind::String;
        v.str = raw.substr(1, raw.size() - 2);
        return v;
    }
    if (raw == "true" || raw == "false") {
        v.kind = Value::Kind::Boolean;
        v.boolean = raw == "true";
        return v;
    }
    if (raw.front() == '[') {
        if (raw.back() != ']') fail(line, "unterminated array");
        const auto items = split_array(raw.substr(1, raw.size() - 2), line);
        const bool strings = !items.empty() && items.front().front() == '"';
        v.kind = strings ? Value::Kind::StringArray : Value::Kind::NumberArray;
        for (const auto& item : items) {
            if (strings) {
                if (item.size() < 2 || item.front() != '"' || item.back() != '"')
                    fail(line, "mixed array element types");
                v.strs.push_back(item.substr(1, item.size() - 2));
            } else {
                v.nums.push_back(parse_number(item, line));
            }
        }
        return v;
    }
    v.kind = Value::Kind::Number;
    v.num = parse_number(raw, line);
    return v;
}

} // namespace

Table parse_string(const std::string& text) {
    Table table;
    std::string prefix;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated table header");
            prefix = parse_key(trim(s.substr(1, s.size() - 2)), line);
            continue;
        }
        // split on the first unquoted '='
        std::size_t eq = std::string::npos;
        bool quoted = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '"') quoted = !quoted;
            else if (s[i] == '=' && !quoted) { eq = i; break; }
        }
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = parse_key(trim(s.substr(0, eq)), line);
        const std::string full = prefix.empty() ? key : prefix + "." + key;
        if (table.count(full)) fail(line, "duplicate key '" + full + "'");
        table[full] = parse_value(trim(s.substr(eq + 1)), line);
    }
    return table;
}

Table parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

} // namespace tansurf::toml
