#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace patsum {

inline bool ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline char ascii_upper(char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = ascii_lower(c);
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Collapses every whitespace run to a single space and trims the ends.
inline std::string normalize_whitespace(std::string_view s) {
    std::string out;
    bool in_space = true;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space) out += ' ';
            in_space = true;
        } else {
            out += c;
            in_space = false;
        }
    }
    if (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// Splits a camelCase / PascalCase identifier into its words.
// "EmailNotificationListener" -> {Email, Notification, Listener}
// "getAttributes" -> {get, Attributes}; digits stick to the previous word.
inline std::vector<std::string> split_camel(std::string_view ident) {
    std::vector<std::string> words;
    std::string cur;
    for (size_t i = 0; i < ident.size(); ++i) {
        char c = ident[i];
        if (c == '_' || c == '$') {
            if (!cur.empty()) words.push_back(cur);
            cur.clear();
            continue;
        }
        bool boundary = false;
        if (!cur.empty() && ascii_alpha(c) && c == ascii_upper(c)) {
            char prev = cur.back();
            // lower->Upper boundary, or Upper followed by lower after an acronym run
            if (prev == ascii_lower(prev) && ascii_alpha(prev)) boundary = true;
            else if (i + 1 < ident.size() && ascii_alpha(ident[i + 1]) &&
                     ident[i + 1] == ascii_lower(ident[i + 1]))
                boundary = true;
        }
        if (boundary) {
            words.push_back(cur);
            cur.clear();
        }
        cur += c;
    }
    if (!cur.empty()) words.push_back(cur);
    return words;
}

// Last '.'-separated segment: "pkg.Outer.Inner" -> "Inner", "Foo" -> "Foo".
inline std::string last_segment(std::string_view qualified) {
    auto pos = qualified.rfind('.');
    return std::string(pos == std::string_view::npos ? qualified : qualified.substr(pos + 1));
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace patsum
