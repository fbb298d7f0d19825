#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "patsum/errors.hpp"
#include "patsum/text_util.hpp"

namespace patsum {

enum class TokKind { Identifier, Keyword, Number, StringLit, CharLit, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 1;
    int col = 1;

    bool is_kw(std::string_view kw) const { return kind == TokKind::Keyword && text == kw; }
    bool is_punct(std::string_view p) const { return kind == TokKind::Punct && text == p; }
    bool is_ident() const { return kind == TokKind::Identifier; }
};

inline const std::unordered_set<std::string>& java_keywords() {
    static const std::unordered_set<std::string> kws = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
        "class", "const", "continue", "default", "do", "double", "else", "enum",
        "extends", "final", "finally", "float", "for", "goto", "if", "implements",
        "import", "instanceof", "int", "interface", "long", "native", "new",
        "package", "private", "protected", "public", "return", "short", "static",
        "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while",
        // literals are keyword-like for our purposes
        "true", "false", "null",
    };
    return kws;
}

inline bool is_ident_start(char c) {
    return ascii_alpha(c) || c == '_' || c == '$' || static_cast<unsigned char>(c) >= 0x80;
}

inline bool is_ident_part(char c) { return is_ident_start(c) || ascii_digit(c); }

// Tokenises Java source. Multi-character operators are combined except for
// '>>' / '<<' (kept as single angle tokens so generic types scan cleanly).
inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto peek = [&](size_t off = 0) -> char {
        return i + off < src.size() ? src[i + off] : '\0';
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && peek(1) == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '/' && peek(1) == '*') {
            int start_line = line, start_col = col;
            advance(2);
            while (i < src.size() && !(src[i] == '*' && peek(1) == '/')) advance(1);
            if (i >= src.size()) throw ParseError(start_line, start_col, "unterminated block comment");
            advance(2);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (is_ident_start(c)) {
            size_t start = i;
            while (i < src.size() && is_ident_part(src[i])) advance(1);
            tok.text = std::string(src.substr(start, i - start));
            tok.kind = java_keywords().count(tok.text) ? TokKind::Keyword : TokKind::Identifier;
            out.push_back(std::move(tok));
            continue;
        }
        if (ascii_digit(c) || (c == '.' && ascii_digit(peek(1)))) {
            size_t start = i;
            advance(1);
            while (i < src.size()) {
                char d = src[i];
                if (ascii_digit(d) || ascii_alpha(d) || d == '_' || d == '.') {
                    advance(1);
                } else if ((d == '+' || d == '-') && i > start &&
                           (src[i - 1] == 'e' || src[i - 1] == 'E')) {
                    advance(1);
                } else {
                    break;
                }
            }
            tok.kind = TokKind::Number;
            tok.text = std::string(src.substr(start, i - start));
            out.push_back(std::move(tok));
            continue;
        }
        if (c == '"') {
            size_t start = i;
            advance(1);
            while (i < src.size() && src[i] != '"') {
                if (src[i] == '\\') advance(1);
                if (src[i] == '\n') throw ParseError(tok.line, tok.col, "unterminated string literal");
                advance(1);
            }
            if (i >= src.size()) throw ParseError(tok.line, tok.col, "unterminated string literal");
            advance(1);
            tok.kind = TokKind::StringLit;
            tok.text = std::string(src.substr(start, i - start));
            out.push_back(std::move(tok));
            continue;
        }
        if (c == '\'') {
            size_t start = i;
            advance(1);
            while (i < src.size() && src[i] != '\'') {
                if (src[i] == '\\') advance(1);
                advance(1);
            }
            if (i >= src.size()) throw ParseError(tok.line, tok.col, "unterminated char literal");
            advance(1);
            tok.kind = TokKind::CharLit;
            tok.text = std::string(src.substr(start, i - start));
            out.push_back(std::move(tok));
            continue;
        }
        // punctuation / operators
        static const std::array<std::string_view, 18> two_char = {
            "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=",
            "*=", "/=", "%=", "&=", "|=", "^=", "->", "::",
        };
        tok.kind = TokKind::Punct;
        if (c == '.' && peek(1) == '.' && peek(2) == '.') {
            tok.text = "...";
            advance(3);
        } else {
            std::string_view pair = src.substr(i, 2);
            bool matched = false;
            for (auto tc : two_char) {
                if (pair == tc) {
                    tok.text = std::string(tc);
                    advance(2);
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                static const std::string singles = "(){}[];,.<>=+-*/%!&|^~?:@";
                if (singles.find(c) == std::string::npos)
                    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
                tok.text = std::string(1, c);
                advance(1);
            }
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = TokKind::End;
    end.line = line;
    end.col = col;
    out.push_back(std::move(end));
    return out;
}

}  // namespace patsum
