#pragma once

#include <string>
#include <vector>

namespace mcc {

/// 1-based position of a token or construct in specification source.
struct SourceSpan {
    int line{1};
    int column{1};
    int length{0};

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorKind { Lexical, Syntactic, NameResolution, Type };

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Lexical: return "lexical";
        case ErrorKind::Syntactic: return "syntax";
        case ErrorKind::NameResolution: return "name";
        case ErrorKind::Type: return "type";
    }
    return "?";
}

struct ParseError {
    SourceSpan span;
    ErrorKind kind{ErrorKind::Syntactic};
    std::string message;
};

inline bool span_before(const SourceSpan& a, const SourceSpan& b) {
    if (a.line != b.line) return a.line < b.line;
    return a.column < b.column;
}

}  // namespace mcc
