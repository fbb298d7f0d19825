#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace patsum {

// Raised by the lexer/parser on syntactically invalid input.
// The pipeline records the offending file as skipped and continues.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

// Raised by build_graph when the extends relation contains a cycle.
class CyclicInheritanceError : public std::runtime_error {
public:
    explicit CyclicInheritanceError(std::vector<std::string> cycle)
        : std::runtime_error(format(cycle)), cycle_(std::move(cycle)) {}

    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    static std::string format(const std::vector<std::string>& cycle) {
        std::string out = "cyclic inheritance:";
        for (const auto& t : cycle) out += " " + t;
        return out;
    }
    std::vector<std::string> cycle_;
};

class UnknownTypeError : public std::runtime_error {
public:
    explicit UnknownTypeError(const std::string& name)
        : std::runtime_error("unknown type: " + name) {}
};

// Raised by IR deserialisation on any shape/version mismatch.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& message)
        : std::runtime_error("schema error at " + path + ": " + message),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Raised by the surface realiser when a plan lacks a required slot.
class MissingSlotError : public std::runtime_error {
public:
    explicit MissingSlotError(const std::string& slot)
        : std::runtime_error("missing slot: " + slot), slot_(slot) {}

    const std::string& slot() const { return slot_; }

private:
    std::string slot_;
};

// Raised by the metric functions on empty candidate or reference input.
class EmptyInputError : public std::runtime_error {
public:
    explicit EmptyInputError(const std::string& what_input)
        : std::runtime_error("empty input: " + what_input) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& path, const std::string& message)
        : std::runtime_error("io error: " + path + ": " + message) {}
};

}  // namespace patsum
