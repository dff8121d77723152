#pragma once

#include <stdexcept>
#include <string>

namespace trisub {

// A symbol survived normalization but has no assigned value.
class UnboundSymbolError : public std::runtime_error {
public:
    explicit UnboundSymbolError(const std::string& what) : std::runtime_error(what) {}
};

// factor_out_power was asked to divide by a factor some term lacks.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

class UnknownSymbolError : public std::runtime_error {
public:
    UnknownSymbolError(const std::string& name, int line, int column)
        : std::runtime_error("unknown symbol '" + name + "' (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          name(name),
          line(line),
          column(column) {}
    std::string name;
    int line;
    int column;
};

// A proof step references an output that does not exist yet.
class InvalidRefError : public std::runtime_error {
public:
    explicit InvalidRefError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trisub
