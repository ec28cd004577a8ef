#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgb {

/// Two objects built for different ring shapes (n, k) were combined.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its mathematical domain
/// (division by zero, leading term of the zero vector, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

inline std::string shape_string(std::size_t nvars, std::size_t rank) {
    return "(n=" + std::to_string(nvars) + ", k=" + std::to_string(rank) + ")";
}

}  // namespace sgb
