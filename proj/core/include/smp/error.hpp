#ifndef SMP_ERROR_HPP
#define SMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace smp {

// Base class for engine failures that are not plain range/argument errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed grid or round-map text. Line and column are 1-based; column 0
// means the whole line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace smp

#endif // SMP_ERROR_HPP
