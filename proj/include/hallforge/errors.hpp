#ifndef HALLFORGE_ERRORS_HPP
#define HALLFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hallforge {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct InvalidQuiver : std::runtime_error {
    explicit InvalidQuiver(const std::string& what) : std::runtime_error("invalid quiver: " + what) {}
};

struct OutOfTable : std::runtime_error {
    explicit OutOfTable(const std::string& what) : std::runtime_error("out of table: " + what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("config error: " + what) {}
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t p)
        : std::runtime_error("parse error at " + std::to_string(p) + ": " + what), pos(p) {}
};

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& name) : std::runtime_error("unknown name: " + name) {}
};

struct WrongAlgebra : std::runtime_error {
    explicit WrongAlgebra(const std::string& what) : std::runtime_error("wrong algebra: " + what) {}
};

} // namespace hallforge

#endif
