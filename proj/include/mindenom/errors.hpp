#pragma once

#include <stdexcept>
#include <string>

namespace mindenom {

// Arithmetic between elements of different fields.
struct FieldMismatchError : std::invalid_argument {
    explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// A word was asked for digits beyond its precision (and is not exact).
struct PrecisionError : std::invalid_argument {
    explicit PrecisionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed literal (field element, polynomial, digit string, CLI value).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mindenom
