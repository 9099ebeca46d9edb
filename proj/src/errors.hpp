#pragma once

#include <stdexcept>
#include <string>

namespace cauchy2 {

/// Argument outside the mathematical domain of an operation (z <= -1, t < 0, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a configured table bound or an input table is too short.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Malformed textual input (rationals, tuples, suite names).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// The two exact routes produced different values. Always a bug.
class RouteMismatchError : public std::logic_error {
public:
    explicit RouteMismatchError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cauchy2
