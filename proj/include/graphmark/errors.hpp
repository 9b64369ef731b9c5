#ifndef GRAPHMARK_ERRORS_HPP
#define GRAPHMARK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphmark {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration, arguments, or constraint violations (CLI exit 2).
class spec_error : public error {
public:
    explicit spec_error(const std::string& msg) : error(msg) {}
};

// Malformed or inconsistent input data (CLI exit 3).
class data_error : public error {
public:
    explicit data_error(const std::string& msg) : error(msg) {}
};

// Broken internal invariant (CLI exit 4).
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace graphmark

#endif // GRAPHMARK_ERRORS_HPP
