#pragma once

#include <stdexcept>
#include <string>

namespace igl {

/// Invalid model or object parameters (e.g. a fixed length outside (0,1]).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation undefined on its input (empty sample, empty graph).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Input too large or too small for an exact enumeration.
class size_error : public std::length_error {
public:
    explicit size_error(const std::string& what) : std::length_error(what) {}
};

/// Malformed text or JSON input.
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace igl
