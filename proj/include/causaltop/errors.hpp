#pragma once

#include <stdexcept>
#include <string>

namespace causaltop {

// Bad arguments or malformed documents.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard was exceeded.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace causaltop
