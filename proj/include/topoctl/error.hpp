#pragma once

#include <stdexcept>
#include <string>

namespace topo {

// Precondition or domain violation (bad parameters, unsupported mode, invalid
// assignment). The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read, parsed or written. The CLI maps this to exit code 1.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topo
