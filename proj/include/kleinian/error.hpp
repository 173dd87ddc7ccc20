#pragma once

#include <stdexcept>
#include <string>

namespace kleinian {

/// Raised when an argument violates a documented precondition
/// (bad rank for a family, vertex out of range, empty J, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when matrix or vector shapes do not compose.
class ShapeError : public DomainError {
public:
  explicit ShapeError(const std::string& what) : DomainError(what) {}
};

} // namespace kleinian
