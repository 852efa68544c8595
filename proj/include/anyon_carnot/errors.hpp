#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace anyon {

/// Argument outside the domain of a formula, or a violated config invariant.
/// `field()` is the serialized key of the offending parameter ("t_c", "nu", ...).
class DomainError : public std::domain_error {
 public:
  DomainError(std::string field, const std::string& what)
      : std::domain_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A sweep grid larger than the configured cap.
class GridCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace anyon
