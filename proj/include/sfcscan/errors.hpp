#pragma once

#include <stdexcept>
#include <string>

namespace sfcscan {

/// Base for every numeric or precondition failure raised by the library.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A field sample landed on (or within the guard radius of) a point dipole.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Grid sizes of two collaborating objects disagree.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Problem too large for an exhaustive method.
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Pearson normalization of a constant series.
class ZeroVarianceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace sfcscan
