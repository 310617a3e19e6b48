#pragma once

#include <stdexcept>
#include <string>

namespace mmkde {

//! Base class of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

//! An argument lies outside the mathematical domain of the operation.
class DomainError : public Error
{
public:
  using Error::Error;
};

//! log-gamma evaluated at a non-positive integer.
class PoleError : public DomainError
{
public:
  using DomainError::DomainError;
};

//! A Mellin transform requested outside its strip of holomorphy.
class StripError : public DomainError
{
public:
  using DomainError::DomainError;
};

//! A moment needed by the computation does not exist.
class MomentError : public DomainError
{
public:
  using DomainError::DomainError;
};

//! An integral needed by an oracle diverges for the requested parameters.
class DivergenceError : public DomainError
{
public:
  using DomainError::DomainError;
};

//! The plug-in selector cannot estimate the curvature term.
class DegenerateError : public Error
{
public:
  using Error::Error;
};

//! Unknown distribution, estimator or density label.
class LookupError : public Error
{
public:
  using Error::Error;
};

//! Malformed input data or command-line arguments.
class ParseError : public Error
{
public:
  using Error::Error;
};

} // namespace mmkde
