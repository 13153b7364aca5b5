#pragma once

#include <stdexcept>
#include <string>

namespace smcg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
public:
  using Error::Error;
};

// Bad or incompatible modulus (odd where even is needed, non-dividing reduction, ...).
class InvalidModulus : public Error {
public:
  using Error::Error;
};

class NotSymplectic : public Error {
public:
  using Error::Error;
};

// Enumeration would exceed the desk-scale size guard.
class RankTooLarge : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace smcg
