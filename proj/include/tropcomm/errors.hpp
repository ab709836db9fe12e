#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropcomm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// The Kleene star diverges because some cycle has negative tropical weight.
class NegativeCycle : public Error {
 public:
  using Error::Error;
};

class AllInfinite : public Error {
 public:
  using Error::Error;
};

class NotPolytrope : public Error {
 public:
  using Error::Error;
};

class NotInImage : public Error {
 public:
  using Error::Error;
};

class EmptyPolynomial : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Internal simplex inconsistency; the bounded auxiliary objective cannot be unbounded.
class UnboundedNormalizationViolated : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
      : Error("candidate pattern count " + std::to_string(candidates) +
              " exceeds budget " + std::to_string(budget)),
        candidates_(candidates),
        budget_(budget) {}

  std::uint64_t candidates() const { return candidates_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

}  // namespace tropcomm
