#ifndef TAA_ERRORS_HPP
#define TAA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace taa {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions (key sets) or key lookups do not line up.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A value is outside its semiring domain, or an applied function is
/// undefined on an encountered value (NaN, log of a non-positive, ...).
class ValueError : public Error {
public:
  using Error::Error;
};

/// Malformed external input (array files, JSONL corpora, CSV, term lists).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A pipeline stage left no surviving documents. Carries the stage name.
class EmptyStageError : public Error {
public:
  explicit EmptyStageError(std::string stage)
      : Error(stage + " empty"), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

}  // namespace taa

#endif
