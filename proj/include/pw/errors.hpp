#ifndef PW_ERRORS_HPP
#define PW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad prime, bad DSL text, inconsistent request.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Not enough p-adic digits to decide or represent a result.
class PrecisionExhausted : public Error {
public:
  using Error::Error;
};

class EmptySet : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class LengthExceedsSet : public Error {
public:
  using Error::Error;
};

class SetTooSmall : public Error {
public:
  using Error::Error;
};

class NotFinitelyGenerated : public Error {
public:
  using Error::Error;
};

class NoAdelicOrdering : public Error {
public:
  using Error::Error;
};

class DegreeOverflow : public Error {
public:
  using Error::Error;
};

class CertificateFailed : public Error {
public:
  using Error::Error;
};

class NotCertified : public Error {
public:
  using Error::Error;
};

} // namespace pw

#endif // PW_ERRORS_HPP
