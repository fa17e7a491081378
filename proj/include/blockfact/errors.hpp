#ifndef BLOCKFACT_ERRORS_HPP_
#define BLOCKFACT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockfact {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed block text or serialized form.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A residue outside {0, ..., n-1} was given.
class ResidueOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The multiplicities do not sum to zero in Z_n.
class NotZeroSum : public Error {
 public:
  using Error::Error;
};

/// A 64-bit unsigned sum or product would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a nonempty input received an empty one.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// A configured ceiling (search nodes, stored results, atom count,
/// graph vertices) was exceeded. Results are never truncated silently.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Two factorizations refer to different atom tables.
class TableMismatch : public Error {
 public:
  using Error::Error;
};

/// Two factorizations do not recompose to the same block.
class DifferentElements : public Error {
 public:
  using Error::Error;
};

/// A constructor argument violates a documented precondition.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An index or set lies outside its documented range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A cache or checkpoint file failed its integrity check.
class ChecksumMismatch : public Error {
 public:
  using Error::Error;
};

/// A checkpoint was written by an incompatible version or config.
class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class CorruptCheckpoint : public Error {
 public:
  using Error::Error;
};

/// Overflow-checked arithmetic on unsigned 64-bit values.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit addition overflow: " + std::to_string(a) +
                        " + " + std::to_string(b));
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit multiplication overflow: " +
                        std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

}  // namespace blockfact

#endif  // BLOCKFACT_ERRORS_HPP_
