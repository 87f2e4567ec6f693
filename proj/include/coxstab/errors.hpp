#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxstab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownTypeError : Error {
  using Error::Error;
};

struct NotSymmetricError : Error {
  using Error::Error;
};

struct BadDiagonalError : Error {
  using Error::Error;
};

struct BadEntryError : Error {
  using Error::Error;
};

struct UnknownVertexError : Error {
  using Error::Error;
};

struct UnknownLetterError : Error {
  using Error::Error;
};

struct NotSphericalError : Error {
  using Error::Error;
};

struct NotContainedError : Error {
  using Error::Error;
};

struct VertexInSubsetError : Error {
  using Error::Error;
};

struct ChainMismatchError : Error {
  std::size_t index;
  ChainMismatchError(const std::string& what, std::size_t at)
      : Error(what), index(at) {}
};

struct BadSubsetError : Error {
  using Error::Error;
};

struct BadParamsError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  std::uint64_t partial_count;
  CapExceededError(const std::string& what, std::uint64_t count)
      : Error(what), partial_count(count) {}
};

}  // namespace coxstab
