#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordersum {

// Error taxonomy shared by all modules.  The CLI maps InputError and
// ValidationError to exit code 2; everything else is a hard failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically invalid input: n = 0, p not prime, p does not divide |G|, ...
struct DomainError : Error {
  using Error::Error;
};

// A bound or checker was invoked outside its stated hypotheses.
struct PreconditionError : Error {
  using Error::Error;
};

// Group enumeration exceeded the configured cap.
struct CapacityError : Error {
  std::size_t partial_count;
  CapacityError(const std::string& what, std::size_t count)
      : Error(what), partial_count(count) {}
};

// Unparseable or unresolvable external input: files, catalog ids, CLI args.
struct InputError : Error {
  using Error::Error;
};

// Structurally well-formed input that fails validation, e.g. a generator
// image array that is not a bijection.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace ordersum
