#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cosetal {

using Index = std::size_t;

/// Marks "no element" in witness tables.
inline constexpr Index kNone = static_cast<Index>(-1);

enum class ErrorCode {
  SizeMismatch,
  OutOfRange,
  NotClosed,
  NotAssociative,
  BadIdentity,
  NotCommutative,
  NoInverse,
  NotHom,
  IdentityNotPreserved,
  KNotInjective,
  KNotKernel,
  ENotSurjective,
  ENotCokernel,
  NotCosetal,
  NotSection,
  TooManySections,
  IllFormed,
  TooLarge,
  DataMismatch,
  UnknownName,
  DuplicateName,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported as an Error carrying a code and,
/// where one exists, the offending elements (e.g. the triple that breaks
/// associativity).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Index> witness = {});

  ErrorCode code() const noexcept { return code_; }
  std::span<const Index> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Index> witness_;
};

}  // namespace cosetal
