#include "cosetal/error.hpp"

namespace cosetal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotHom: return "NotHom";
    case ErrorCode::IdentityNotPreserved: return "IdentityNotPreserved";
    case ErrorCode::KNotInjective: return "KNotInjective";
    case ErrorCode::KNotKernel: return "KNotKernel";
    case ErrorCode::ENotSurjective: return "ENotSurjective";
    case ErrorCode::ENotCokernel: return "ENotCokernel";
    case ErrorCode::NotCosetal: return "NotCosetal";
    case ErrorCode::NotSection: return "NotSection";
    case ErrorCode::TooManySections: return "TooManySections";
    case ErrorCode::IllFormed: return "IllFormed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DataMismatch: return "DataMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::vector<Index>& witness) {
  std::string out(to_string(code));
  if (!witness.empty()) {
    out += '(';
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(witness[i]);
    }
    out += ')';
  }
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::vector<Index> witness)
    : std::runtime_error(decorate(code, message, witness)),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace cosetal
