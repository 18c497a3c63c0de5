#ifndef BEHREND_ERROR_HPP
#define BEHREND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace behrend {

/// Machine-readable failure reasons. Input errors mean the request was
/// malformed; refusals mean the request was well formed but the mathematics
/// falls outside what the engine can answer exactly.
enum class ErrorCode {
  // input errors
  UnknownVariable,
  SyntaxError,
  NegativeExponent,
  ExponentOverflow,
  RingMismatch,
  IndexOutOfRange,
  ArityMismatch,
  ZeroPolynomial,
  KindMismatch,
  MissingValue,
  InvalidArgument,
  // refusals
  OriginNotOnVariety,
  PointNotOnVariety,
  PointNotOnX,
  NotCritical,
  NonIsolated,
  Unsupported,
  OrderTooLow,
  UnitIdeal,
  UnsupportedPresentation,
  IrrationalPoint,
  UnsupportedCycleKind,
  TooLarge,
  NoPolynomialFit,
  BoundExceeded,
};

std::string_view error_code_name(ErrorCode code);

/// True for the codes that mean "the mathematics says no".
bool is_refusal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace behrend

#endif  // BEHREND_ERROR_HPP
