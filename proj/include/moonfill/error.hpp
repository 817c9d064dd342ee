#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moonfill {

enum class ErrorCode {
  EmptyShape,
  NotJustified,
  NotMoon,
  NotStack,
  NotFerrers,
  TooLarge,
  OutOfRange,
  DoesNotFit,
  Inconsistent,
  NotInStaircase,
  CrossingOutsideShape,
  NotMutable,
  BoxIsCrossing,
  NotReduced,
  NotInImage,
  NotFlagged,
  HeightExceeded,
  InvalidTriangulation,
  TrivialDiagonal,
  NotPure,
  NegativeCoefficient,
  NonIntegralQuotient,
  Overflow,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::NotJustified: return "NotJustified";
    case ErrorCode::NotMoon: return "NotMoon";
    case ErrorCode::NotStack: return "NotStack";
    case ErrorCode::NotFerrers: return "NotFerrers";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DoesNotFit: return "DoesNotFit";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotInStaircase: return "NotInStaircase";
    case ErrorCode::CrossingOutsideShape: return "CrossingOutsideShape";
    case ErrorCode::NotMutable: return "NotMutable";
    case ErrorCode::BoxIsCrossing: return "BoxIsCrossing";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotFlagged: return "NotFlagged";
    case ErrorCode::HeightExceeded: return "HeightExceeded";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::TrivialDiagonal: return "TrivialDiagonal";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NonIntegralQuotient: return "NonIntegralQuotient";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Safety caps for exhaustive enumeration. MOONFILL_CAP, when set to a
/// positive integer, replaces every default.
struct Caps {
  int oracle_boxes = 30;
  int word_length = 16;
  int pipe_dream_length = 24;
  int tableau_boxes = 30;
  int triangulation_n = 12;

  static Caps defaults() {
    Caps caps;
    if (const char* env = std::getenv("MOONFILL_CAP")) {
      char* end = nullptr;
      long value = std::strtol(env, &end, 10);
      if (end != env && value > 0) caps = uniform(static_cast<int>(value));
    }
    return caps;
  }

  static Caps uniform(int value) {
    Caps caps;
    caps.oracle_boxes = caps.word_length = caps.pipe_dream_length = caps.tableau_boxes =
        caps.triangulation_n = value;
    return caps;
  }
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

}  // namespace detail
}  // namespace moonfill
