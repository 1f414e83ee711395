#pragma once

#include <stdexcept>
#include <string>

namespace locus {

// Every failure mode raised by the library. CLI maps these to exit codes,
// tests match on them.
enum class Errc {
  DegenerateInterval,
  EvaluationFailure,
  AtFixedPoint,
  OutOfBasin,
  NoConvergence,
  GridTooLarge,
  IntervalOutsideWindow,
  NotInWindow,
  MalformedBox,
  EpsilonTooLarge,
  WindowTooSmall,
  BadNesting,
  XOutsideMovingInterval,
  LadderTooShort,
  UnknownCheck,
  ConfigError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::EvaluationFailure: return "EvaluationFailure";
    case Errc::AtFixedPoint: return "AtFixedPoint";
    case Errc::OutOfBasin: return "OutOfBasin";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::GridTooLarge: return "GridTooLarge";
    case Errc::IntervalOutsideWindow: return "IntervalOutsideWindow";
    case Errc::NotInWindow: return "NotInWindow";
    case Errc::MalformedBox: return "MalformedBox";
    case Errc::EpsilonTooLarge: return "EpsilonTooLarge";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::BadNesting: return "BadNesting";
    case Errc::XOutsideMovingInterval: return "XOutsideMovingInterval";
    case Errc::LadderTooShort: return "LadderTooShort";
    case Errc::UnknownCheck: return "UnknownCheck";
    case Errc::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace locus
