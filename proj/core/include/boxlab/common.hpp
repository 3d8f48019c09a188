#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boxlab {

inline constexpr double kEps = 1e-9;
inline constexpr double kLpEps = 1e-7;
inline constexpr double kDiscordZero = 1e-6;

enum class ErrorCode {
  NotNormalized,
  Negative,
  Signaling,
  BadWeights,
  LpNumericalFailure,
  ResidualInvalid,
  NotInPolytope,
  InvalidVertex,
  InvalidState,
  UnknownName,
  DegenerateState,
  Unsupported,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr int sgn_bit(int bit) { return (bit & 1) ? -1 : 1; }

}  // namespace boxlab
