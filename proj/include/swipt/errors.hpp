#ifndef SWIPT_ERRORS_HPP
#define SWIPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swipt {

// Error taxonomy shared by the whole library. The C API maps these onto
// numeric status codes one-to-one.
enum class ErrorCode {
  kInvalidInput = 1,
  kDimensionMismatch,
  kRankDeficient,
  kNonPsdNoise,
  kInfeasible,
  kNoConvergence,
  kUnbounded,
  kSolverFailure,
  kIoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Z_i lost positive semidefiniteness during a fixed-point sweep; carries the
// offending receiver index so the unboundedness guard can report it.
class NonPsdNoiseError : public Error {
 public:
  NonPsdNoiseError(int receiver, const std::string& what)
      : Error(ErrorCode::kNonPsdNoise, what), receiver_(receiver) {}
  int receiver() const { return receiver_; }

 private:
  int receiver_;
};

}  // namespace swipt

#endif  // SWIPT_ERRORS_HPP
