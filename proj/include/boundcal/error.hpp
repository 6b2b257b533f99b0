#ifndef BOUNDCAL_ERROR_HPP
#define BOUNDCAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace boundcal {

enum class Errc {
  ShapeMismatch,
  ValueOutOfRange,
  EmptySample,
  NonFiniteValue,
  QuantileOutOfRange,
  BadMagic,
  UnsupportedDtype,
  FortranOrderUnsupported,
  TruncatedPayload,
  LengthMismatch,
  IoFailure,
  VersionMismatch,
  SizeMismatch,
  BadDimension,
  IndexOutOfRange,
  EmptyDataset,
  DivergedLoss,
  NegativeLambda,
  EmptyRiskList,
  DeltaOutOfRange,
  CannotControlRisk,
  EmptyMask,
  TooFewPixels,
  EmptyInput,
  BadArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace boundcal

#endif
