#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

// Base class for all domain errors. `kind()` is a stable machine-readable tag
// used by the CLI's structured error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define QSD_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                               \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}      \
  }

QSD_DEFINE_ERROR(DimMismatch);
QSD_DEFINE_ERROR(NotHermitian);
QSD_DEFINE_ERROR(NotPsd);
QSD_DEFINE_ERROR(NotNormalized);
QSD_DEFINE_ERROR(InvalidArgument);

QSD_DEFINE_ERROR(InvalidInstance);
QSD_DEFINE_ERROR(InvalidPovm);
QSD_DEFINE_ERROR(InvalidDistribution);

QSD_DEFINE_ERROR(InvalidWeights);
QSD_DEFINE_ERROR(NoSolution);
QSD_DEFINE_ERROR(MarginalMismatch);
QSD_DEFINE_ERROR(RankDeficient);

QSD_DEFINE_ERROR(InvalidConfig);

QSD_DEFINE_ERROR(OddNUnsupported);
QSD_DEFINE_ERROR(InvalidP);
QSD_DEFINE_ERROR(InvalidMeasurement);
QSD_DEFINE_ERROR(OutOfRange);

#undef QSD_DEFINE_ERROR

}  // namespace qsd
