#pragma once

#include <stdexcept>
#include <string>

namespace stablespace {

// Two failure families: DataError for inputs that violate a contract
// (CLI exit code 3), NumericError for numerical breakdown inside an
// otherwise valid computation (CLI exit code 4).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVarianceColumn : DataError {
  explicit ZeroVarianceColumn(const std::string& name)
      : DataError("ZeroVarianceColumn: column '" + name + "' is constant") {}
};

struct TooShort : DataError {
  explicit TooShort(const std::string& what) : DataError("TooShort: " + what) {}
};

struct PeriodTooLarge : DataError {
  explicit PeriodTooLarge(int period, int length)
      : DataError("PeriodTooLarge: period " + std::to_string(period) +
                  " needs at least " + std::to_string(2 * period) +
                  " observations, got " + std::to_string(length)) {}
};

struct NonFinitePanel : DataError {
  explicit NonFinitePanel(const std::string& where)
      : DataError("NonFinitePanel: non-finite value " + where) {}
};

struct DuplicateName : DataError {
  explicit DuplicateName(const std::string& name)
      : DataError("DuplicateName: series name '" + name + "' repeats") {}
};

struct ConstantSeries : DataError {
  ConstantSeries() : DataError("ConstantSeries: series has no variation") {}
};

struct DegenerateVariance : NumericError {
  DegenerateVariance()
      : NumericError("DegenerateVariance: long-run variance is not positive") {}
};

struct ZeroCrossCovariance : NumericError {
  ZeroCrossCovariance()
      : NumericError("ZeroCrossCovariance: cross-covariance matrix is zero") {}
};

struct EigenFailure : NumericError {
  explicit EigenFailure(const std::string& what)
      : NumericError("EigenFailure: " + what) {}
};

struct AllZeroComponent : NumericError {
  explicit AllZeroComponent(int component)
      : NumericError("AllZeroComponent: penalty annihilated component " +
                     std::to_string(component + 1)) {}
};

struct InsufficientSample : DataError {
  explicit InsufficientSample(const std::string& what)
      : DataError("InsufficientSample: " + what) {}
};

struct SingularMoments : NumericError {
  explicit SingularMoments(const std::string& what)
      : NumericError("SingularMoments: " + what) {}
};

struct MissingCriticalValue : DataError {
  explicit MissingCriticalValue(const std::string& what)
      : DataError("MissingCriticalValue: " + what) {}
};

struct DimensionTooLarge : DataError {
  explicit DimensionTooLarge(int m, int limit)
      : DataError("DimensionTooLarge: m = " + std::to_string(m) +
                  " exceeds the supported limit " + std::to_string(limit)) {}
};

struct OverlappingIndexSets : DataError {
  OverlappingIndexSets()
      : DataError("OverlappingIndexSets: M1 and M2 must be disjoint") {}
};

struct DegreesOfFreedomTooSmall : DataError {
  explicit DegreesOfFreedomTooSmall(double df)
      : DataError("DegreesOfFreedomTooSmall: df = " + std::to_string(df) +
                  " must exceed 2 for a finite covariance") {}
};

struct RankDeficient : NumericError {
  explicit RankDeficient(const std::string& what)
      : NumericError("RankDeficient: " + what) {}
};

struct RankDeficientScores : NumericError {
  RankDeficientScores()
      : NumericError("RankDeficientScores: score matrix lacks full column rank") {}
};

struct ZeroVariance : DataError {
  ZeroVariance() : DataError("ZeroVariance: observed series has no variance") {}
};

struct FewerThanKStableScores : DataError {
  FewerThanKStableScores(int requested, int available)
      : DataError("FewerThanKStableScores: requested " +
                  std::to_string(requested) + " scores, only " +
                  std::to_string(available) + " stable components available") {}
};

struct ParseError : DataError {
  explicit ParseError(const std::string& what) : DataError("ParseError: " + what) {}
};

}  // namespace stablespace
