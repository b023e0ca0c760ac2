#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace s1redux {

enum class Errc {
  AllZeroWeights,
  DimensionMismatch,
  EmptyLevelSet,
  OutOfTable,
  CatalogInsufficient,
  LevelTooLarge,
  EnumerationBudgetExceeded,
  NotAWeakEquivalence,
  HypothesisViolated,
  InvalidGroupoid,
  InvalidInput,
};

inline constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::AllZeroWeights: return "AllZeroWeights";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyLevelSet: return "EmptyLevelSet";
    case Errc::OutOfTable: return "OutOfTable";
    case Errc::CatalogInsufficient: return "CatalogInsufficient";
    case Errc::LevelTooLarge: return "LevelTooLarge";
    case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case Errc::NotAWeakEquivalence: return "NotAWeakEquivalence";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::InvalidGroupoid: return "InvalidGroupoid";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace s1redux
