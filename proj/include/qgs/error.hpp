#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgs {

enum class ErrorCode {
  BadEndpoint,
  NonPositiveLength,
  SelfLoop,
  UnknownVertex,
  DuplicateLead,
  NoLeads,
  BadEntrance,
  NotALeadVertex,
  NonPositiveWavenumber,
  SingularSystem,
  UnitarityViolation,
  DenominatorVanishes,
  DegenerateBranch,
  BadParameter,
  NoPeriod,
  QuadratureStalled,
  SpecParse,
  BadConfig,
  EngineFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgs
