#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace emc {

// Raised when a runtime check of one of the verified claims fails. This is
// the toolkit's headline event: the evidence payload is a self-contained
// JSON replay of the offending state, suitable for writing to disk as-is.
class ClaimViolation : public std::runtime_error {
 public:
  ClaimViolation(std::string claim, nlohmann::json evidence)
      : std::runtime_error("claim violation: " + claim),
        claim_(std::move(claim)),
        evidence_(std::move(evidence)) {}

  const std::string& claim() const { return claim_; }
  const nlohmann::json& evidence() const { return evidence_; }

 private:
  std::string claim_;
  nlohmann::json evidence_;
};

// Input/parameter rejection that carries structured detail (e.g. the
// matching certificate that disqualifies a family).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg, nlohmann::json detail = nullptr)
      : std::invalid_argument(msg), detail_(std::move(detail)) {}

  const nlohmann::json& detail() const { return detail_; }

 private:
  nlohmann::json detail_;
};

}  // namespace emc
