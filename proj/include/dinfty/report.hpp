#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace dinfty {

/// One machine-checkable verdict: {check, params, status, witness?}.
/// The witness is the first counterexample found, when there is one.
struct CheckResult {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool passed = true;
  std::optional<nlohmann::json> witness;
};

nlohmann::json to_json(const CheckResult& r);
CheckResult check_result_from_json(const nlohmann::json& j);

}  // namespace dinfty
