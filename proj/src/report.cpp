#include "dinfty/report.hpp"

namespace dinfty {

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"check", r.check}, {"params", r.params}, {"status", r.passed ? "pass" : "fail"}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

CheckResult check_result_from_json(const nlohmann::json& j) {
  CheckResult r;
  r.check = j.at("check").get<std::string>();
  r.params = j.at("params");
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("status must be pass or fail");
  r.passed = status == "pass";
  if (j.contains("witness")) r.witness = j.at("witness");
  return r;
}

}  // namespace dinfty
