#include "daha/report.hpp"

#include <algorithm>
#include <cstdio>

namespace daha {

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Vacuous: return "vacuous";
    case CaseStatus::Info: return "info";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.failed(); });
}

std::size_t VerificationReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseRecord& c) { return c.status == s; }));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (CaseRecord c : other.cases) {
    c.id = prefix + c.id;
    cases.push_back(std::move(c));
  }
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["spec"] = {{"family", std::string(1, family_letter(spec.family))},
               {"rank", spec.rank},
               {"twist", to_string(spec.twist)}};
  j["seed"] = seed;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc{{"id", c.id}, {"relation", c.relation}, {"params", c.params},
                      {"status", to_string(c.status)}};
    if (c.witness) jc["witness"] = *c.witness;
    j["cases"].push_back(std::move(jc));
  }
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::string s = "suite " + suite + " on " + to_string(spec) + " (seed " + std::to_string(seed) +
                  ")\n";
  for (const auto& c : cases) {
    s += "  [" + to_string(c.status) + "] " + c.id;
    for (const auto& [k, v] : c.params) s += " " + k + "=" + v;
    s += "\n";
    if (c.witness) s += "      witness: " + *c.witness + "\n";
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %zu pass, %zu fail, %zu vacuous, %zu info",
                count(CaseStatus::Pass), count(CaseStatus::Fail), count(CaseStatus::Vacuous),
                count(CaseStatus::Info));
  s += buf;
  if (with_timing) {
    std::snprintf(buf, sizeof buf, ", %.1f ms", timing_ms);
    s += buf;
  }
  return s + "\n" + (passed() ? "PASS" : "FAIL") + "\n";
}

}  // namespace daha
