#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "daha/root_data.hpp"

namespace daha {

/// Vacuous cases (infinite braid order, trivial Omega) and informational
/// observations never fail a suite.
enum class CaseStatus { Pass, Fail, Vacuous, Info };

std::string to_string(CaseStatus s);

struct CaseRecord {
  std::string id;
  std::string relation;
  std::map<std::string, std::string> params;
  CaseStatus status = CaseStatus::Pass;
  std::optional<std::string> witness;

  bool failed() const { return status == CaseStatus::Fail; }
};

struct VerificationReport {
  std::string suite;
  RootSystemSpec spec;
  uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  double timing_ms = 0;

  bool passed() const;
  std::size_t count(CaseStatus s) const;
  void add(CaseRecord c) { cases.push_back(std::move(c)); }
  /// Appends the cases of another report, prefixing their ids.
  void merge(const VerificationReport& other, const std::string& prefix);

  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text(bool with_timing = true) const;
};

}  // namespace daha
