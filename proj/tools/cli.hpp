#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "daha/root_data.hpp"
#include "daha/suites.hpp"

namespace daha::cli {

enum class Format { Text, Json };

struct RunConfig {
  RootSystemSpec spec;
  std::vector<std::string> suites{"relations"};
  SuiteOptions options;
  Format format = Format::Text;
  bool specialize = false;
};

/// Throws std::invalid_argument on an inadmissible configuration.
void validate(const RunConfig& config);

/// Exit status: 0 when every non-vacuous case passes, 1 on a failed case, 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace daha::cli
