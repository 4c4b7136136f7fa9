#pragma once

// Verification suites run by the command line tool and the acceptance binary.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "daha/affine_weyl.hpp"
#include "daha/coeff_algebra.hpp"
#include "daha/report.hpp"

namespace daha {

enum class CrossSet { Generators, Extended };

struct SuiteOptions {
  int max_length = 3;
  CrossSet cross = CrossSet::Generators;
  int level = 1;
  int box = 2;
  uint64_t seed = 0;
};

/// relations, triangularity, pbw, polynomial, parabolic, omega, controls.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& name, std::shared_ptr<const AffineWeylGroup> group,
                             const HeckeParams& params, const SuiteOptions& opts);

VerificationReport run_relations(std::shared_ptr<const AffineWeylGroup> group,
                                 const HeckeParams& params, const SuiteOptions& opts);
VerificationReport run_triangularity(std::shared_ptr<const AffineWeylGroup> group,
                                     const HeckeParams& params, const SuiteOptions& opts);
VerificationReport run_pbw(std::shared_ptr<const AffineWeylGroup> group, const HeckeParams& params,
                           const SuiteOptions& opts);
VerificationReport run_polynomial(std::shared_ptr<const AffineWeylGroup> group,
                                  const HeckeParams& params, const SuiteOptions& opts);
VerificationReport run_parabolic(std::shared_ptr<const AffineWeylGroup> group,
                                 const HeckeParams& params, const SuiteOptions& opts);
VerificationReport run_omega(std::shared_ptr<const AffineWeylGroup> group,
                             const HeckeParams& params, const SuiteOptions& opts);
/// Mutated operators; a case passes when the mutation is caught with a nonzero witness.
VerificationReport run_controls(std::shared_ptr<const AffineWeylGroup> group,
                                const HeckeParams& params, const SuiteOptions& opts);

/// Nonzero rationals p/q with |p|, q <= 9, avoiding +-1, drawn from the seed.
TauAssignment random_assignment(uint64_t seed);

/// One case comparing the statuses of two runs of the same suite case by case.
CaseRecord compare_outcomes(const VerificationReport& symbolic,
                            const VerificationReport& specialized);

}  // namespace daha
