// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "daha/suites.hpp"

using namespace daha;

namespace {

constexpr uint64_t kSeed = 20240611;

struct Run {
  std::shared_ptr<const AffineWeylGroup> group;
  std::string suite;
  SuiteOptions opts;
  VerificationReport symbolic;
};

std::shared_ptr<const AffineWeylGroup> group(Family f, int n, Twist t = Twist::Untwisted) {
  return std::make_shared<AffineWeylGroup>(RootSystemData::build({f, n, t}));
}

std::size_t count_prefix(const VerificationReport& r, const std::string& prefix, CaseStatus s) {
  std::size_t n = 0;
  for (const auto& c : r.cases) n += c.id.rfind(prefix, 0) == 0 && c.status == s;
  return n;
}

class Acceptance {
 public:
  std::vector<Run> runs;  // symbolic runs of criteria 1-4, replayed in criterion 6

  bool fail(const std::string& what) {
    std::cout << "  " << what << "\n";
    return false;
  }

  bool check(const VerificationReport& r, const std::string& label) {
    std::cout << "  " << label << ": " << r.count(CaseStatus::Pass) << " pass, "
              << r.count(CaseStatus::Fail) << " fail, " << r.count(CaseStatus::Vacuous)
              << " vacuous\n";
    if (r.passed() && r.count(CaseStatus::Pass) > 0) return true;
    for (const auto& c : r.cases)
      if (c.failed()) std::cout << "    failed " << c.id << ": " << c.witness.value_or("") << "\n";
    return false;
  }

  VerificationReport record(std::shared_ptr<const AffineWeylGroup> g, const std::string& suite,
                            const SuiteOptions& opts) {
    VerificationReport r = run_suite(suite, g, HeckeParams::symbolic(), opts);
    runs.push_back({g, suite, opts, r});
    return r;
  }

  bool relations() {
    bool ok = true;
    const std::vector<std::pair<RootSystemSpec, std::string>> systems{
        {{Family::A, 1, Twist::Untwisted}, "A1"},  {{Family::A, 2, Twist::Untwisted}, "A2"},
        {{Family::C, 2, Twist::Twisted}, "C2t"},   {{Family::C, 2, Twist::Untwisted}, "C2"},
        {{Family::G, 2, Twist::Untwisted}, "G2"},  {{Family::G, 2, Twist::Twisted}, "G2t"}};
    for (const auto& [spec, label] : systems) {
      auto g = std::make_shared<AffineWeylGroup>(RootSystemData::build(spec));
      SuiteOptions opts;
      opts.seed = kSeed;
      const VerificationReport r = record(g, "relations", opts);
      ok = check(r, label) && ok;
      const std::size_t n = static_cast<std::size_t>(g->rank());
      if (count_prefix(r, "quadratic/", CaseStatus::Pass) != n + 1)
        ok = fail(label + ": expected " + std::to_string(n + 1) + " quadratic cases");
      if (g->omega().size() > 1 &&
          count_prefix(r, "omega/u=", CaseStatus::Pass) != g->omega().size())
        ok = fail(label + ": an element of Omega was not checked");
      if (count_prefix(r, "cross/", CaseStatus::Pass) < 2 * n * (n + 1))
        ok = fail(label + ": cross relations for +-omega_i missing");
      if (count_prefix(r, "additivity/", CaseStatus::Pass) == 0)
        ok = fail(label + ": additivity cases missing");
    }
    return ok;
  }

  bool triangularity() {
    bool ok = true;
    SuiteOptions opts;
    opts.max_length = 4;
    opts.seed = kSeed;
    for (const auto& [g, label] : {std::pair{group(Family::C, 2, Twist::Twisted), "C2t"},
                                   std::pair{group(Family::A, 2), "A2"}}) {
      const VerificationReport r = record(g, "triangularity", opts);
      ok = check(r, label) && ok;
      const std::size_t ball = g->enumerate_ball(4).size();
      if (count_prefix(r, "triangular/", CaseStatus::Pass) != ball ||
          count_prefix(r, "inversion/", CaseStatus::Pass) != ball)
        ok = fail(std::string(label) + ": ball of size " + std::to_string(ball) + " not covered");
    }
    return ok;
  }

  bool pbw() {
    bool ok = true;
    SuiteOptions opts;
    opts.max_length = 3;
    opts.box = 2;
    opts.seed = kSeed;
    for (const auto& [g, label] :
         {std::pair{group(Family::A, 1), "A1"}, std::pair{group(Family::A, 2), "A2"}}) {
      const VerificationReport r = record(g, "pbw", opts);
      ok = check(r, label) && ok;
      if (count_prefix(r, "pbw/independence", CaseStatus::Pass) != 1 ||
          count_prefix(r, "pbw/duplicate-control", CaseStatus::Pass) != 1)
        ok = fail(std::string(label) + ": independence or duplicate control missing");
    }
    return ok;
  }

  bool polynomial() {
    bool ok = true;
    SuiteOptions opts;
    opts.level = 1;
    opts.box = 4;
    opts.seed = kSeed;
    for (const auto& [g, label] :
         {std::pair{group(Family::A, 1), "A1"}, std::pair{group(Family::A, 2), "A2"}}) {
      const VerificationReport r = record(g, "polynomial", opts);
      ok = check(r, label) && ok;
      for (const char* p : {"poly-divisibility/", "poly-quadratic/"})
        if (count_prefix(r, p, CaseStatus::Pass) != static_cast<std::size_t>(g->rank() + 1))
          ok = fail(std::string(label) + ": missing " + p + " cases");
    }
    return ok;
  }

  bool omega() {
    bool ok = true;
    const std::vector<std::tuple<RootSystemSpec, std::string, std::size_t>> systems{
        {{Family::A, 1, Twist::Untwisted}, "A1", 2},
        {{Family::A, 2, Twist::Untwisted}, "A2", 3},
        {{Family::C, 2, Twist::Untwisted}, "C2", 2},
        {{Family::G, 2, Twist::Untwisted}, "G2", 1}};
    for (const auto& [spec, label, order] : systems) {
      auto g = std::make_shared<AffineWeylGroup>(RootSystemData::build(spec));
      SuiteOptions opts;
      opts.seed = kSeed;
      const VerificationReport r = run_suite("omega", g, HeckeParams::symbolic(), opts);
      ok = check(r, label) && ok;
      if (g->omega().size() != order ||
          static_cast<int64_t>(order) != cartan_determinant(g->root_system()))
        ok = fail(label + ": |Omega| = " + std::to_string(g->omega().size()));
      const CaseStatus descent = order > 1 ? CaseStatus::Pass : CaseStatus::Vacuous;
      if (count_prefix(r, "omega-descent", descent) != 1)
        ok = fail(label + ": descent relation not in the expected state");
    }
    return ok;
  }

  bool specialization() {
    bool ok = true;
    const TauAssignment a = random_assignment(kSeed);
    std::cout << "  tau_short = " << a.short_value << ", tau_long = " << a.long_value << "\n";
    for (const Run& run : runs) {
      const VerificationReport s =
          run_suite(run.suite, run.group, HeckeParams::specialized(a), run.opts);
      const CaseRecord c = compare_outcomes(run.symbolic, s);
      if (c.status != CaseStatus::Pass)
        ok = fail(run.suite + " on " + to_string(run.group->root_system().spec()) + ": " +
                  c.witness.value_or(""));
    }
    std::cout << "  " << runs.size() << " runs compared\n";
    return ok;
  }

  bool controls() {
    bool ok = true;
    SuiteOptions opts;
    opts.seed = kSeed;
    for (const auto& [g, label] : {std::pair{group(Family::A, 1), "A1"},
                                   std::pair{group(Family::A, 2), "A2"},
                                   std::pair{group(Family::C, 2, Twist::Twisted), "C2t"},
                                   std::pair{group(Family::G, 2), "G2"}}) {
      const VerificationReport r = run_suite("controls", g, HeckeParams::symbolic(), opts);
      ok = check(r, label) && ok;
      for (const auto& c : r.cases)
        if (!c.witness || c.witness->empty()) ok = fail(c.id + ": no witness");
    }
    return ok;
  }
};

}  // namespace

int main() {
  Acceptance acc;
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"full presentation", [&] { return acc.relations(); }},
      {"triangularity and unit leading terms", [&] { return acc.triangularity(); }},
      {"PBW independence", [&] { return acc.pbw(); }},
      {"polynomial representation", [&] { return acc.polynomial(); }},
      {"Omega structure", [&] { return acc.omega(); }},
      {"specialization consistency", [&] { return acc.specialization(); }},
      {"negative controls", [&] { return acc.controls(); }}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << ")\n";
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << "\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s (%.1f s)\n", i + 1, ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
