#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "daha/affine_weyl.hpp"

namespace daha::cli {

namespace {

constexpr int kUsageError = 2;

std::shared_ptr<spdlog::logger> logger() {
  static auto log = [] {
    auto l = spdlog::stderr_color_mt("daha");
    const char* level = std::getenv("DAHA_LOG_LEVEL");
    l->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
    return l;
  }();
  return log;
}

void emit(const VerificationReport& r, Format format, std::ostream& out) {
  if (format == Format::Json)
    out << r.to_json().dump() << "\n";
  else
    out << r.to_text() << "\n";
}

int info(const RootSystemSpec& spec, std::ostream& out) {
  const auto rs = RootSystemData::build(spec);
  const AffineWeylGroup g(rs);
  const int n = rs->rank();
  out << to_string(spec) << "\n";
  out << "  roots: " << rs->num_roots() << " (" << rs->num_positive() << " positive)\n";
  out << "  highest root: " << render_weight(rs->root(rs->highest_root()).weight, n)
      << ", highest short root: " << render_weight(rs->root(rs->highest_short_root()).weight, n)
      << "\n";
  out << "  alpha_0: " << render_weight(rs->root(rs->simple_root(0)).weight, n) << "\n";
  out << "  Coxeter orders:";
  for (int j = 0; j <= n; ++j) {
    out << (j ? " |" : " ");
    for (int k = 0; k <= n; ++k) {
      const int m = rs->coxeter_order(j, k);
      out << " " << (m == kInfiniteOrder ? std::string("inf") : std::to_string(m));
    }
  }
  out << "\n  |Omega| = " << g.omega().size() << ", Cartan determinant = " << cartan_determinant(*rs)
      << "\n";
  for (std::size_t u = 0; u < g.omega().size(); ++u) {
    out << "  u" << u << ":";
    for (int j : g.omega()[u].index_perm) out << " " << j;
    out << "\n";
  }
  return 0;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.options.max_length < 0) throw std::invalid_argument("--max-length must be nonnegative");
  if (config.options.level < 1) throw std::invalid_argument("--level must be positive");
  if (config.options.box < 0) throw std::invalid_argument("--box must be nonnegative");
  if (config.suites.empty()) throw std::invalid_argument("no suite selected");
  for (const auto& s : config.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw std::invalid_argument("unknown suite: " + s);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::shared_ptr<const AffineWeylGroup> group;
  try {
    validate(config);
    group = std::make_shared<AffineWeylGroup>(RootSystemData::build(config.spec));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  bool ok = true;
  const HeckeParams symbolic = HeckeParams::symbolic();
  for (const auto& name : config.suites) {
    logger()->info("running {} on {}", name, to_string(config.spec));
    VerificationReport r = run_suite(name, group, symbolic, config.options);
    logger()->info("{}: {} cases in {:.1f} ms", name, r.cases.size(), r.timing_ms);
    if (config.specialize) {
      const TauAssignment a = random_assignment(config.options.seed);
      VerificationReport s =
          run_suite(name, group, HeckeParams::specialized(a), config.options);
      s.suite = name + "@specialized";
      s.add(compare_outcomes(r, s));
      s.cases.back().params["tau_short"] = a.short_value.get_str();
      s.cases.back().params["tau_long"] = a.long_value.get_str();
      ok = ok && r.passed() && s.passed();
      emit(r, config.format, out);
      emit(s, config.format, out);
    } else {
      ok = ok && r.passed();
      emit(r, config.format, out);
    }
  }
  return ok ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifier for the basic representation of the double affine Hecke algebra at "
               "critical level"};
  app.require_subcommand(1);

  RunConfig config;
  std::string family = "A", twist = "untwisted", cross = "generators", format = "text";
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--family", family, "A B C D E F G")->required();
    sub->add_option("--rank", config.spec.rank, "rank n")->required();
    sub->add_option("--twist", twist, "untwisted or twisted")
        ->check(CLI::IsMember({"untwisted", "twisted"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_system(verify);
  verify->add_option("--suites", config.suites, "comma separated suites")->delimiter(',');
  verify->add_option("--max-length", config.options.max_length, "length bound of the ball");
  verify->add_option("--cross-set", cross, "generators or extended")
      ->check(CLI::IsMember({"generators", "extended"}));
  verify->add_option("--level", config.options.level, "level parameter t, c = t <a0,a0>/2");
  verify->add_option("--box", config.options.box, "monomial box bound");
  verify->add_option("--seed", config.options.seed, "seed for specialized parameters");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--specialize", config.specialize,
                   "rerun with parameters specialized to random rationals");

  CLI::App* info_cmd = app.add_subcommand("info", "describe a root system");
  add_system(info_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kUsageError;
  }

  try {
    config.spec.family = parse_family(family);
    config.spec.twist = parse_twist(twist);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  config.options.cross = cross == "extended" ? CrossSet::Extended : CrossSet::Generators;
  config.format = format == "json" ? Format::Json : Format::Text;

  if (info_cmd->parsed()) {
    try {
      return info(config.spec, out);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
  }
  return run(config, out, err);
}

}  // namespace daha::cli
