// aobound: constant ledger and degree bounds for special subvarieties.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 indeterminate at maximum
// precision, 3 overflow guard, 4 verify failure.

#include "aobound/config.hpp"
#include "aobound/report.hpp"
#include "aobound/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace aobound;

  CLI::App app{"Uniform constants and degree bounds for special subvarieties"};
  std::string config_path;
  std::string report = "text";
  std::string verify_level;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::string max_log2;

  app.add_option("--config", config_path, "Config file")->check(CLI::ExistingFile);
  app.add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--verify", verify_level, "Run the invariant suites")->check(CLI::IsMember({"fast", "full"}));
  app.add_option("--precision-bits", precision_bits, "Magnitude seed precision")->check(CLI::Range(8u, 1u << 16));
  app.add_option("--max-log2", max_log2, "Overflow guard on log2 of the final bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (config_path.empty()) {
      if (verify_level.empty()) {
        std::cerr << "error: --config or --verify is required\n" << app.help();
        return 1;
      }
      const auto summary = verify(parse_verify_level(verify_level));
      std::cout << format_summary(summary);
      return summary.passed() ? 0 : 4;
    }

    RunConfig cfg = load_config(config_path);
    cfg.report_format = parse_report_format(report);
    if (!verify_level.empty()) cfg.verify_level = parse_verify_level(verify_level);
    cfg.precision_bits = precision_bits;
    if (!max_log2.empty()) {
      cfg.max_log2 = parse_integer(max_log2);
      if (cfg.max_log2 < 1) throw DomainError("--max-log2 must be >= 1");
    }

    const RunOutput out = run(cfg);
    std::cout << out.report;
    return out.verify_passed ? 0 : 4;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.constant() << ": " << e.what() << " (tried up to "
              << kMaxEscalatedBits << " bits)\n";
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what();
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
