#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "howe/cli.hpp"

namespace {

void add_common(CLI::App* sub, howe::RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "dihedral order m of the group I2(m)")->required();
  sub->add_option("--tau", cfg.tau, "lowest-weight type: triv, sign, chi0, chi1, rho:u");
  sub->add_option("--c", cfg.c, "coupling for both reflection classes (rational p/q)");
  sub->add_option("--c-even", cfg.c_even, "coupling on even-index reflections");
  sub->add_option("--c-odd", cfg.c_odd, "coupling on odd-index reflections");
  sub->add_option("--epsilon", cfg.epsilon, "deformation parameter of the angular operator");
  sub->add_option("--max-degree", cfg.max_degree, "largest polynomial degree scanned (cap 24)");
  sub->add_option("--output", cfg.output, "report format: json or csv");
  sub->add_option("--out", cfg.out_path, "write the report to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact relation suites, spectra, and decompositions for deformed "
               "dual-pair operators on dihedral standard modules"};
  app.require_subcommand(1);
  howe::RunConfig cfg;

  CLI::App* verify = app.add_subcommand("verify", "run exact relation suites");
  add_common(verify, cfg);
  verify->add_option("--suite", cfg.suite, "sl2, u11, u21, scasimir, or all");
  add_common(app.add_subcommand("spectrum", "per-degree angular spectra on harmonics"), cfg);
  add_common(app.add_subcommand("spinor", "monogenic cells and decomposition round-trips"), cfg);
  add_common(app.add_subcommand("gram", "contravariant Gram positivity scan"), cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const auto t0 = std::chrono::steady_clock::now();
  howe::Report rep;
  try {
    rep = howe::run_command(cfg);
  } catch (const howe::ConfigError& e) {
    std::fprintf(stderr, "howe: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "howe: %s\n", e.what());
    return 1;
  }

  const std::string payload = howe::render(rep, cfg.output);
  if (cfg.out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "howe: cannot write '%s'\n", cfg.out_path.c_str());
      return 2;
    }
    f << payload;
  }

  // Timing goes to stderr so the payload stays byte-reproducible.
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  const howe::ReportSummary s = rep.summary();
  std::fprintf(stderr, "howe %s: %ld entries, %ld passed, %ld failed, %ld skipped (%lld ms)\n",
               cfg.command.c_str(), s.total, s.passed, s.failed, s.skipped,
               static_cast<long long>(ms));
  return howe::exit_code(rep);
}
