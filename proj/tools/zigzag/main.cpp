#include <cstdio>
#include <exception>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace zigzag::cli;
  CLI::App app{"Frustrated spin-S zig-zag ladder: exact diagonalization, mean field, RPA and perturbation sweeps"};
  app.name("zigzag");
  RunConfig cfg;
  try {
    register_commands(app, cfg);
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "zigzag: %s\n", e.what());
    return 1;
  }
  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (!cfg.config_path.empty()) apply_config_file(*sub, cfg);
    const Table table = build_table(cfg);
    return run_table(table, cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "zigzag: %s\n", e.what());
    return 1;
  }
}
