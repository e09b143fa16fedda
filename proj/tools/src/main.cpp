#include <CLI11.hpp>

#include <iostream>

#include "cherednik/error.hpp"
#include "cherednik_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace cherednik;
  cli::RunConfig cfg;
  std::string relation;
  std::string format = "json";

  CLI::App app{"Exact computations for rational Cherednik algebras of G(m,p,n)", "cherednik-lab"};
  app.add_option("command", cfg.command, "Command to run")->required()->check(CLI::IsMember(cli::command_names()));
  app.add_option("--m", cfg.m, "Order of the roots of unity")->required();
  app.add_option("--p", cfg.p, "Divisor of m")->required();
  app.add_option("--n", cfg.n, "Rank")->required();
  app.add_option("--relation", relation, "Parameter relation: none, unit or main")
      ->check(CLI::IsMember({"none", "unit", "main"}));
  app.add_option("--seed", cfg.seed, "Seed for parameter sampling (mt19937_64)");
  app.add_option("--max-degree", cfg.max_degree, "Degree bound for dunkl-check and embed-check");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!relation.empty()) cfg.relation = parse_relation(relation);
  cfg.format = format == "tsv" ? cli::Format::tsv : cli::Format::json;

  try {
    const auto result = cli::run_command(cfg);
    cli::write_result(std::cout, result, cfg.format);
    if (!result.ok) std::cerr << cfg.command << ": verification failed\n";
    return result.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << '\n';
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return 1;
  }
}
