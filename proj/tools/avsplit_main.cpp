#include <CLI11.hpp>

#include <iostream>

#include "avsplit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"avsplit: splitting of monodromy groups of products of abelian varieties"};
  app.require_subcommand(1);

  avsplit::CliConfig config;
  std::string format = "text";
  long long characteristic = -1;
  bool ordinary = false;

  auto add_common = [&](CLI::App* sub, bool takes_catalog) {
    sub->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (takes_catalog) {
      sub->add_option("input", config.input_path, "catalog file (defaults to stdin)");
      sub->add_option("--char", characteristic, "override the base field characteristic");
      sub->add_flag("--ordinary", ordinary, "declare ordinary reduction in dimension 1");
    }
  };

  auto* validate = app.add_subcommand("validate", "check a catalog of factor descriptors");
  add_common(validate, true);
  auto* classify = app.add_subcommand("classify", "candidate group models per factor");
  add_common(classify, true);
  auto* decide = app.add_subcommand("decide", "finest provable splitting of the product");
  add_common(decide, true);
  auto* mt = app.add_subcommand("mt", "Mumford-Tate verdict for total dimension <= 5");
  add_common(mt, true);

  auto* table = app.add_subcommand("table", "minuscule weight catalog");
  add_common(table, false);
  table->add_option("--max-rank", config.max_rank, "largest rank to list")->check(CLI::Range(1, 32));

  auto* phi0 = app.add_subcommand("phi0", "short-root restriction of a root system sum");
  add_common(phi0, false);
  phi0->add_option("sum", config.inline_input, "root system sum, e.g. \"A3+B2+2*A1\"");
  phi0->add_flag("--preimage", config.preimage, "also list all sums restricting to the input");
  phi0->add_option("--max-rank", config.max_rank, "rank bound for the preimage search")
      ->check(CLI::Range(1, 64));

  auto* oracle = app.add_subcommand("oracle", "verify the splitting criterion on fixtures");
  add_common(oracle, false);
  oracle->add_option("input", config.input_path, "fixture file (defaults to stdin)");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) config.subcommand = avsplit::Subcommand::validate;
  if (classify->parsed()) config.subcommand = avsplit::Subcommand::classify;
  if (decide->parsed()) config.subcommand = avsplit::Subcommand::decide;
  if (mt->parsed()) config.subcommand = avsplit::Subcommand::mt;
  if (table->parsed()) config.subcommand = avsplit::Subcommand::table;
  if (phi0->parsed()) config.subcommand = avsplit::Subcommand::phi0;
  if (oracle->parsed()) config.subcommand = avsplit::Subcommand::oracle;

  config.format = format == "json" ? avsplit::OutputFormat::json : avsplit::OutputFormat::text;
  if (characteristic >= 0) config.characteristic = characteristic;
  if (ordinary) config.ordinary = true;

  return avsplit::run(config, std::cin, std::cout, std::cerr);
}
