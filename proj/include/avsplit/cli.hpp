#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace avsplit {

enum class Subcommand { validate, classify, decide, mt, table, phi0, oracle };
enum class OutputFormat { text, json };

struct CliConfig {
  Subcommand subcommand = Subcommand::validate;
  std::string input_path;        // file input; empty means stdin
  std::string inline_input;      // positional argument (phi0 sum string)
  OutputFormat format = OutputFormat::text;
  int max_rank = 12;
  bool preimage = false;
  std::optional<long long> characteristic;  // overrides the catalog context
  std::optional<bool> ordinary;
};

// Runs one subcommand. Exit codes: 0 decided/ok, 2 inconclusive, 1 invalid
// input or unsupported request. Output is deterministic for a given input.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace avsplit
