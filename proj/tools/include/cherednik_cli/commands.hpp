#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/group.hpp"
#include "cherednik/relation.hpp"
#include "cherednik_cli/serialize.hpp"

namespace cherednik::cli {

enum class Format { json, tsv };

struct RunConfig {
  std::string command;
  int m = 0;
  int p = 0;
  int n = 0;
  std::optional<Relation> relation;  // unset: the command's default
  std::uint64_t seed = 1;
  std::optional<int> max_degree;
  Format format = Format::json;

  /// Checks the triple; throws UsageError.
  GroupParams group() const;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
  Json json;
  std::optional<Table> table;
  bool ok = true;
};

const std::vector<std::string>& command_names();

/// Dispatches on cfg.command. Throws UsageError for an unknown command or an
/// invalid configuration.
CommandResult run_command(const RunConfig& cfg);

/// Writes JSON or TSV; TSV is only defined for commands with a table.
void write_result(std::ostream& os, const CommandResult& r, Format format);

}  // namespace cherednik::cli
