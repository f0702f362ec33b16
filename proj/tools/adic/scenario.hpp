#pragma once

// Declarative JSON scenarios: named inputs plus an ordered command list.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adic/json_io.hpp"

namespace adic::cli {

inline constexpr const char* kReportVersion = "1";

enum class Format { Json, Text };

struct RunOptions {
  Format format = Format::Json;
  std::optional<std::uint64_t> seed;
  std::string source_name;
};

struct DotGraph {
  std::string name;
  std::string text;
};

struct RunResult {
  int exit_code = 0;
  std::string output;  // report on stdout
  std::string error;   // message on stderr
  std::vector<DotGraph> dot;
};

// Exit codes: 0 success, 1 schema error, 2 domain error.
RunResult run_scenario(const std::string& text, const RunOptions& opts);

std::optional<Format> parse_format(const std::string& s);

}  // namespace adic::cli
